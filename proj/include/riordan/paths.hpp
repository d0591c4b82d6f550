#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

struct Step {
    long dx = 0;
    long dy = 0;
    Int weight = 1;  // color count; may be negative for formal weights

    bool operator==(const Step& o) const { return dx == o.dx && dy == o.dy && weight == o.weight; }
};

enum class Region { triangle, quadrant, halfplane };

// A weighted step multiset with a region constraint.  `levels` overrides the
// step set at specific y-levels; unmapped levels use `steps`.  A step belongs
// to the level it ARRIVES at: a step (dx,dy) into (n,k) is usable iff it is
// in the step set of level k.
struct StepSpec {
    std::vector<Step> steps;
    Region region = Region::triangle;
    std::map<long, std::vector<Step>> levels;

    const std::vector<Step>& steps_at(long level) const {
        auto it = levels.find(level);
        return it == levels.end() ? steps : it->second;
    }

    bool in_region(long n, long k) const {
        switch (region) {
            case Region::triangle: return 0 <= k && k <= n;
            case Region::quadrant: return n >= 0 && k >= 0;
            case Region::halfplane: return k >= 0;
        }
        return false;
    }

    std::vector<Step> all_steps() const {
        std::vector<Step> all = steps;
        for (const auto& [lvl, ss] : levels) all.insert(all.end(), ss.begin(), ss.end());
        return all;
    }
};

// An integer linear functional strictly positive on every step.  Its
// existence certifies that all path counts are finite and gives the DP a
// well-founded evaluation order.
struct Potential {
    long alpha = 0;
    long beta = 0;
    long value(long n, long k) const { return alpha * n + beta * k; }
};

// Smallest (by |alpha|+|beta|, ties by alpha, then beta) pair in the
// [-8,8]^2 box with alpha dx + beta dy >= 1 for every step in scope.
inline Potential find_potential(const StepSpec& spec) {
    auto all = spec.all_steps();
    if (all.empty()) fail(Errc::no_potential, "empty step set");
    for (long size = 0; size <= 16; ++size)
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b) {
                if (std::labs(a) + std::labs(b) != size) continue;
                bool ok = true;
                for (const auto& s : all)
                    if (a * s.dx + b * s.dy < 1) { ok = false; break; }
                if (ok) return {a, b};
            }
    fail(Errc::no_potential,
         "no potential functional in the search box; path counts may be infinite");
}

namespace detail {

inline IntMatrix count_paths_impl(const StepSpec& spec, std::size_t n, const Potential& phi) {
    long N = static_cast<long>(n);
    long phimax = 0;
    for (long i = 0; i < N; ++i)
        for (long k = 0; k < N; ++k)
            if (spec.in_region(i, k)) phimax = std::max(phimax, phi.value(i, k));
    long maxd = 1;
    for (const auto& s : spec.all_steps())
        maxd = std::max({maxd, std::labs(s.dx), std::labs(s.dy)});
    // Any point on a path into the window has potential in [0, phimax] and is
    // reached in at most phimax steps, so its coordinates are bounded by D.
    long D = phimax * maxd + 1;
    long lo = -D, hi = std::max(D, N);
    long side = hi - lo + 1;

    struct Cell {
        long phi, n, k;
    };
    std::vector<Cell> cells;
    for (long i = lo; i <= hi; ++i)
        for (long k = lo; k <= hi; ++k) {
            if (!spec.in_region(i, k)) continue;
            long v = phi.value(i, k);
            if (v < 0 || v > phimax) continue;
            cells.push_back({v, i, k});
        }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.phi < b.phi || (a.phi == b.phi && (a.n < b.n || (a.n == b.n && a.k < b.k)));
    });

    std::vector<Int> t(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
    auto idx = [&](long i, long k) {
        return static_cast<std::size_t>(i - lo) * static_cast<std::size_t>(side) +
               static_cast<std::size_t>(k - lo);
    };
    auto value = [&](long i, long k) -> const Int& {
        static const Int zero = 0;
        if (i < lo || i > hi || k < lo || k > hi) return zero;
        return t[idx(i, k)];
    };

    for (const auto& c : cells) {
        Int acc = (c.n == 0 && c.k == 0) ? 1 : 0;
        for (const auto& s : spec.steps_at(c.k)) {
            long pn = c.n - s.dx, pk = c.k - s.dy;
            if (!spec.in_region(pn, pk)) continue;
            const Int& prev = value(pn, pk);
            if (prev != 0) acc += s.weight * prev;
        }
        if (acc != 0) t[idx(c.n, c.k)] = std::move(acc);
    }

    IntMatrix out(n, n,
                  spec.region == Region::triangle ? MatShape::lower_triangular : MatShape::square);
    for (long i = 0; i < N; ++i)
        for (long k = 0; k < N; ++k)
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = value(i, k);
    return out;
}

}  // namespace detail

// Weighted count of S-paths from (0,0) to every point of the N x N window,
// by dynamic programming in increasing potential order.
inline IntMatrix count_paths(const StepSpec& spec, std::size_t n) {
    return detail::count_paths_impl(spec, n, find_potential(spec));
}

// Recount with an explicit potential; any valid certificate yields the same
// counts, only the evaluation order differs.
inline IntMatrix count_paths(const StepSpec& spec, std::size_t n, const Potential& phi) {
    for (const auto& s : spec.all_steps())
        if (phi.alpha * s.dx + phi.beta * s.dy < 1)
            fail(Errc::no_potential, "supplied potential is not valid for this step set");
    return detail::count_paths_impl(spec, n, phi);
}

// Row sums of the path matrix: paths from the origin to any point of row n.
inline std::vector<Int> left_factors(const StepSpec& spec, std::size_t n) {
    return count_paths(spec, n).row_sums();
}

// Checks a factorization
//   (1 - h(x)/y) * 1/(1 - sum w x^dx y^dy) = sum_{k>=0} y^k g(x) f(x)^k :
// the y-Laurent expansion of the left side must vanish on y^[window_lo, -1]
// and match the columns of (g, f) on y^[0, window_hi], to x-order order_x.
// Computed with series-in-x coefficients on a potential-bounded monomial
// set; only steps with dx >= 0 are supported (x-truncation is unsound
// otherwise).
inline bool verify_factorization(const RArray& r, const StepSpec& spec, const Series& h,
                                 std::size_t order_x, long window_lo, long window_hi) {
    if (!spec.levels.empty())
        fail(Errc::usage_error, "factorization checks take a single step set");
    for (const auto& s : spec.steps)
        if (s.dx < 0) fail(Errc::usage_error, "factorization checks need dx >= 0 for every step");
    if (window_lo > 0 || window_hi < 0)
        fail(Errc::usage_error, "factorization window must contain 0");
    Potential phi = find_potential(spec);
    long X = static_cast<long>(order_x);
    long maxdy = 1;
    for (const auto& s : spec.steps) maxdy = std::max(maxdy, std::labs(s.dy));
    // cap = largest potential of any monomial we must get right; a monomial
    // of P^m lies in [0, cap] or can never re-enter the window.
    long cap = 0;
    for (long nn = 0; nn < X; ++nn)
        for (long j = window_lo; j <= window_hi + 1; ++j)
            cap = std::max(cap, phi.value(nn, j));
    // P^m monomials satisfy m <= potential <= cap, hence |j| <= cap * maxdy.
    long jlo = std::min(window_lo, -cap * maxdy);
    long jhi = std::max(window_hi + 1, cap * maxdy);
    std::size_t W = static_cast<std::size_t>(jhi - jlo + 1);
    using Slice = std::vector<std::vector<Rat>>;  // [j - jlo][x power]
    auto zero = [&] { return Slice(W, std::vector<Rat>(order_x)); };
    auto in_set = [&](long nn, long j) {
        long v = phi.value(nn, j);
        return 0 <= v && v <= cap;
    };
    Slice total = zero(), power = zero();
    power[static_cast<std::size_t>(-jlo)][0] = 1;
    for (long m = 0; m <= cap + 1; ++m) {
        bool any = false;
        for (std::size_t j = 0; j < W && !any; ++j)
            for (std::size_t nn = 0; nn < order_x && !any; ++nn)
                if (power[j][nn] != 0) any = true;
        if (!any) break;
        for (std::size_t j = 0; j < W; ++j)
            for (std::size_t nn = 0; nn < order_x; ++nn) total[j][nn] += power[j][nn];
        Slice next = zero();
        for (const auto& s : spec.steps)
            for (std::size_t j = 0; j < W; ++j) {
                long jo = static_cast<long>(j) + jlo + s.dy;
                if (jo < jlo || jo > jhi) continue;
                for (long nn = 0; nn + s.dx < X && nn < X; ++nn) {
                    const Rat& v = power[j][static_cast<std::size_t>(nn)];
                    if (v == 0) continue;
                    if (!in_set(nn + s.dx, jo)) continue;
                    next[static_cast<std::size_t>(jo - jlo)][static_cast<std::size_t>(nn + s.dx)] +=
                        Rat(s.weight) * v;
                }
            }
        power = std::move(next);
    }
    // multiply by (1 - h/y): T_j = S_j - h * S_{j+1}
    Series ht = h.truncated(order_x);
    auto t_at = [&](long j) {
        std::vector<Rat> out(order_x);
        if (j >= jlo && j <= jhi) out = total[static_cast<std::size_t>(j - jlo)];
        if (j + 1 >= jlo && j + 1 <= jhi) {
            const auto& up = total[static_cast<std::size_t>(j + 1 - jlo)];
            for (std::size_t a = 0; a < order_x; ++a) {
                if (ht[a] == 0) continue;
                for (std::size_t b = 0; a + b < order_x; ++b) out[a + b] -= ht[a] * up[b];
            }
        }
        return out;
    };
    for (long j = window_lo; j < 0; ++j) {
        auto row = t_at(j);
        for (const auto& v : row)
            if (v != 0) return false;
    }
    Series col = r.g().truncated(order_x);
    Series f = r.f().truncated(order_x);
    for (long j = 0; j <= window_hi; ++j) {
        auto row = t_at(j);
        for (std::size_t a = 0; a < order_x; ++a)
            if (row[a] != col[a]) return false;
        col = col * f;
    }
    return true;
}

}  // namespace riordan
