#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

// Determinant by Bareiss fraction-free elimination: every division is exact,
// everything stays in Int.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Hankel transform: h_n = det(s_{i+j})_{0<=i,j<=n} for n = 0..m-1.
inline std::vector<Int> hankel(std::span<const Int> seq, std::size_t m) {
    if (m == 0) return {};
    if (seq.size() < 2 * m - 1)
        fail(Errc::insufficient_terms, "Hankel transform of " + std::to_string(m) +
                                           " terms needs " + std::to_string(2 * m - 1) +
                                           " sequence terms");
    std::vector<Int> out(m);
    for (std::size_t n = 0; n < m; ++n) {
        std::vector<std::vector<Int>> h(n + 1, std::vector<Int>(n + 1));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) h[i][j] = seq[i + j];
        out[n] = bareiss_det(std::move(h));
    }
    return out;
}

// INVERT transform: g -> g / (1 - x g).
inline Series invert_transform(const Series& g) {
    Series xg = g.shifted_up(1).truncated(g.order());
    return g / (Series::one(g.order()) - xg);
}

// A continued fraction with explicit coefficient lists.
//   jacobi: 1/(1 - b0 x - lam1 x^2/(1 - b1 x - lam2 x^2/(...)))
//   thron:  1/(1 - c0 x - d1 x /(1 - c1 x - d2 x /(...)))
struct CFSpec {
    enum class Kind { jacobi, thron };
    Kind kind = Kind::jacobi;
    std::vector<Rat> b_or_c;    // b_0, b_1, ...   (resp. c_0, c_1, ...)
    std::vector<Rat> lam_or_d;  // lam_1, lam_2, ... (resp. d_1, d_2, ...)
};

namespace detail {

inline Series cf_eval_depth(const CFSpec& spec, std::size_t depth, std::size_t order) {
    Series u = Series::one(order);  // finite tail
    std::size_t shift = spec.kind == CFSpec::Kind::jacobi ? 2 : 1;
    for (std::size_t k = depth; k-- > 0;) {
        Series level = Series::one(order) - spec.b_or_c[k] * Series::x(order);
        Series coupling = spec.lam_or_d[k] * u;
        level = level - coupling.shifted_up(shift).truncated(order);
        u = level.reciprocal();
    }
    return u;
}

}  // namespace detail

// Evaluates the continued fraction at the full depth the coefficient lists
// allow, and certifies the truncation by checking that one level less gives
// the same first `order` coefficients.
inline Series cf_eval(const CFSpec& spec, std::size_t order) {
    std::size_t depth = std::min(spec.b_or_c.size(), spec.lam_or_d.size());
    if (depth == 0) fail(Errc::insufficient_depth, "empty continued fraction");
    Series full = detail::cf_eval_depth(spec, depth, order);
    if (depth >= 2) {
        Series less = detail::cf_eval_depth(spec, depth - 1, order);
        if (!full.equal_to(less, order))
            fail(Errc::insufficient_depth,
                 "continued fraction depth " + std::to_string(depth) +
                     " does not determine the first " + std::to_string(order) + " coefficients");
    } else if (order > (spec.kind == CFSpec::Kind::jacobi ? 2u : 1u)) {
        fail(Errc::insufficient_depth, "continued fraction depth 1 is never enough here");
    }
    return full;
}

// Viskovatov-style J-fraction extraction: peel one level at a time from
//   g = 1/(1 - b0 x - lam1 x^2 g1),   g(0) = 1.
// A vanishing remainder means the fraction terminates (all later b, lam are
// zero); a vanishing lam with nonzero remainder means some leading principal
// Hankel determinant of the coefficient sequence is zero.
inline CFSpec jfraction_extract(const Series& g, std::size_t depth) {
    if (g[0] != 1)
        fail(Errc::zero_constant_term, "J-fraction extraction needs g(0) = 1");
    if (g.order() < 2 * depth + 1)
        fail(Errc::order_exceeded, "J-fraction extraction to depth " + std::to_string(depth) +
                                       " needs order >= " + std::to_string(2 * depth + 1));
    CFSpec out;
    out.kind = CFSpec::Kind::jacobi;
    Series cur = g;
    for (std::size_t d = 0; d < depth; ++d) {
        if (cur.order() < 3) fail(Errc::order_exceeded, "series exhausted during extraction");
        Series h = Series::one(cur.order()) - cur.reciprocal();
        Rat b0 = h[1];
        Series rem = h - b0 * Series::x(cur.order());
        out.b_or_c.push_back(b0);
        if (rem.is_zero()) {  // terminating fraction
            out.lam_or_d.push_back(0);
            cur = Series::one(std::max<std::size_t>(cur.order() - 2, 3));
            continue;
        }
        Rat lam = rem[2];
        if (lam == 0)
            fail(Errc::zero_hankel, "vanishing Hankel determinant at depth " + std::to_string(d));
        out.lam_or_d.push_back(lam);
        cur = rem.shifted_down(2) * Series::constant(Rat(1) / lam, rem.order() - 2);
    }
    return out;
}

// s_n s_{n-4} = A s_{n-1} s_{n-3} + B s_{n-2}^2 for every n with all five
// terms available.
inline bool somos4_check(std::span<const Int> seq, const Int& a, const Int& b) {
    if (seq.size() < 5) fail(Errc::insufficient_terms, "Somos-4 check needs at least 5 terms");
    for (std::size_t n = 4; n < seq.size(); ++n)
        if (seq[n] * seq[n - 4] != a * seq[n - 1] * seq[n - 3] + b * seq[n - 2] * seq[n - 2])
            return false;
    return true;
}

}  // namespace riordan
