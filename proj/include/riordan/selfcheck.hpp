#pragma once

// Built-in verification suite.  Every check constructs its own inputs from
// embedded definitions and compares against frozen golden values, exactly
// (tolerance zero).  The CLI `check` command prints one line per check; the
// acceptance runner aggregates by group.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/characterization.hpp"
#include "riordan/parser.hpp"
#include "riordan/paths.hpp"
#include "riordan/series.hpp"
#include "riordan/transforms.hpp"

namespace riordan::selfcheck {

struct Outcome {
    std::string id;
    bool pass;
    std::string note;
};

struct GroupOutcome {
    std::string group;
    bool pass;
    std::size_t checks;
};

namespace detail {

using Table = std::vector<std::vector<long long>>;

// Golden tables list each row only up to the last nonzero entry; missing
// entries are zero.
inline bool match(const IntMatrix& m, const Table& want) {
    if (m.rows() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int expect = j < want[i].size() ? Int(want[i][j]) : Int(0);
            if (m.at(i, j) != expect) return false;
        }
    return true;
}

inline bool match_seq(const std::vector<Int>& got, const std::vector<long long>& want) {
    if (got.size() < want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != Int(want[i])) return false;
    return true;
}

inline std::vector<Int> prefix(const std::vector<Int>& v, std::size_t n) {
    return std::vector<Int>(v.begin(), v.begin() + std::min(n, v.size()));
}

inline std::vector<Int> series_ints(const Series& s, std::size_t n) {
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = require_integer(s.coeff(i), "sequence term");
    return out;
}

// splitmix64: tiny, deterministic across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

class Suite {
public:
    explicit Suite(std::string filter) : filter_(std::move(filter)) {}

    void check(const std::string& id, const std::function<bool()>& fn) {
        if (!filter_.empty() && id.find(filter_) == std::string::npos) return;
        try {
            bool ok = fn();
            results_.push_back({id, ok, ok ? "" : "value mismatch"});
        } catch (const std::exception& e) {
            results_.push_back({id, false, e.what()});
        }
    }

    std::vector<Outcome> take() { return std::move(results_); }

private:
    std::string filter_;
    std::vector<Outcome> results_;
};

inline Series expr(const std::string& text, std::size_t order, const Environment& env = {}) {
    return parse_series(text, order, env);
}

inline RArray array(const std::string& g, const std::string& f, std::size_t order,
                    const Environment& env = {}) {
    return RArray(expr(g, order, env), expr(f, order, env));
}

inline StepSpec steps(std::vector<Step> s, Region r = Region::triangle) {
    return StepSpec{std::move(s), r, {}};
}

inline AMatrixSpec rs_spec(long r, long s) {
    AMatrixSpec spec;
    spec.rows = {{1, Int(r)}};
    spec.rho = {Int(s)};
    return spec;
}

inline AMatrixSpec abg_spec(long al, long be, long ga) {
    AMatrixSpec spec;
    spec.rows = {{1}, {0, Int(al), Int(be)}};
    spec.rho = {Int(ga)};
    return spec;
}

inline std::string g_rs_expr(long r, long s) {
    auto n = [](long v) { return std::to_string(v); };
    return "(1-" + n(r) + "*x-sqrt(1-" + n(2 * (r + 2 * s)) + "*x+" + n(r * r) +
           "*x^2))/(2*" + n(s) + "*x)";
}

inline std::string f_abg_expr(long al, long be, long ga) {
    auto n = [](long v) { return std::to_string(v); };
    return "(1-" + n(al) + "*x^2-sqrt(1-" + n(4 * ga) + "*x-" + n(2 * al) + "*x^2-" +
           n(4 * be) + "*x^3+" + n(al * al) + "*x^4))/(2*(" + n(ga) + "+" + n(be) + "*x^2))";
}

// f equals the equation right-hand side coefficient-exactly on the shared order.
inline bool residual_vanishes(const AMatrixSpec& spec, const Series& f, std::size_t order) {
    Series rhs = riordan::detail::amatrix_rhs(spec, f);
    std::size_t n = std::min({order, rhs.order(), f.order()});
    return n >= order && f.equal_to(rhs, n);
}

// ---------------------------------------------------------------- golden matrices

inline void golden_matrices(Suite& s) {
    const std::size_t W = 40;  // enough for 7x7 displays, rectifications included

    s.check("golden-matrices/pascal", [&] {
        return match(array("1/(1-x)", "x/(1-x)", W).matrix(7),
                     {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}, {1, 4, 6, 4, 1},
                      {1, 5, 10, 10, 5, 1}, {1, 6, 15, 20, 15, 6, 1}});
    });
    s.check("golden-matrices/delannoy-triangle", [&] {
        return match(array("1/(1-x)", "x*(1+x)/(1-x)", W).matrix(7),
                     {{1}, {1, 1}, {1, 3, 1}, {1, 5, 5, 1}, {1, 7, 13, 7, 1},
                      {1, 9, 25, 25, 9, 1}, {1, 11, 41, 63, 41, 11, 1}});
    });
    const Table fibstep_rows = {{1}, {1, 1}, {2, 3, 1}, {3, 7, 5, 1}, {5, 15, 16, 7, 1},
                                {8, 30, 43, 29, 9, 1}, {13, 58, 104, 95, 46, 11, 1}};
    s.check("golden-matrices/fibstep-triangle", [&] {
        return match(array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W).matrix(7), fibstep_rows);
    });
    s.check("golden-matrices/fibstep-reversal", [&] {
        return match(array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W).reverse(7),
                     {{1}, {1, 1}, {1, 3, 2}, {1, 5, 7, 3}, {1, 7, 16, 15, 5},
                      {1, 9, 29, 43, 30, 8}, {1, 11, 46, 95, 104, 58, 13}});
    });
    s.check("golden-matrices/pascal-stretched", [&] {
        return match(pair_matrix(array("1/(1-x)", "x/(1-x)", W).stretch(), 7),
                     {{1}, {1}, {1, 1}, {1, 2}, {1, 3, 1}, {1, 4, 3}, {1, 5, 6, 1}});
    });
    const Table stretched_delannoy = {{1}, {1}, {1, 1}, {1, 3}, {1, 5, 1}, {1, 7, 5},
                                      {1, 9, 13, 1}};
    s.check("golden-matrices/delannoy-stretched", [&] {
        return match(pair_matrix(array("1/(1-x)", "x*(1+x)/(1-x)", W).stretch(), 7),
                     stretched_delannoy);
    });
    s.check("golden-matrices/delannoy-stretched-reversal", [&] {
        return match(
            mat_reverse(pair_matrix(array("1/(1-x)", "x*(1+x)/(1-x)", W).stretch(), 7)),
            {{1}, {0, 1}, {0, 1, 1}, {0, 0, 3, 1}, {0, 0, 1, 5, 1}, {0, 0, 0, 5, 7, 1},
             {0, 0, 0, 1, 13, 9, 1}});
    });
    const Table delannoy_square = {{1, 1, 1, 1, 1, 1, 1},
                                   {1, 3, 5, 7, 9, 11, 13},
                                   {1, 5, 13, 25, 41, 61, 85},
                                   {1, 7, 25, 63, 129, 231, 377},
                                   {1, 9, 41, 129, 321, 681, 1289},
                                   {1, 11, 61, 231, 681, 1683, 3653},
                                   {1, 13, 85, 377, 1289, 3653, 8989}};
    s.check("golden-matrices/delannoy-square", [&] {
        IntMatrix rect = array("1/(1-x)", "x*(1+x)/(1-x)", W).rectify(7);
        IntMatrix sym =
            reverse_symmetrize(array("1/sqrt(1-6*x+x^2)", "(1-x-sqrt(1-6*x+x^2))/2", W), 7);
        return match(rect, delannoy_square) && match(sym, delannoy_square);
    });
    const Table extended_square = {{1, 1, 1, 1, 1, 1, 1},
                                   {1, 3, 5, 7, 9, 11, 13},
                                   {1, 5, 14, 27, 44, 65, 90},
                                   {1, 7, 27, 71, 147, 263, 427},
                                   {1, 9, 44, 147, 379, 816, 1550},
                                   {1, 11, 65, 263, 816, 2082, 4595},
                                   {1, 13, 90, 427, 1550, 4595, 11651}};
    s.check("golden-matrices/extended-square", [&] {
        IntMatrix dp = count_paths(
            steps({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 2, 1}}, Region::quadrant), 7);
        IntMatrix sym = reverse_symmetrize(array("1/sqrt(1-6*x-x^2+2*x^3+x^4)",
                                                 "(1-x-x^2-sqrt(1-6*x-x^2+2*x^3+x^4))/2", W),
                                           7);
        return match(dp, extended_square) && match(sym, extended_square);
    });
    s.check("golden-matrices/diagonal-triangle", [&] {
        return match(count_paths(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {4, 2, 1}}), 7),
                     {{1}, {1, 1}, {1, 3, 1}, {1, 5, 5, 1}, {1, 7, 14, 7, 1},
                      {1, 9, 27, 27, 9, 1}, {1, 11, 44, 71, 44, 11, 1}});
    });
    const Table fibstep_tri = {{1}, {1, 2}, {2, 5, 4}, {3, 12, 16, 8}, {5, 25, 49, 44, 16},
                               {8, 50, 127, 166, 112, 32}, {13, 96, 301, 513, 504, 272, 64}};
    s.check("golden-matrices/fibstep-triangulated", [&] {
        RArray direct = array("1/(1-x-x^2)", "x*(2+x)/(1-x-x^2)", W);
        RArray via = array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W).triangulate();
        return match(direct.matrix(7), fibstep_tri) && match(via.matrix(7), fibstep_tri);
    });
    const Table delannoy_tri = {{1}, {1, 2}, {1, 4, 4}, {1, 6, 12, 8}, {1, 8, 24, 32, 16},
                                {1, 10, 40, 80, 80, 32}, {1, 12, 60, 160, 240, 192, 64}};
    s.check("golden-matrices/delannoy-triangulated", [&] {
        RArray direct = array("1/(1-x)", "2*x/(1-x)", W);
        RArray via = array("1/(1-x)", "x*(1+x)/(1-x)", W).triangulate();
        return match(direct.matrix(7), delannoy_tri) && match(via.matrix(7), delannoy_tri);
    });

    Environment env;
    env.insert_or_assign("c", expr("(1-sqrt(1-4*x))/(2*x)", W + 1));
    const Table catalan_rows = {{1}, {1, 1}, {2, 2, 1}, {5, 5, 3, 1}, {14, 14, 9, 4, 1},
                                {42, 42, 28, 14, 5, 1}, {132, 132, 90, 48, 20, 6, 1}};
    s.check("golden-matrices/catalan", [&] {
        return match(array("c", "x*c", W, env).matrix(7), catalan_rows);
    });
    const Table catalan_once = {{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1},
                                {42, 90, 75, 35, 9, 1}, {132, 297, 275, 154, 54, 11, 1}};
    s.check("golden-matrices/catalan-once-triangulated", [&] {
        RArray direct = array("c", "x*c^2", W, env);
        RArray via = array("c", "x*c", W, env).triangulate();
        return match(direct.matrix(7), catalan_once) && match(via.matrix(7), catalan_once);
    });
    const Table catalan_twice = {{1}, {1, 2}, {2, 7, 4}, {5, 23, 24, 8}, {14, 76, 109, 68, 16},
                                 {42, 255, 449, 394, 176, 32},
                                 {132, 869, 1770, 1947, 1240, 432, 64}};
    s.check("golden-matrices/catalan-twice-triangulated", [&] {
        RArray direct = array("c", "c^2-1", W, env);
        RArray via = array("c", "x*c", W, env).triangulate().triangulate();
        return match(direct.matrix(7), catalan_twice) && match(via.matrix(7), catalan_twice);
    });
    const Table dyck_rows = {{1}, {0, 1}, {1, 0, 1}, {0, 2, 0, 1}, {2, 0, 3, 0, 1},
                             {0, 5, 0, 4, 0, 1}, {5, 0, 9, 0, 5, 0, 1}};
    s.check("golden-matrices/dyck", [&] {
        RArray direct = array("(1-sqrt(1-4*x^2))/(2*x^2)", "(1-sqrt(1-4*x^2))/(2*x)", W);
        RArray via = inverse(array("1/(1+x^2)", "x/(1+x^2)", W));
        return match(direct.matrix(7), dyck_rows) && match(via.matrix(7), dyck_rows);
    });
    s.check("golden-matrices/catalan-aerated", [&] {
        RArray dyck = array("(1-sqrt(1-4*x^2))/(2*x^2)", "(1-sqrt(1-4*x^2))/(2*x)", W);
        IntMatrix conj = mat_binomial_conjugate(dyck.rectify(7), 1, ConjDirection::inverse);
        return match(conj, {{1}, {}, {1, 1}, {}, {2, 3, 1}, {}, {5, 9, 5, 1}});
    });

    const std::string mt_g = "(1-x-sqrt(1-6*x+5*x^2))/(2*x*(1-x))";
    const Table mtilde_rows = {{1}, {2, 1}, {5, 5, 1}, {15, 21, 8, 1}, {51, 86, 46, 11, 1},
                               {188, 355, 235, 80, 14, 1}, {731, 1488, 1140, 489, 123, 17, 1}};
    s.check("golden-matrices/mtilde", [&] {
        RArray direct = array(mt_g, "(1-3*x-sqrt(1-6*x+5*x^2))/(2*x)", W);
        RArray via = inverse(array("(1+x)/(1+3*x+x^2)", "x/(1+3*x+x^2)", W));
        return match(direct.matrix(7), mtilde_rows) && match(via.matrix(7), mtilde_rows);
    });
    const Table t_rows = {{1}, {2, 3}, {5, 16, 9}, {15, 71, 78, 27}, {51, 304, 481, 324, 81},
                          {188, 1300, 2609, 2547, 1242, 243},
                          {731, 5604, 13317, 16678, 11853, 4536, 729}};
    s.check("golden-matrices/mtilde-triangulated", [&] {
        RArray direct = array(mt_g, "(1-3*x-2*x^2-sqrt(1-6*x+5*x^2))/(2*x^2)", W);
        RArray mtilde = array(mt_g, "(1-3*x-sqrt(1-6*x+5*x^2))/(2*x)", W);
        RArray via = mtilde * array("1", "x*(3+x)", W);
        return match(direct.matrix(7), t_rows) && match(via.matrix(7), t_rows);
    });

    s.check("golden-matrices/almost-level-1", [&] {
        AlmostR m(expr("1/(1-x)", W), expr("(1+x)/(1-x)^2", W), expr("x/(1-x)", W));
        return match(m.matrix(7),
                     {{1}, {1, 1}, {1, 3, 1}, {1, 5, 4, 1}, {1, 7, 9, 5, 1},
                      {1, 9, 16, 14, 6, 1}, {1, 11, 25, 30, 20, 7, 1}});
    });
    s.check("golden-matrices/almost-level-2", [&] {
        AlmostR m(expr("1/(1-x^2)", W), expr("(1+x)/(1-x^2)^2", W), expr("x*(1+x)/(1-x)", W));
        return match(m.matrix(7),
                     {{1}, {0, 1}, {1, 1, 1}, {0, 2, 3, 1}, {1, 2, 6, 5, 1},
                      {0, 3, 10, 14, 7, 1}, {1, 3, 15, 30, 26, 9, 1}});
    });
    s.check("golden-matrices/almost-level-3", [&] {
        // The (4,2) entry is 5: the displayed 1 contradicts the closed form,
        // the left-factor counts (15 at n=4) and the path recount.
        AlmostR m(expr("1-x*(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*(1-2*x-x^2))", W),
                  expr("-(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*x*(1-2*x-x^2))", W),
                  expr("(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)", W));
        return match(m.matrix(7),
                     {{1}, {0, 1}, {1, 1, 1}, {1, 3, 1, 1}, {3, 5, 5, 1, 1},
                      {5, 13, 7, 7, 1, 1}, {13, 25, 25, 9, 9, 1, 1}});
    });

    const Table schroeder_rows = {{1}, {2, 1}, {6, 4, 1}, {22, 16, 6, 1}, {90, 68, 30, 8, 1},
                                  {394, 304, 146, 48, 10, 1},
                                  {1806, 1412, 714, 264, 70, 12, 1}};
    s.check("golden-matrices/schroeder", [&] {
        return match(array("(1-x-sqrt(1-6*x+x^2))/(2*x)",
                           "(1-x-sqrt(1-6*x+x^2))/2", W).matrix(7),
                     schroeder_rows);
    });
    s.check("golden-matrices/gtilde", [&] {
        return match(array(mt_g, "(1-x-sqrt(1-6*x+5*x^2))/2", W).matrix(7),
                     {{1}, {2, 1}, {5, 3, 1}, {15, 10, 4, 1}, {51, 36, 16, 5, 1},
                      {188, 137, 65, 23, 6, 1}, {731, 543, 269, 103, 31, 7, 1}});
    });

    s.check("golden-matrices/schroeder-narayana", [&] {
        return match(named_matrix(NamedMatrix::schroeder_narayana, 7),
                     {{1}, {1, 1}, {2, 3, 1}, {5, 10, 6, 1}, {14, 35, 30, 10, 1},
                      {42, 126, 140, 70, 15, 1}, {132, 462, 630, 420, 140, 21, 1}});
    });
    const Table ternary_t = {{1}, {1, 1}, {3, 4, 1}, {12, 21, 10, 1}, {55, 120, 84, 20, 1},
                             {273, 715, 660, 252, 35, 1}, {1428, 4368, 5005, 2640, 630, 56, 1}};
    s.check("golden-matrices/ternary-schroeder", [&] {
        return match(named_matrix(NamedMatrix::ternary_schroeder, 7), ternary_t);
    });
    s.check("golden-matrices/ternary", [&] {
        Series t = solve_fixpoint("g", "1+x*g^3", W);
        return match(RArray(t, t.shifted_up(1).truncated(W)).matrix(7),
                     {{1}, {1, 1}, {3, 2, 1}, {12, 7, 3, 1}, {55, 30, 12, 4, 1},
                      {273, 143, 55, 18, 5, 1}, {1428, 728, 273, 88, 25, 6, 1}});
    });
    s.check("golden-matrices/ternary-narayana", [&] {
        IntMatrix conj = mat_binomial_conjugate(named_matrix(NamedMatrix::ternary_schroeder, 7),
                                                1, ConjDirection::inverse);
        return match(conj, {{1}, {0, 1}, {0, 2, 1}, {0, 4, 7, 1}, {0, 8, 30, 16, 1},
                            {0, 16, 104, 122, 30, 1}, {0, 32, 320, 660, 365, 50, 1}});
    });
}

// ---------------------------------------------------------------- golden sequences

inline void golden_sequences(Suite& s) {
    const std::size_t W = 44;
    Environment env;
    env.insert_or_assign("c", expr("(1-sqrt(1-4*x))/(2*x)", W + 1));

    s.check("golden-sequences/a002605", [&] {
        const std::vector<long long> want = {1, 2, 6, 16, 44, 120, 328, 896, 2448, 6688, 18272};
        RArray r = array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W);
        auto lf = left_factors(steps({{1, 0, 1}, {2, 0, 1}, {1, 1, 1}, {2, 1, 1}}), 11);
        return match_seq(r.row_sums(11), want) && match_seq(lf, want) &&
               match_seq(series_ints(expr("1/(1-2*x-2*x^2)", W), 11), want);
    });
    s.check("golden-sequences/tribonacci", [&] {
        const std::vector<long long> want = {1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274};
        RArray delannoy = array("1/(1-x)", "x*(1+x)/(1-x)", W);
        auto lf = left_factors(steps({{1, 0, 1}, {2, 1, 1}, {3, 1, 1}}), 11);
        auto stretched_rows = pair_matrix(delannoy.stretch(), 11).row_sums();
        return match_seq(delannoy.diagonal_sums(11), want) && match_seq(lf, want) &&
               match_seq(stretched_rows, want);
    });
    s.check("golden-sequences/a007482", [&] {
        const std::vector<long long> want = {1, 3, 11, 39, 139, 495, 1763, 6279, 22363, 79647,
                                             283667};
        RArray tri = array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W).triangulate();
        auto lf = left_factors(steps({{1, 0, 1}, {2, 0, 1}, {1, 1, 2}, {2, 1, 1}}), 11);
        // INVERT transform of the original array's left-factor counts.
        Series inv = invert_transform(expr("1/(1-2*x-2*x^2)", W));
        return match_seq(tri.row_sums(11), want) && match_seq(lf, want) &&
               match_seq(series_ints(inv, 11), want) &&
               inv.equal_to(expr("1/(1-3*x-2*x^2)", W), 20);
    });
    s.check("golden-sequences/catalan-twice-row-sums", [&] {
        const std::vector<long long> want = {1, 3, 13, 60, 283, 1348, 6454, 30992, 149091,
                                             718044, 3460818};
        return match_seq(array("c", "c^2-1", W, env).row_sums(11), want);
    });
    s.check("golden-sequences/catalan-twice-hankel", [&] {
        auto rs = array("c", "c^2-1", W, env).row_sums(17);
        auto h = hankel(rs, 9);
        if (!match_seq(h, {1, 4, 15, 56, 209, 780, 2911, 10864, 40545})) return false;
        for (std::size_t n = 2; n < h.size(); ++n)  // h_n = 4 h_{n-1} - h_{n-2}
            if (h[n] != 4 * h[n - 1] - h[n - 2]) return false;
        return true;
    });
    const std::string mt_g = "(1-x-sqrt(1-6*x+5*x^2))/(2*x*(1-x))";
    const std::string t_f = "(1-3*x-2*x^2-sqrt(1-6*x+5*x^2))/(2*x^2)";
    s.check("golden-sequences/t-row-sums", [&] {
        const std::vector<long long> want = {1, 5, 30, 191, 1241, 8129, 53448, 352097,
                                             2321962, 15322025, 101143706};
        return match_seq(array(mt_g, t_f, W).row_sums(11), want);
    });
    s.check("golden-sequences/t-hankel", [&] {
        auto rs = array(mt_g, t_f, W).row_sums(19);
        auto h = hankel(rs, 10);
        if (!match_seq(h, {1, 5, 24, 115, 551, 2640, 12649, 60605, 290376, 1391275}))
            return false;
        for (std::size_t n = 2; n < h.size(); ++n)  // h_n = 5 h_{n-1} - h_{n-2}
            if (h[n] != 5 * h[n - 1] - h[n - 2]) return false;
        return true;
    });
    s.check("golden-sequences/a006190", [&] {
        const std::vector<long long> want = {1, 3, 10, 33, 109, 360, 1189, 3927, 12970, 42837,
                                             141481};
        Series src = expr("1/(1-3*x-x^2)", W);
        if (!match_seq(series_ints(src, 11), want)) return false;
        // row sums of the triangulated matrix = image of this sequence
        RArray mtilde = array(mt_g, "(1-3*x-sqrt(1-6*x+5*x^2))/(2*x)", W);
        Series image = mtilde.apply(src);
        return match_seq(series_ints(image, 11),
                         {1, 5, 30, 191, 1241, 8129, 53448, 352097, 2321962, 15322025,
                          101143706});
    });
    s.check("golden-sequences/almost-1-row-sums", [&] {
        AlmostR m(expr("1/(1-x)", W), expr("(1+x)/(1-x)^2", W), expr("x/(1-x)", W));
        return match_seq(m.row_sums(11), {1, 2, 5, 11, 23, 47, 95, 191, 383, 767, 1535});
    });
    s.check("golden-sequences/almost-2-row-sums", [&] {
        AlmostR m(expr("1/(1-x^2)", W), expr("(1+x)/(1-x^2)^2", W), expr("x*(1+x)/(1-x)", W));
        return match_seq(m.row_sums(11), {1, 1, 3, 6, 15, 35, 85, 204, 493, 1189, 2871});
    });
    s.check("golden-sequences/almost-3-row-sums", [&] {
        AlmostR m(expr("1-x*(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*(1-2*x-x^2))", W),
                  expr("-(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*x*(1-2*x-x^2))", W),
                  expr("(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)", W));
        return match_seq(m.row_sums(11), {1, 1, 3, 6, 15, 34, 83, 194, 471, 1114, 2699});
    });
    s.check("golden-sequences/motzkin-shifted-row-sums", [&] {
        const std::vector<long long> want = {1, 2, 6, 18, 56, 176, 558, 1778, 5686, 18230,
                                             58558};
        Environment e2;
        e2.insert_or_assign("m", expr("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", W));
        RArray mm1 = array("m", "m-1", W, e2);
        RArray motzkin = array("m", "x*m", W, e2);
        Series fib_image = motzkin.apply(expr("1/(1-x-x^2)", W));
        return match_seq(mm1.row_sums(11), want) && match_seq(series_ints(fib_image, 11), want);
    });
    s.check("golden-sequences/cubic-row-sums", [&] {
        const std::vector<long long> want = {1, 2, 8, 44, 280, 1936, 14128, 107088, 834912};
        Series u = solve_fixpoint("u", "x+x*u+u^3/x", 12);
        Series g = u.shifted_down(1);
        return match_seq(named_matrix(NamedMatrix::ternary_schroeder, 9).row_sums(), want) &&
               match_seq(series_ints(g, 9), want);
    });
    s.check("golden-sequences/cubic-diagonal-sums", [&] {
        const std::vector<long long> want = {1, 1, 4, 16, 77, 403, 2228, 12800, 75653, 457022,
                                             2809266};
        Series u = solve_fixpoint("u", "x+x^2*u+u^3/x", 14);
        Series g = u.shifted_down(1);
        return match_seq(named_matrix(NamedMatrix::ternary_schroeder, 11).diagonal_sums(),
                         want) &&
               match_seq(series_ints(g, 11), want);
    });
    s.check("golden-sequences/a143330", [&] {
        return match_seq(named_matrix(NamedMatrix::schroeder_narayana, 8).diagonal_sums(),
                         {1, 1, 3, 8, 25, 83, 289, 1041});
    });
    s.check("golden-sequences/diagonal-triangle-row-sums", [&] {
        const std::vector<long long> want = {1, 2, 5, 12, 30, 74, 183, 452, 1117, 2760, 6820};
        auto lf = left_factors(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {4, 2, 1}}), 11);
        return match_seq(lf, want) &&
               match_seq(series_ints(expr("1/(1-2*x-x^2-x^4)", W), 11), want);
    });
    s.check("golden-sequences/jacobsthal", [&] {
        const std::vector<long long> want = {1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683};
        RArray tri = array("1/(1-x)", "2*x/(1-x)", W);
        auto lf = left_factors(steps({{1, 0, 1}, {2, 1, 2}}), 11);
        return match_seq(tri.diagonal_sums(11), want) && match_seq(lf, want);
    });
}

// ---------------------------------------------------------------- oracle equivalence

inline void oracle_equivalence(Suite& s) {
    const std::size_t N = 12, W = 2 * N + 4;

    auto agree = [&](const StepSpec& spec, const RArray& r) {
        return count_paths(spec, N) == r.matrix(N);
    };

    s.check("oracle-equivalence/pascal", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 1}}), step_to_riordan({1}, {1}, W));
    });
    s.check("oracle-equivalence/delannoy", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, 1}}), step_to_riordan({1}, {1, 1}, W));
    });
    s.check("oracle-equivalence/fibstep", [&] {
        return agree(steps({{1, 0, 1}, {2, 0, 1}, {1, 1, 1}, {2, 1, 1}}),
                     step_to_riordan({1, 1}, {1, 1}, W));
    });
    s.check("oracle-equivalence/fibstep-triangulated", [&] {
        return agree(steps({{1, 0, 1}, {2, 0, 1}, {1, 1, 2}, {2, 1, 1}}),
                     step_to_riordan({1, 1}, {2, 1}, W));
    });
    s.check("oracle-equivalence/pascal-like-two-colors", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, 2}}), step_to_riordan({1}, {1, 2}, W));
    });
    s.check("oracle-equivalence/delannoy-triangulated", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 2}}), step_to_riordan({1}, {2}, W));
    });
    s.check("oracle-equivalence/stretched-delannoy", [&] {
        auto stretched = array("1/(1-x)", "x*(1+x)/(1-x)", W).stretch();
        return count_paths(steps({{1, 0, 1}, {2, 1, 1}, {3, 1, 1}}), N) ==
               pair_matrix(stretched, N);
    });
    s.check("oracle-equivalence/delannoy-square-rectification", [&] {
        return count_paths(steps({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, Region::quadrant), N) ==
               array("1/(1-x)", "x*(1+x)/(1-x)", W).rectify(N);
    });
    s.check("oracle-equivalence/fibstep-rectification", [&] {
        return count_paths(
                   steps({{1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {1, 1, 1}}, Region::quadrant), N) ==
               array("1/(1-x-x^2)", "x*(1+x)/(1-x-x^2)", W).rectify(N);
    });
    s.check("oracle-equivalence/extended-square-diagonals", [&] {
        // reading the extended square by diagonals gives the non-Riordan
        // Pascal-like triangle
        IntMatrix tri = count_paths(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, 1}, {4, 2, 1}}), N);
        IntMatrix sq = count_paths(
            steps({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 2, 1}}, Region::quadrant), N);
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                if (tri.at(n, k) != sq.at(n - k, k)) return false;
        return true;
    });
    s.check("oracle-equivalence/catalan", [&] {
        return agree(steps({{1, 1, 1}, {0, -1, 1}}),
                     array("(1-sqrt(1-4*x))/(2*x)", "(1-sqrt(1-4*x))/2", W));
    });
    s.check("oracle-equivalence/schroeder", [&] {
        return agree(steps({{1, 1, 1}, {1, 0, 1}, {0, -1, 1}}),
                     array("(1-x-sqrt(1-6*x+x^2))/(2*x)", "(1-x-sqrt(1-6*x+x^2))/2", W));
    });
    s.check("oracle-equivalence/dyck", [&] {
        return agree(steps({{1, 1, 1}, {1, -1, 1}}),
                     array("(1-sqrt(1-4*x^2))/(2*x^2)", "(1-sqrt(1-4*x^2))/(2*x)", W));
    });
    s.check("oracle-equivalence/motzkin", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 1}, {1, -1, 1}}),
                     array("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)",
                           "(1-x-sqrt(1-2*x-3*x^2))/(2*x)", W));
    });
    s.check("oracle-equivalence/schroeder-aerated", [&] {
        return agree(steps({{2, 0, 1}, {1, 1, 1}, {1, -1, 1}}),
                     array("(1-x^2-sqrt(1-6*x^2+x^4))/(2*x^2)",
                           "(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)", W));
    });
    s.check("oracle-equivalence/ternary", [&] {
        Series t = solve_fixpoint("g", "1+x*g^3", W);
        return agree(steps({{1, 1, 1}, {-1, -2, 1}}),
                     RArray(t, t.shifted_up(1).truncated(W)));
    });
    s.check("oracle-equivalence/gtilde", [&] {
        return agree(steps({{1, 0, 1}, {1, 1, 1}, {2, 1, -1}, {0, -1, 1}}),
                     array("(1-x-sqrt(1-6*x+5*x^2))/(2*x*(1-x))",
                           "(1-x-sqrt(1-6*x+5*x^2))/2", W));
    });
    s.check("oracle-equivalence/rs-2-1", [&] {
        return agree(steps({{1, 0, 2}, {1, 1, 1}, {0, -1, 1}}),
                     array(g_rs_expr(2, 1), "x*(" + g_rs_expr(2, 1) + ")", W));
    });
    s.check("oracle-equivalence/almost-level-1", [&] {
        StepSpec spec{{{1, 1, 1}, {2, 0, 1}, {2, 1, 1}},
                      Region::triangle,
                      {{0, {{1, 0, 1}, {1, 1, 1}}}, {1, {{1, 0, 1}, {1, 1, 1}, {2, 1, 1}}}}};
        AlmostR m(expr("1/(1-x)", W), expr("(1+x)/(1-x)^2", W), expr("x/(1-x)", W));
        return count_paths(spec, N) == m.matrix(N);
    });
    s.check("oracle-equivalence/almost-level-2", [&] {
        StepSpec spec{{{1, 0, 1}, {1, 1, 1}, {2, 1, 1}},
                      Region::triangle,
                      {{0, {{2, 0, 1}, {1, 1, 1}}}, {1, {{1, 0, 1}, {1, 1, 1}}}}};
        AlmostR m(expr("1/(1-x^2)", W), expr("(1+x)/(1-x^2)^2", W),
                  expr("x*(1+x)/(1-x)", W));
        return count_paths(spec, N) == m.matrix(N);
    });
    s.check("oracle-equivalence/almost-level-3", [&] {
        StepSpec spec{{{1, -1, 1}, {2, 0, 1}, {1, 1, 1}},
                      Region::triangle,
                      {{0, {{1, -1, 1}, {1, 1, 1}}}, {1, {{1, -1, 1}, {1, 0, 1}, {1, 1, 1}}}}};
        AlmostR m(expr("1-x*(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*(1-2*x-x^2))", W),
                  expr("-(1-2*x-x^2-sqrt(1-6*x^2+x^4))/(2*x*(1-2*x-x^2))", W),
                  expr("(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)", W));
        return count_paths(spec, N) == m.matrix(N);
    });
}

// ---------------------------------------------------------------- randomized structure laws

inline std::vector<RArray> random_arrays(std::size_t count, std::size_t order, Rng& rng) {
    std::vector<RArray> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Rat> g(order), f(order);
        g[0] = rng.range(0, 1) ? 1 : -1;  // units keep everything integral
        for (std::size_t j = 1; j < order; ++j) g[j] = Rat(rng.range(-3, 3));
        f[1] = rng.range(0, 1) ? 1 : -1;
        for (std::size_t j = 2; j < order; ++j) f[j] = Rat(rng.range(-3, 3));
        out.emplace_back(Series(std::move(g)), Series(std::move(f)));
    }
    return out;
}

inline void group_laws(Suite& s) {
    const std::size_t COUNT = 200, ORD = 24;
    Rng rng(0x5eed5eed1234ull);
    std::vector<RArray> arrs = random_arrays(COUNT, ORD, rng);

    s.check("group-laws/product-associativity", [&] {
        for (std::size_t i = 0; i < COUNT; ++i) {
            const RArray &a = arrs[i], &b = arrs[(i + 1) % COUNT], &c = arrs[(i + 2) % COUNT];
            RArray lhs = (a * b) * c;
            RArray rhs = a * (b * c);
            std::size_t n = std::min(lhs.order(), rhs.order());
            if (!lhs.g().equal_to(rhs.g(), n) || !lhs.f().equal_to(rhs.f(), n)) return false;
        }
        return true;
    });
    s.check("group-laws/identity-element", [&] {
        RArray id = identity_array(ORD);
        for (std::size_t i = 0; i < COUNT; i += 7) {
            RArray l = id * arrs[i], r = arrs[i] * id;
            if (!l.g().equal_to(arrs[i].g(), ORD) || !l.f().equal_to(arrs[i].f(), ORD))
                return false;
            if (!r.g().equal_to(arrs[i].g(), ORD) || !r.f().equal_to(arrs[i].f(), ORD))
                return false;
        }
        return true;
    });
    s.check("group-laws/inverse-round-trip", [&] {
        for (const RArray& a : arrs) {
            RArray prod = a * inverse(a);
            if (!prod.g().equal_to(Series::one(ORD), prod.order())) return false;
            if (!prod.f().equal_to(Series::x(ORD), prod.order())) return false;
        }
        return true;
    });
    s.check("group-laws/matrix-homomorphism", [&] {
        for (std::size_t i = 0; i < COUNT; i += 5) {
            const RArray &a = arrs[i], &b = arrs[(i + 3) % COUNT];
            if ((a * b).matrix(10) != a.matrix(10) * b.matrix(10)) return false;
        }
        return true;
    });
    s.check("group-laws/ftra-matrix-vector", [&] {
        Rng local(0xfeedbee5ull);
        const std::size_t N = 12;
        for (const RArray& a : arrs) {
            std::vector<Rat> v(ORD);
            for (auto& e : v) e = Rat(local.range(-3, 3));
            Series vec{std::vector<Rat>(v)};
            Series image = a.apply(vec);
            IntMatrix m = a.matrix(N);
            for (std::size_t n = 0; n < N; ++n) {
                Rat dot = 0;
                for (std::size_t k = 0; k <= n; ++k) dot += Rat(m.at(n, k)) * v[k];
                if (dot != image.coeff(n)) return false;
            }
        }
        return true;
    });
    s.check("group-laws/rectify-reverse-indexing", [&] {
        const std::size_t N = 10;
        for (std::size_t i = 0; i < COUNT; ++i) {
            const RArray& a = arrs[i];
            IntMatrix rect = a.rectify(N), rev = a.reverse(N);
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t k = 0; k < N; ++k) {
                    if (rect.at(n, k) != a.element(n + k, k)) return false;
                    if (k <= n && rev.at(n, k) != a.element(n, n - k)) return false;
                }
        }
        return true;
    });
    s.check("group-laws/stretch-diagonal-duality", [&] {
        const std::size_t N = 12;
        for (std::size_t i = 0; i < COUNT; i += 3) {
            auto rows = pair_matrix(arrs[i].stretch(), N).row_sums();
            if (rows != arrs[i].diagonal_sums(N)) return false;
        }
        return true;
    });
    s.check("group-laws/triangulation-theorem", [&] {
        const std::size_t N = 8;
        for (std::size_t i = 0; i < COUNT; ++i) {
            const RArray& a = arrs[i];
            if (a.f().coeff(2) == 0) continue;
            IntMatrix tri = a.triangulate().matrix(N);
            Int f1 = require_integer(a.f().coeff(1), "f1");
            IntMatrix conj = mat_binomial_conjugate(a.rectify(N), f1, ConjDirection::inverse);
            for (std::size_t n = 0; n < N; ++n)
                for (std::size_t k = 0; k < N; ++k) {
                    Int want = k <= n ? tri.at(n, k) : Int(0);
                    if (conj.at(n, k) != want) return false;
                }
            if (i % 10 == 0) {  // group-product route of the same identity
                Series a_of_x = Series::x(a.f().order()) / revert(a.f());
                Series v = a_of_x - Series::constant(a.f().coeff(1), a_of_x.order());
                RArray via = a * RArray(Series::one(v.order()), v);
                RArray direct = a.triangulate();
                std::size_t n = std::min(via.order(), direct.order());
                if (!via.g().equal_to(direct.g(), n) || !via.f().equal_to(direct.f(), n))
                    return false;
            }
        }
        return true;
    });
    s.check("group-laws/rogers-recurrence", [&] {
        const std::size_t N = 12;
        for (std::size_t i = 0; i < COUNT; ++i) {
            const RArray& a = arrs[i];
            IntMatrix m = a.matrix(N + 1);
            auto p = production_matrix_rat(m, N);
            std::vector<Rat> z(N), aseq(N);
            for (std::size_t r = 0; r < N; ++r) {
                z[r] = p[r][0];
                aseq[r] = p[r][1];
            }
            if (!verify_rogers(m, z, aseq)) return false;
            // production columns carry the A-sequence shifted down one per column
            for (std::size_t col = 1; col + 1 < N; ++col)
                for (std::size_t row = 0; row < N; ++row) {
                    Rat want = row >= col - 1 ? aseq[row - (col - 1)] : Rat(0);
                    if (p[row][col] != want) return false;
                }
            if (i % 10 == 0) {
                auto aa = a_sequence(a, N);
                for (std::size_t r = 0; r < N; ++r)
                    if (aa[r] != aseq[r]) return false;
            }
        }
        return true;
    });
    s.check("group-laws/bell-closure", [&] {
        Rng local(0xbe11be11ull);
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<Rat> g(ORD), h(ORD);
            g[0] = 1;
            h[0] = 1;
            for (std::size_t j = 1; j < ORD; ++j) {
                g[j] = Rat(local.range(-3, 3));
                h[j] = Rat(local.range(-3, 3));
            }
            Series gs{std::vector<Rat>(g)}, hs{std::vector<Rat>(h)};
            RArray a(gs, gs.shifted_up(1).truncated(ORD));
            RArray b(hs, hs.shifted_up(1).truncated(ORD));
            RArray prod = a * b;
            // Bell form: f = x g
            if (!prod.f().equal_to(prod.g().shifted_up(1).truncated(prod.order()),
                                   prod.order()))
                return false;
        }
        return true;
    });
    s.check("group-laws/central-symmetry", [&] {
        for (long r = 0; r <= 3; ++r) {
            RArray a =
                array("1/(1-x)", "x*(1+" + std::to_string(r) + "*x)/(1-x)", 32);
            IntMatrix m = a.matrix(12);
            for (std::size_t n = 0; n < 12; ++n)
                for (std::size_t k = 0; k <= n; ++k)
                    if (m.at(n, k) != m.at(n, n - k)) return false;
        }
        return true;
    });
}

// ---------------------------------------------------------------- functional equations

inline void functional_equations(Suite& s) {
    const std::size_t ORD = 32;

    s.check("functional-equations/rs-family", [&] {
        for (long r = 0; r <= 3; ++r)
            for (long sv = 1; sv <= 3; ++sv) {
                AMatrixSpec spec = rs_spec(r, sv);
                Series f = solve_f_from_amatrix(spec, ORD + 4);
                if (!residual_vanishes(spec, f, ORD)) return false;
                Series g_closed = expr(g_rs_expr(r, sv), ORD + 6);
                if (!f.shifted_down(1).equal_to(g_closed, ORD)) return false;
            }
        return true;
    });
    s.check("functional-equations/abg-family", [&] {
        for (long al = 0; al <= 2; ++al)
            for (long be = 0; be <= 2; ++be)
                for (long ga = 1; ga <= 2; ++ga) {
                    AMatrixSpec spec = abg_spec(al, be, ga);
                    Series f = solve_f_from_amatrix(spec, ORD + 4);
                    if (!residual_vanishes(spec, f, ORD)) return false;
                    Series f_closed = expr(f_abg_expr(al, be, ga), ORD + 6);
                    if (!f.equal_to(f_closed, ORD)) return false;
                }
        return true;
    });
    s.check("functional-equations/abg-composite-identity", [&] {
        const std::size_t W = ORD + 8;
        Series c = expr("(1-sqrt(1-4*x))/(2*x)", W);
        for (long al = 0; al <= 2; ++al)
            for (long be = 0; be <= 2; ++be)
                for (long ga = 1; ga <= 2; ++ga) {
                    Series f = expr(f_abg_expr(al, be, ga), W);
                    Series g = f.shifted_down(1);
                    // g = 1/(1 - al x^2) c(x (ga + be x^2)/(1 - al x^2)^2)
                    auto num = [&](long v) { return std::to_string(v); };
                    Series inv = expr("1/(1-" + num(al) + "*x^2)", W);
                    Series arg = expr("x*(" + num(ga) + "+" + num(be) + "*x^2)/(1-" + num(al) +
                                          "*x^2)^2",
                                      W);
                    Series composite = inv * c.compose(arg);
                    if (!g.equal_to(composite, ORD)) return false;
                }
        return true;
    });
    s.check("functional-equations/cubic-level", [&] {
        AMatrixSpec spec;
        spec.rows = {{1, 1}};
        spec.extra = {{1, -2, 3}};
        Series f = solve_f_from_amatrix(spec, ORD + 4);
        if (!residual_vanishes(spec, f, ORD)) return false;
        return match_seq(series_ints(f.shifted_down(1), 9),
                         {1, 2, 8, 44, 280, 1936, 14128, 107088, 834912});
    });
    s.check("functional-equations/cubic-long-level", [&] {
        AMatrixSpec spec;
        spec.rows = {{1}, {0, 1}};
        spec.extra = {{1, -2, 3}};
        Series f = solve_f_from_amatrix(spec, ORD + 4);
        if (!residual_vanishes(spec, f, ORD)) return false;
        return match_seq(series_ints(f.shifted_down(1), 11),
                         {1, 1, 4, 16, 77, 403, 2228, 12800, 75653, 457022, 2809266});
    });
    s.check("functional-equations/ternary-recurrence", [&] {
        AMatrixSpec spec;
        spec.rows = {{1}};
        spec.extra = {{1, -2, 3}};
        Series f = solve_f_from_amatrix(spec, ORD + 4);
        if (!residual_vanishes(spec, f, ORD)) return false;
        Series t = solve_fixpoint("g", "1+x*g^3", ORD);
        if (!f.shifted_down(1).equal_to(t, ORD)) return false;
        // recurrence holds on the matrix itself
        RArray tern(t, t.shifted_up(1).truncated(ORD));
        return verify_amatrix(tern.matrix(14), spec);
    });
    s.check("functional-equations/recurrence-verification", [&] {
        Environment env;
        env.insert_or_assign("c", expr("(1-sqrt(1-4*x))/(2*x)", 33));
        AMatrixSpec cat;
        cat.rows = {{1}};
        cat.rho = {1};
        if (!verify_amatrix(array("c", "x*c", 32, env).matrix(14), cat)) return false;
        AMatrixSpec sch = rs_spec(1, 1);
        if (!verify_amatrix(array(g_rs_expr(1, 1), "x*(" + g_rs_expr(1, 1) + ")", 32).matrix(14),
                            sch))
            return false;
        AMatrixSpec id_spec;
        id_spec.rows = {{1}};
        return verify_amatrix(identity_array(32).matrix(14), id_spec);
    });
}

// ---------------------------------------------------------------- Somos-4

inline void somos4(Suite& s) {
    auto tuple_check = [&](long al, long be, long ga) {
        AMatrixSpec spec = abg_spec(al, be, ga);
        Series f = solve_f_from_amatrix(spec, 21);
        auto seq = series_ints(f.shifted_down(1), 19);
        auto h = hankel(seq, 10);
        Int a = Int(al) * ga + be + 2 * pow_int(Int(ga), 3);
        a *= a;
        Int A(al), B(be), G(ga);
        Int b = -pow_int(A, 3) * G * G - A * A * G * (2 * B + 3 * pow_int(G, 3)) -
                A * (B * B + 6 * B * pow_int(G, 3) + 4 * pow_int(G, 6)) -
                G * (2 * B * B + 6 * B * pow_int(G, 3) + 3 * pow_int(G, 6));
        return somos4_check(h, a, b);
    };
    s.check("somos4/abg-1-1-1", [&] { return tuple_check(1, 1, 1); });
    s.check("somos4/abg-0-1-1", [&] { return tuple_check(0, 1, 1); });
    s.check("somos4/abg-1-0-1", [&] { return tuple_check(1, 0, 1); });
    s.check("somos4/abg-2-1-1", [&] { return tuple_check(2, 1, 1); });
}

// ---------------------------------------------------------------- continued fractions

inline void continued_fractions(Suite& s) {
    const std::size_t ORD = 24;

    s.check("continued-fractions/jacobi-rs-family", [&] {
        for (long r = 0; r <= 3; ++r)
            for (long sv = 1; sv <= 3; ++sv) {
                CFSpec spec;
                spec.kind = CFSpec::Kind::jacobi;
                spec.b_or_c.assign(ORD, Rat(r + 2 * sv));
                spec.b_or_c[0] = Rat(r + sv);
                spec.lam_or_d.assign(ORD, Rat(sv * (r + sv)));
                Series got = cf_eval(spec, ORD);
                if (!got.equal_to(expr(g_rs_expr(r, sv), ORD + 2), ORD)) return false;
            }
        return true;
    });
    s.check("continued-fractions/thron-rs-family", [&] {
        for (long r = 0; r <= 3; ++r)
            for (long sv = 1; sv <= 3; ++sv) {
                CFSpec spec;
                spec.kind = CFSpec::Kind::thron;
                spec.b_or_c.assign(ORD + 4, Rat(r));
                spec.lam_or_d.assign(ORD + 4, Rat(sv));
                Series got = cf_eval(spec, ORD);
                if (!got.equal_to(expr(g_rs_expr(r, sv), ORD + 2), ORD)) return false;
            }
        return true;
    });
    // Round trip to order 2*depth: a depth-d evaluation pins 2d coefficients,
    // but the depth-stability gate inside cf_eval certifies one level less,
    // so the re-evaluation carries one extra extracted level as a guard.
    auto roundtrip = [&](const std::string& gexpr, const std::vector<long long>& want_b,
                         const std::vector<long long>& want_lam) {
        const std::size_t DEPTH = 10;
        Series g = expr(gexpr, 2 * DEPTH + 6);
        CFSpec spec = jfraction_extract(g, DEPTH);
        for (std::size_t i = 0; i < DEPTH; ++i) {
            if (spec.b_or_c[i] != Rat(want_b[std::min(i, want_b.size() - 1)])) return false;
            if (spec.lam_or_d[i] != Rat(want_lam[std::min(i, want_lam.size() - 1)]))
                return false;
        }
        CFSpec guard = jfraction_extract(g, DEPTH + 1);
        for (std::size_t i = 0; i < DEPTH; ++i)
            if (guard.b_or_c[i] != spec.b_or_c[i] || guard.lam_or_d[i] != spec.lam_or_d[i])
                return false;  // extraction must be prefix-stable
        return cf_eval(guard, 2 * DEPTH).equal_to(g, 2 * DEPTH);
    };
    s.check("continued-fractions/jextract-motzkin", [&] {
        return roundtrip("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", {1}, {1});
    });
    s.check("continued-fractions/jextract-schroeder", [&] {
        return roundtrip("(1-x-sqrt(1-6*x+x^2))/(2*x)", {2, 3}, {2});
    });
    s.check("continued-fractions/jextract-catalan", [&] {
        return roundtrip("(1-sqrt(1-4*x))/(2*x)", {1, 2}, {1});
    });
}

// ---------------------------------------------------------------- Laurent factorizations

inline void factorizations(Suite& s) {
    const std::size_t X = 16;
    const long LO = -8, HI = 16;
    const std::size_t W = 40;

    auto run = [&](const std::string& g, const std::string& f, const std::string& h,
                   std::vector<Step> st) {
        RArray r = array(g, f, W);
        return verify_factorization(r, steps(std::move(st)), expr(h, W), X, LO, HI);
    };

    s.check("factorizations/dyck", [&] {
        return run("(1-sqrt(1-4*x^2))/(2*x^2)", "(1-sqrt(1-4*x^2))/(2*x)",
                   "(1-sqrt(1-4*x^2))/(2*x)", {{1, 1, 1}, {1, -1, 1}});
    });
    s.check("factorizations/motzkin", [&] {
        return run("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", "(1-x-sqrt(1-2*x-3*x^2))/(2*x)",
                   "(1-x-sqrt(1-2*x-3*x^2))/(2*x)", {{1, 0, 1}, {1, 1, 1}, {1, -1, 1}});
    });
    s.check("factorizations/schroeder-aerated", [&] {
        return run("(1-x^2-sqrt(1-6*x^2+x^4))/(2*x^2)", "(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)",
                   "(1-x^2-sqrt(1-6*x^2+x^4))/(2*x)", {{2, 0, 1}, {1, 1, 1}, {1, -1, 1}});
    });
    s.check("factorizations/schroeder", [&] {
        return run("(1-x-sqrt(1-6*x+x^2))/(2*x)", "(1-x-sqrt(1-6*x+x^2))/2",
                   "(1-x-sqrt(1-6*x+x^2))/(2*x)", {{1, 1, 1}, {1, 0, 1}, {0, -1, 1}});
    });
    s.check("factorizations/catalan", [&] {
        return run("(1-sqrt(1-4*x))/(2*x)", "(1-sqrt(1-4*x))/2", "(1-sqrt(1-4*x))/(2*x)",
                   {{1, 1, 1}, {0, -1, 1}});
    });
    s.check("factorizations/rs-1-1", [&] {
        return run(g_rs_expr(1, 1), "x*(" + g_rs_expr(1, 1) + ")", g_rs_expr(1, 1),
                   {{1, 0, 1}, {1, 1, 1}, {0, -1, 1}});
    });
    s.check("factorizations/rs-2-1", [&] {
        return run(g_rs_expr(2, 1), "x*(" + g_rs_expr(2, 1) + ")", g_rs_expr(2, 1),
                   {{1, 0, 2}, {1, 1, 1}, {0, -1, 1}});
    });
    s.check("factorizations/gtilde", [&] {
        return run("(1-x-sqrt(1-6*x+5*x^2))/(2*x*(1-x))", "(1-x-sqrt(1-6*x+5*x^2))/2",
                   "(1-x-sqrt(1-6*x+5*x^2))/(2*x*(1-x))",
                   {{1, 0, 1}, {1, 1, 1}, {2, 1, -1}, {0, -1, 1}});
    });
}

}  // namespace detail

inline std::vector<Outcome> run_all(const std::string& filter = "") {
    detail::Suite s(filter);
    detail::golden_matrices(s);
    detail::golden_sequences(s);
    detail::oracle_equivalence(s);
    detail::group_laws(s);
    detail::functional_equations(s);
    detail::somos4(s);
    detail::continued_fractions(s);
    detail::factorizations(s);
    auto out = s.take();
    std::sort(out.begin(), out.end(),
              [](const Outcome& a, const Outcome& b) { return a.id < b.id; });
    return out;
}

inline std::vector<GroupOutcome> run_groups() {
    auto all = run_all();
    std::map<std::string, GroupOutcome> groups;
    for (const auto& o : all) {
        std::string g = o.id.substr(0, o.id.find('/'));
        auto& entry = groups.try_emplace(g, GroupOutcome{g, true, 0}).first->second;
        entry.pass = entry.pass && o.pass;
        ++entry.checks;
    }
    std::vector<GroupOutcome> out;
    for (auto& [k, v] : groups) out.push_back(v);
    return out;
}

}  // namespace riordan::selfcheck
