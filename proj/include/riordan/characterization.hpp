#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riordan/array.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

// P = M^{-1} Mbar, where Mbar is M with its top row removed.  For a Riordan
// matrix the columns of P carry the Z-sequence (column 0) and the A-sequence
// (column 1, repeated shifted in later columns).
struct ProductionMatrix {
    std::vector<Int> z;
    std::vector<Int> a;
    IntMatrix raw;
};

// Exact forward substitution over rationals: row n of M P = Mbar gives
// P(n,j) once rows < n are known.  Needs a nonzero diagonal.
inline std::vector<std::vector<Rat>> production_matrix_rat(const IntMatrix& m, std::size_t size) {
    if (m.rows() < size + 1 || m.cols() < size + 1)
        fail(Errc::dimension_mismatch, "production matrix needs size <= dim - 1");
    for (std::size_t i = 0; i < size; ++i)
        if (m.at(i, i) == 0) fail(Errc::singular_matrix, "zero diagonal in production input");
    std::vector<std::vector<Rat>> p(size, std::vector<Rat>(size));
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t n = 0; n < size; ++n) {
            Rat s = Rat(m.at(n + 1, j));
            for (std::size_t k = 0; k < n; ++k) s -= Rat(m.at(n, k)) * p[k][j];
            p[n][j] = s / Rat(m.at(n, n));
        }
    return p;
}

inline ProductionMatrix production_matrix(const IntMatrix& m, std::size_t size) {
    auto p = production_matrix_rat(m, size);
    IntMatrix raw(size, size, MatShape::general);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            raw.at(i, j) = require_integer(p[i][j], "production entry");
    std::vector<Int> z(size), a(size);
    for (std::size_t i = 0; i < size; ++i) {
        z[i] = raw.at(i, 0);
        a[i] = raw.at(i, 1);
    }
    return {std::move(z), std::move(a), std::move(raw)};
}

// A(x) = x / fbar(x), the generating function of the A-sequence.
inline std::vector<Rat> a_sequence(const RArray& r, std::size_t len) {
    Series fbar = revert(r.f());
    Series a = Series::x(fbar.order() + 1).truncated(fbar.order()) / fbar;
    if (a.order() < len) fail(Errc::order_exceeded, "A-sequence length exceeds series order");
    std::vector<Rat> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = a[i];
    return out;
}

// Rogers recurrence: t(n,k) = sum_i a_i t(n-1, k-1+i) for k >= 1, and
// t(n,0) = sum_i z_i t(n-1, i).  Sequence entries past the given length
// count as zero.
inline bool verify_rogers(const IntMatrix& m, std::span<const Rat> z, std::span<const Rat> a) {
    auto zval = [&](std::size_t i) { return i < z.size() ? z[i] : Rat(0); };
    auto aval = [&](std::size_t i) { return i < a.size() ? a[i] : Rat(0); };
    for (std::size_t n = 1; n < m.rows(); ++n)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            Rat s = 0;
            if (k == 0) {
                for (std::size_t i = 0; i < m.cols(); ++i)
                    if (m.get(static_cast<long>(n) - 1, static_cast<long>(i)) != 0)
                        s += zval(i) * Rat(m.at(n - 1, i));
            } else {
                for (std::size_t i = 0; k - 1 + i < m.cols(); ++i)
                    if (m.get(static_cast<long>(n) - 1, static_cast<long>(k - 1 + i)) != 0)
                        s += aval(i) * Rat(m.at(n - 1, k - 1 + i));
            }
            if (s != Rat(m.at(n, k))) return false;
        }
    return true;
}

// The generalized recurrence
//   t_{n+1,k+1} = sum_{i,j} a_{i,j} t_{n-i,k+j} + sum_j rho_j t_{n+1,k+j+2}
//                 + sum extra c t_{n-p, k+q}
// corresponds to the functional equation
//   f/x = sum_i x^i R^(i)(f) + (f^2/x) rho(f) + sum extra c x^p f^q,
// where R^(i) is the generating polynomial of row i.  The extra monomial
// terms (p possibly negative) cover equations like f/x = 1 + f + f^3/x^2
// that fall outside the strict two-part shape.
struct AMatrixSpec {
    struct Term {
        Int coeff;
        long xpow;       // may be negative
        unsigned upow;
    };
    std::vector<std::vector<Int>> rows;  // rows[i][j] = a_{i,j}
    std::vector<Int> rho;
    std::vector<Term> extra;

    void validate() const {
        if (rows.empty() || rows[0].empty() || rows[0][0] == 0)
            fail(Errc::zero_constant_term, "A-matrix needs a_{0,0} != 0");
    }
};

namespace detail {

// Right-hand side of f = x * (the f/x equation), evaluated at a candidate f.
// Terms with negative x-power shorten the result order; solve_f_from_amatrix
// compensates with guard coefficients.
inline Series amatrix_rhs(const AMatrixSpec& spec, const Series& f) {
    std::size_t w = f.order();
    Series acc(w);
    std::vector<Series> fpow;  // fpow[q] = f^q at order w
    fpow.push_back(Series::one(w));
    auto fp = [&](std::size_t q) -> const Series& {
        while (fpow.size() <= q) fpow.push_back(fpow.back() * f);
        return fpow[q];
    };
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        Series row(w);
        for (std::size_t j = 0; j < spec.rows[i].size(); ++j)
            if (spec.rows[i][j] != 0) row = row + Rat(spec.rows[i][j]) * fp(j);
        acc = acc + row.shifted_up(i + 1).truncated(std::min(w, row.order() + i + 1));
    }
    if (!spec.rho.empty()) {
        Series rho(w);
        for (std::size_t j = 0; j < spec.rho.size(); ++j)
            if (spec.rho[j] != 0) rho = rho + Rat(spec.rho[j]) * fp(j);
        acc = acc + fp(2) * rho;
    }
    for (const auto& t : spec.extra) {
        if (t.coeff == 0) continue;
        Series term = Rat(t.coeff) * fp(t.upow);
        long shift = t.xpow + 1;  // f = x * sum, so each term gains one x
        if (shift >= 0)
            term = term.shifted_up(static_cast<std::size_t>(shift));
        else
            term = term.shifted_down(static_cast<std::size_t>(-shift));
        acc = acc + term.truncated(std::min(acc.order(), term.order()));
    }
    return acc;
}

}  // namespace detail

// Solves the A-matrix functional equation for f in F_1 by x-adic fixed-point
// iteration, starting from 0.  Contraction is checked at runtime: the prefix
// must stabilize within order + 2 iterations.
inline Series solve_f_from_amatrix(const AMatrixSpec& spec, std::size_t order) {
    spec.validate();
    std::size_t guard = 0;
    for (const auto& t : spec.extra)
        if (t.xpow < -1) guard += static_cast<std::size_t>(-(t.xpow + 1));
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::size_t work = order + guard;
        Series u(work);
        bool lost = false;
        for (std::size_t it = 0; it < order + 2; ++it) {
            Series next = detail::amatrix_rhs(spec, u.padded(work));
            if (next.order() < order) {
                guard += order - next.order();
                lost = true;
                break;
            }
            if (u.order() >= order && next.equal_to(u, order)) return next.truncated(order);
            u = next;
        }
        if (!lost) fail(Errc::not_contractive, "A-matrix equation did not stabilize");
    }
    fail(Errc::not_contractive, "A-matrix equation keeps losing truncation order");
}

// Checks the generalized recurrence on every entry whose references all fall
// inside the stored matrix (references outside the triangle count as zero).
inline bool verify_amatrix(const IntMatrix& m, const AMatrixSpec& spec) {
    spec.validate();
    long n_rows = static_cast<long>(m.rows());
    auto tri = [&](long n, long k) -> Int {
        if (k > n) return 0;  // above the diagonal
        return m.get(n, k);
    };
    for (long n = 0; n + 1 < n_rows; ++n) {
        for (long k = 0; k + 1 <= n + 1; ++k) {
            Int lhs = tri(n + 1, k + 1);
            Int rhs = 0;
            bool in_range = true;
            for (std::size_t i = 0; i < spec.rows.size(); ++i)
                for (std::size_t j = 0; j < spec.rows[i].size(); ++j)
                    if (spec.rows[i][j] != 0)
                        rhs += spec.rows[i][j] * tri(n - static_cast<long>(i), k + static_cast<long>(j));
            for (std::size_t j = 0; j < spec.rho.size(); ++j)
                if (spec.rho[j] != 0) rhs += spec.rho[j] * tri(n + 1, k + static_cast<long>(j) + 2);
            for (const auto& t : spec.extra) {
                if (t.coeff == 0) continue;
                long rn = n - t.xpow;
                long rk = k + static_cast<long>(t.upow);
                if (rn >= n_rows && rk <= rn) {
                    in_range = false;  // would need a row we did not compute
                    break;
                }
                rhs += t.coeff * tri(rn, rk);
            }
            if (!in_range) continue;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace riordan
