#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

namespace detail {

// Columns of the matrix [x^n] g f^k, built by incremental powers of f.
// Only needs f(0) = 0, so it also serves stretched (f1 = 0) pairs.
inline IntMatrix pair_matrix(const Series& g, const Series& f, std::size_t n) {
    if (g.order() < n || f.order() < n)
        fail(Errc::order_exceeded, "matrix size exceeds series order");
    if (f[0] != 0)
        fail(Errc::nonzero_constant_term, "pair matrix needs f(0) = 0");
    IntMatrix m(n, n, MatShape::lower_triangular);
    Series col = g.truncated(n);
    Series ft = f.truncated(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, k) = require_integer(col[i], "matrix entry");
        if (k + 1 < n) col = col * ft;
    }
    return m;
}

}  // namespace detail

// A Riordan array (g, f): g(0) != 0, f(0) = 0, f'(0) != 0.  The associated
// lower-triangular matrix has entries a_{n,k} = [x^n] g(x) f(x)^k.
class RArray {
public:
    RArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
        if (g_[0] == 0) fail(Errc::zero_constant_term, "Riordan array needs g(0) != 0");
        if (f_[0] != 0) fail(Errc::nonzero_constant_term, "Riordan array needs f(0) = 0");
        if (f_.order() < 2 || f_[1] == 0)
            fail(Errc::not_reversible, "Riordan array needs f'(0) != 0");
    }

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    std::size_t order() const { return std::min(g_.order(), f_.order()); }

    Int element(std::size_t n, std::size_t k) const {
        if (k > n) return 0;  // valuation of f^k exceeds n
        if (n >= order()) fail(Errc::order_exceeded, "element beyond series order");
        std::size_t w = n + 1;
        Series v = g_.truncated(w) * f_.truncated(w).pow(k);
        return require_integer(v[n], "array element");
    }

    IntMatrix matrix(std::size_t n) const { return detail::pair_matrix(g_, f_, n); }

    // Fundamental-theorem action: (g, f) . a = g(x) a(f(x)).
    Series apply(const Series& a) const { return g_ * a.compose(f_); }

    std::vector<Int> row_sums(std::size_t n) const {
        return sums_of(g_ / (Series::one(order()) - f_), n);
    }
    std::vector<Int> diagonal_sums(std::size_t n) const {
        return sums_of(g_.truncated(order()) / (Series::one(order() + 1) - f_.shifted_up(1)), n);
    }

    // Square matrix with entry (n,k) = a_{n+k,k}; needs order >= 2N-1.
    IntMatrix rectify(std::size_t n) const {
        if (order() < 2 * n - 1) fail(Errc::order_exceeded, "rectification needs order >= 2N-1");
        std::size_t w = 2 * n - 1;
        IntMatrix m(n, n, MatShape::square);
        Series col = g_.truncated(w);
        Series ft = f_.truncated(w);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i)
                m.at(i, k) = require_integer(col[i + k], "rectified entry");
            if (k + 1 < n) col = col * ft;
        }
        return m;
    }

    IntMatrix reverse(std::size_t n) const { return mat_reverse(matrix(n)); }

    // (g, x f): not a Riordan array (f1 = 0), returned as a plain pair.
    std::pair<Series, Series> stretch() const { return {g_, f_.shifted_up(1)}; }

    // (g, (f - f1 x)/x); defined when f2 != 0, and then equal to the
    // triangular part of the rectification conjugated by B_{f1}^{-1}.
    RArray triangulate() const {
        if (f_.order() < 3 || f_[2] == 0)
            fail(Errc::f2_zero, "triangulation needs f2 != 0");
        Series shifted = (f_ - Series::x(f_.order()) * Series::constant(f_[1], f_.order()))
                             .shifted_down(1);
        return RArray(g_.truncated(shifted.order()), shifted);
    }

    friend RArray operator*(const RArray& a, const RArray& b) {
        return RArray(a.g_ * b.g_.compose(a.f_), b.f_.compose(a.f_));
    }

private:
    std::vector<Int> sums_of(const Series& s, std::size_t n) const {
        if (s.order() < n) fail(Errc::order_exceeded, "sum length exceeds series order");
        std::vector<Int> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = require_integer(s[i], "sum term");
        return out;
    }

    Series g_, f_;
};

inline RArray identity_array(std::size_t order) {
    return RArray(Series::one(order), Series::x(order));
}

// (1/g(fbar), fbar) with fbar the compositional inverse of f.
inline RArray inverse(const RArray& r) {
    Series fbar = revert(r.f());
    return RArray(r.g().compose(fbar).reciprocal(), fbar);
}

inline IntMatrix pair_matrix(const std::pair<Series, Series>& gf, std::size_t n) {
    return detail::pair_matrix(gf.first, gf.second, n);
}

// An almost Riordan array of first order (a; g, f): column 0 is the
// expansion of a, and from row/column 1 on the matrix is the Riordan array
// (g, f) shifted down-right by one.
class AlmostR {
public:
    AlmostR(Series a, Series g, Series f)
        : a_(std::move(a)), inner_(std::move(g), std::move(f)) {
        if (a_[0] == 0) fail(Errc::zero_constant_term, "almost Riordan array needs a(0) != 0");
    }

    const Series& a() const { return a_; }
    const RArray& inner() const { return inner_; }

    Int element(std::size_t n, std::size_t k) const {
        if (k == 0) return require_integer(a_.coeff(n), "almost array column 0");
        if (n == 0) return 0;
        return inner_.element(n - 1, k - 1);
    }

    IntMatrix matrix(std::size_t n) const {
        if (n == 0 || a_.order() < n)
            fail(Errc::order_exceeded, "matrix size exceeds series order");
        IntMatrix m(n, n, MatShape::lower_triangular);
        for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = require_integer(a_[i], "almost column 0");
        if (n >= 2) {
            IntMatrix inner = inner_.matrix(n - 1);
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t k = 1; k <= i; ++k) m.at(i, k) = inner.at(i - 1, k - 1);
        }
        return m;
    }

    std::vector<Int> row_sums(std::size_t n) const { return matrix(n).row_sums(); }

private:
    Series a_;
    RArray inner_;
};

// The Riordan array of S-paths whose step polynomial is
// sum alpha_i x^i + y x sum beta_j x^j (beta_0 != 0):
// (1/(1 - A(x)), x B(x)/(1 - A(x))).
inline RArray step_to_riordan(const std::vector<Int>& alpha, const std::vector<Int>& beta,
                              std::size_t order) {
    if (beta.empty() || beta[0] == 0)
        fail(Errc::beta0_zero, "step polynomial needs beta_0 != 0");
    Series a(order);
    {
        std::vector<Rat> c(order);
        for (std::size_t i = 0; i < alpha.size() && i + 1 < order; ++i) c[i + 1] = Rat(alpha[i]);
        a = Series(std::move(c));
    }
    Series b(order);
    {
        std::vector<Rat> c(order);
        for (std::size_t j = 0; j < beta.size() && j < order; ++j) c[j] = Rat(beta[j]);
        b = Series(std::move(c));
    }
    Series denom = Series::one(order) - a;
    return RArray(denom.reciprocal(), b.shifted_up(1).truncated(order) / denom);
}

// rev(M) + rev(M)^T - diag(rev(M)); symmetric by construction.
inline IntMatrix reverse_symmetrize(const RArray& r, std::size_t n) {
    IntMatrix rev = r.reverse(n);
    IntMatrix out(n, n, MatShape::square);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = rev.at(i, j) + rev.at(j, i) - (i == j ? rev.at(i, i) : Int(0));
    return out;
}

enum class NamedMatrix {
    schroeder_narayana,  // binom(2n-k,k) binom(2n-2k,n-k) / (n-k+1), A060693
    ternary_schroeder,   // binom(3n-2k,k) binom(3n-3k,n-k) / (2n-2k+1)
};

inline IntMatrix named_matrix(NamedMatrix id, std::size_t n) {
    IntMatrix m(n, n, MatShape::lower_triangular);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
            Int in(i), kn(k);
            Int num, den;
            if (id == NamedMatrix::schroeder_narayana) {
                num = binomial(2 * in - kn, kn) * binomial(2 * in - 2 * kn, in - kn);
                den = in - kn + 1;
            } else {
                num = binomial(3 * in - 2 * kn, kn) * binomial(3 * in - 3 * kn, in - kn);
                den = 2 * in - 2 * kn + 1;
            }
            if (num % den != 0)
                fail(Errc::non_integral_entry, "named matrix entry is not integral");
            m.at(i, k) = num / den;
        }
    return m;
}

}  // namespace riordan
