#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/numeric.hpp"

namespace riordan {

enum class MatShape { lower_triangular, square, general };

// Dense matrix of arbitrary-precision integers, indexed from (0,0).
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols, MatShape shape = MatShape::general)
        : rows_(rows), cols_(cols), shape_(shape), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    MatShape shape() const { return shape_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    // Out-of-range reads count as zero, which is what every recurrence in
    // this library wants at the boundary.
    Int get(long i, long j) const {
        if (i < 0 || j < 0 || i >= static_cast<long>(rows_) || j >= static_cast<long>(cols_))
            return 0;
        return at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            fail(Errc::dimension_mismatch, "matrix product dimension mismatch");
        IntMatrix r(a.rows_, b.cols_,
                    a.shape_ == MatShape::lower_triangular && b.shape_ == MatShape::lower_triangular
                        ? MatShape::lower_triangular
                        : MatShape::general);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b.at(k, j) != 0) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    std::vector<Int> row_sums() const {
        std::vector<Int> s(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[i] += at(i, j);
        return s;
    }

    // Sums over antidiagonals n = i + j restricted to stored entries.
    std::vector<Int> diagonal_sums() const {
        std::vector<Int> s(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_ && i + j < rows_; ++j) s[i + j] += at(i, j);
        return s;
    }

private:
    std::size_t rows_, cols_;
    MatShape shape_;
    std::vector<Int> e_;
};

// B_a = (binom(n,k) a^{n-k}), the a-fold binomial matrix.
inline IntMatrix binomial_matrix(std::size_t n, const Int& a) {
    IntMatrix b(n, n, MatShape::lower_triangular);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            b.at(i, j) = binomial(Int(i), Int(j)) * pow_int(a, static_cast<unsigned long>(i - j));
    return b;
}

enum class ConjDirection { forward, inverse };

// Right-multiplication by the a-fold binomial matrix or its inverse
// (B_a^{-1} = B_{-a}).  Square inputs act on the column variable of a
// bivariate generating function, which needs the transposed factor; for
// lower-triangular inputs the product is taken in the matrix group directly.
inline IntMatrix mat_binomial_conjugate(const IntMatrix& m, const Int& a, ConjDirection dir) {
    Int u = dir == ConjDirection::forward ? a : Int(-a);
    IntMatrix b = binomial_matrix(m.cols(), u);
    IntMatrix r(m.rows(), m.cols(), m.shape());
    bool transposed = m.shape() != MatShape::lower_triangular;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < m.cols(); ++k) {
                const Int& bkj = transposed ? b.at(j, k) : b.at(k, j);
                if (bkj != 0 && m.at(i, k) != 0) s += m.at(i, k) * bkj;
            }
            r.at(i, j) = s;
        }
    return r;
}

// Row reversal of a lower-triangular matrix: entry (n,k) -> (n, n-k).
inline IntMatrix mat_reverse(const IntMatrix& m) {
    IntMatrix r(m.rows(), m.cols(), MatShape::lower_triangular);
    for (std::size_t n = 0; n < m.rows(); ++n)
        for (std::size_t k = 0; k <= n && k < m.cols(); ++k)
            r.at(n, k) = m.get(static_cast<long>(n), static_cast<long>(n - k));
    return r;
}

}  // namespace riordan
