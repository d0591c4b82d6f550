#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riordan/numeric.hpp"

namespace riordan {

// Truncated formal power series over exact rationals.  A Series of order N
// stores exactly the coefficients of x^0..x^{N-1}; every operation returns a
// result whose order says how many coefficients are actually known.  All
// values are immutable after construction.
class Series {
public:
    explicit Series(std::size_t order) : c_(order) {
        if (order == 0) fail(Errc::order_exceeded, "series of order 0");
    }
    Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) fail(Errc::order_exceeded, "series of order 0");
    }

    static Series constant(const Rat& v, std::size_t order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    static Series one(std::size_t order) { return constant(1, order); }
    static Series x(std::size_t order) {
        Series s(order);
        if (order > 1) s.c_[1] = 1;
        return s;
    }

    std::size_t order() const { return c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t n) const { return c_[n]; }

    const Rat& coeff(std::size_t n) const {
        if (n >= c_.size())
            fail(Errc::order_exceeded, "coefficient " + std::to_string(n) +
                                           " of a series of order " +
                                           std::to_string(c_.size()));
        return c_[n];
    }

    // Index of the first nonzero coefficient; empty if zero to this order.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return i;
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    bool is_integral(std::size_t upto) const {
        for (std::size_t i = 0; i < upto && i < c_.size(); ++i)
            if (denominator(c_[i]) != 1) return false;
        return true;
    }

    Series truncated(std::size_t order) const {
        if (order > c_.size())
            fail(Errc::order_exceeded, "truncation beyond known order");
        return Series(std::vector<Rat>(c_.begin(), c_.begin() + order));
    }

    // Extends with zero coefficients.  Only meaningful inside fixed-point
    // iteration, where the tail is provisional anyway.
    Series padded(std::size_t order) const {
        std::vector<Rat> v = c_;
        v.resize(std::max(order, v.size()));
        return Series(std::move(v));
    }

    Series operator-() const {
        std::vector<Rat> v = c_;
        for (auto& e : v) e = -e;
        return Series(std::move(v));
    }

    friend Series operator+(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
        return Series(std::move(v));
    }
    friend Series operator-(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] - b.c_[i];
        return Series(std::move(v));
    }
    // Convolution runs over plain integers whenever both operands have unit
    // denominators; rational canonicalization costs two orders of magnitude
    // per multiply and most series in this library are integral.
    friend Series operator*(const Series& a, const Series& b) {
        std::size_t n = std::min(a.order(), b.order());
        if (a.is_integral(n) && b.is_integral(n)) {
            std::vector<Int> ai(n), bi(n), acc(n);
            for (std::size_t i = 0; i < n; ++i) {
                ai[i] = numerator(a.c_[i]);
                bi[i] = numerator(b.c_[i]);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (ai[i] == 0) continue;
                for (std::size_t j = 0; i + j < n; ++j) {
                    if (bi[j] == 0) continue;
                    acc[i + j] += ai[i] * bi[j];
                }
            }
            std::vector<Rat> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = Rat(std::move(acc[i]));
            return Series(std::move(v));
        }
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j] == 0) continue;
                v[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Series(std::move(v));
    }
    friend Series operator*(const Rat& s, const Series& a) {
        std::vector<Rat> v = a.c_;
        for (auto& e : v) e *= s;
        return Series(std::move(v));
    }

    // Multiplication by x^k; all coefficients of the result are known.
    Series shifted_up(std::size_t k) const {
        std::vector<Rat> v(c_.size() + k);
        std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
        return Series(std::move(v));
    }

    // Division by x^k; the first k coefficients must vanish.
    Series shifted_down(std::size_t k) const {
        if (k >= c_.size())
            fail(Errc::order_exceeded, "shift below order");
        for (std::size_t i = 0; i < k; ++i)
            if (c_[i] != 0)
                fail(Errc::zero_constant_term,
                     "x^" + std::to_string(k) + " does not divide series");
        return Series(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
    }

    Series reciprocal() const {
        if (c_[0] == 0)
            fail(Errc::zero_constant_term, "reciprocal of series with zero constant term");
        std::size_t n = c_.size();
        std::vector<Rat> v(n);
        v[0] = Rat(1) / c_[0];
        for (std::size_t k = 1; k < n; ++k) {
            Rat s = 0;
            for (std::size_t i = 1; i <= k; ++i) s += c_[i] * v[k - i];
            v[k] = -s / c_[0];
        }
        return Series(std::move(v));
    }

    // Power-series division.  A common power of x is cancelled first; after
    // cancellation the denominator needs a nonzero constant term.  The result
    // order drops by the cancelled valuation.
    friend Series operator/(const Series& a, const Series& b) {
        auto v = b.valuation();
        if (!v) fail(Errc::zero_constant_term, "division by zero series");
        if (*v == 0) return a * b.reciprocal();
        std::size_t n = std::min(a.order(), b.order());
        if (*v >= n) fail(Errc::order_exceeded, "division exhausts series order");
        for (std::size_t i = 0; i < *v; ++i)
            if (a.c_[i] != 0)
                fail(Errc::zero_constant_term,
                     "division by a series of valuation " + std::to_string(*v) +
                         " needs a numerator it divides");
        Series num = a.truncated(n).shifted_down(*v);
        Series den = b.truncated(n).shifted_down(*v);
        return num * den.reciprocal();
    }

    // Substitution a(f); f must have zero constant term.
    Series compose(const Series& f) const {
        if (f.c_[0] != 0)
            fail(Errc::nonzero_constant_term, "composition with nonzero constant term");
        std::size_t n = std::min(order(), f.order());
        Series ft = f.truncated(n);
        Series r(n);
        for (std::size_t i = n; i-- > 0;) {
            r = r * ft;
            r.c_[0] += c_[i];
        }
        return r;
    }

    Series pow(unsigned long e) const {
        Series r = one(order());
        Series b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Square root with positive constant term.  Even valuations are factored
    // out; the order drops by half the valuation.
    Series sqrt() const {
        auto v = valuation();
        if (!v) return *this;  // sqrt(0) = 0
        if (*v % 2 != 0)
            fail(Errc::not_a_square, "sqrt of series with odd valuation");
        if (*v > 0) return shifted_down(*v).sqrt().shifted_up(*v / 2);
        const Rat& a0 = c_[0];
        Int np = numerator(a0), dp = denominator(a0);
        if (np < 0) fail(Errc::not_a_square, "sqrt of negative constant term");
        Int rn = boost::multiprecision::sqrt(np);
        Int rd = boost::multiprecision::sqrt(dp);
        if (rn * rn != np || rd * rd != dp)
            fail(Errc::not_a_square, "constant term " + rat_str(a0) + " has no rational square root");
        std::size_t n = c_.size();
        std::vector<Rat> b(n);
        b[0] = Rat(rn) / rd;
        for (std::size_t k = 1; k < n; ++k) {
            Rat s = 0;
            for (std::size_t i = 1; i < k; ++i) s += b[i] * b[k - i];
            b[k] = (c_[k] - s) / (2 * b[0]);
        }
        return Series(std::move(b));
    }

    bool equal_to(const Series& other, std::size_t order) const {
        if (order > c_.size() || order > other.c_.size())
            fail(Errc::order_exceeded, "equality check beyond known order");
        for (std::size_t i = 0; i < order; ++i)
            if (c_[i] != other.c_[i]) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += rat_str(c_[i]);
        }
        return out;
    }

private:
    std::vector<Rat> c_;
};

// Compositional inverse: the unique rev with f(rev(x)) = x, found one
// coefficient at a time by undetermined coefficients.  Requires f in x + ...
// form up to a unit: f(0) = 0, f'(0) != 0.
inline Series revert(const Series& f) {
    if (f.order() < 2 || f[0] != 0 || f[1] == 0)
        fail(Errc::not_reversible, "reversion needs f(0) = 0 and f'(0) != 0");
    std::size_t n = f.order();
    std::vector<Rat> g(n);
    g[1] = Rat(1) / f[1];
    for (std::size_t m = 2; m < n; ++m) {
        // With g known below m, [x^m] f(g) is linear in g_m with slope f_1.
        Series partial(std::vector<Rat>(g.begin(), g.begin() + static_cast<long>(m) + 1));
        Rat h = f.truncated(m + 1).compose(partial)[m];
        g[m] = -h / f[1];
    }
    return Series(std::move(g));
}

}  // namespace riordan
