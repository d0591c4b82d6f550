#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Everything that can go wrong carries one of these codes, so callers and
// tests can match on the condition rather than on message text.
enum class Errc {
    zero_constant_term,
    nonzero_constant_term,
    not_reversible,
    not_a_square,
    not_contractive,
    order_exceeded,
    non_integral_entry,
    singular_matrix,
    beta0_zero,
    f2_zero,
    no_potential,
    insufficient_terms,
    insufficient_depth,
    zero_hankel,
    parse_error,
    dimension_mismatch,
    usage_error,
};

class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw DomainError(code, what);
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact extraction; matrix entries are never rounded.
inline Int require_integer(const Rat& r, const char* where) {
    if (denominator(r) != 1)
        fail(Errc::non_integral_entry,
             std::string(where) + ": non-integral value " + r.str());
    return numerator(r);
}

// Accepts "p" or "p/q" with optional sign.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) fail(Errc::parse_error, "rational with zero denominator: " + s);
        return Rat(num) / den;
    } catch (const std::runtime_error&) {
        fail(Errc::parse_error, "bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace riordan
