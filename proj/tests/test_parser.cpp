#include <catch2/catch_amalgamated.hpp>

#include "riordan/parser.hpp"

using namespace riordan;

namespace {

bool starts_with(const Series& s, std::vector<long long> want) {
    for (std::size_t i = 0; i < want.size(); ++i)
        if (s.coeff(i) != Rat(want[i])) return false;
    return true;
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    throw std::logic_error("expected a DomainError");
}

}  // namespace

TEST_CASE("grammar basics") {
    CHECK(starts_with(parse_series("1/(1-x)", 6), {1, 1, 1, 1, 1, 1}));
    CHECK(starts_with(parse_series("(1+x)/(1-x)", 6), {1, 2, 2, 2, 2, 2}));
    CHECK(starts_with(parse_series("x^3", 5), {0, 0, 0, 1, 0}));
    CHECK(starts_with(parse_series("2^3", 4), {8, 0, 0, 0}));
    CHECK(starts_with(parse_series("1 - x * ( 2 + x )", 4), {1, -2, -1, 0}));
    CHECK(starts_with(parse_series("-x+1", 4), {1, -1, 0, 0}));
}

TEST_CASE("sqrt and cancellation") {
    Series s = parse_series("(1-x-sqrt(1-6*x+x^2))/(2*x)", 12);
    CHECK(starts_with(s, {1, 2, 6, 22, 90, 394, 1806}));
    // x-power cancellation happens before the division is rejected
    CHECK_NOTHROW(parse_series("(1-sqrt(1-4*x))/(2*x)", 12));
    CHECK(starts_with(parse_series("(1-sqrt(1-4*x))/(2*x)", 12), {1, 1, 2, 5, 14, 42, 132}));
}

TEST_CASE("named symbols") {
    Environment env;
    env.insert_or_assign("c", parse_series("(1-sqrt(1-4*x))/(2*x)", 12));
    CHECK(starts_with(parse_series("c^2", 8, env), {1, 2, 5, 14, 42, 132}));
    CHECK(starts_with(parse_series("1+x*c^2", 8, env), {1, 1, 2, 5, 14, 42}));
    CHECK(code_of([&] { parse_series("q+1", 8, env); }) == Errc::parse_error);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_series("1+", 4); }) == Errc::parse_error);
    CHECK(code_of([] { parse_series("(1+x", 4); }) == Errc::parse_error);
    CHECK(code_of([] { parse_series("x x", 4); }) == Errc::parse_error);  // no implicit product
    CHECK(code_of([] { parse_series("x^-2", 4); }) == Errc::parse_error);
    CHECK(code_of([] { parse_series("sqrt 4", 4); }) == Errc::parse_error);
    CHECK(code_of([] { parse_series("1/(x-x)", 4); }) == Errc::zero_constant_term);
    CHECK(code_of([] { parse_series("sqrt(x)", 4); }) == Errc::not_a_square);
    CHECK(code_of([] { parse_series("1/x", 4); }) == Errc::zero_constant_term);
}

TEST_CASE("fixed points") {
    Series t = solve_fixpoint("g", "1+x*g^3", 8);
    CHECK(starts_with(t, {1, 1, 3, 12, 55, 273, 1428, 7752}));

    Series c = solve_fixpoint("c", "1+x*c^2", 10);
    CHECK(c.equal_to(parse_series("(1-sqrt(1-4*x))/(2*x)", 11), 10));

    // u/x = 1 + u + u^2/x, rewritten as u = x + x*u + u^2
    Series u = solve_fixpoint("u", "x+x*u+u^2", 9);
    CHECK(starts_with(u, {0, 1, 2, 6, 22, 90, 394, 1806, 8558}));

    // division by x inside the iteration costs guard coefficients, not accuracy
    Series v = solve_fixpoint("u", "x+x*u+u^3/x", 9);
    CHECK(starts_with(v, {0, 1, 2, 8, 44, 280, 1936, 14128, 107088}));

    // substituting the solution back reproduces it coefficient-exactly
    Environment env;
    env.insert_or_assign("u", v);
    CHECK(parse_series("x+x*u+u^3/x", 9, env).equal_to(v, 8));
}

TEST_CASE("non-contractive equations are rejected") {
    CHECK(code_of([] { solve_fixpoint("u", "1+u", 8); }) == Errc::not_contractive);
    CHECK(code_of([] { solve_fixpoint("u", "2*u+x", 8); }) == Errc::not_contractive);
}
