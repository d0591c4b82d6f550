#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "riordan/parser.hpp"
#include "riordan/transforms.hpp"

using namespace riordan;

namespace {

// plain rational Gaussian elimination, independent of the Bareiss path
Rat naive_det(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
};

}  // namespace

TEST_CASE("hankel transform") {
    std::vector<Int> rs5{1, 3, 13, 60, 283, 1348, 6454, 30992, 149091};
    CHECK(hankel(rs5, 5) == std::vector<Int>{1, 4, 15, 56, 209});

    std::vector<Int> rsT{1, 5, 30, 191, 1241, 8129, 53448, 352097, 2321962};
    CHECK(hankel(rsT, 5) == std::vector<Int>{1, 5, 24, 115, 551});

    std::vector<Int> catalan{1, 1, 2, 5, 14, 42, 132};
    CHECK(hankel(catalan, 4) == std::vector<Int>{1, 1, 1, 1});

    CHECK_THROWS_MATCHES(hankel(catalan, 5), DomainError,
                         Catch::Matchers::Predicate<DomainError>([](const DomainError& e) {
                             return e.code() == Errc::insufficient_terms;
                         }));
}

TEST_CASE("hankel agrees with naive rational determinants") {
    Rng rng{0xdecade5ull};
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = 2 + rep % 5;  // up to 6x6
        std::vector<Int> seq(2 * n + 1);
        for (auto& v : seq) v = rng.range(-9, 9);
        auto h = hankel(seq, n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<std::vector<Rat>> m(k + 1, std::vector<Rat>(k + 1));
            for (std::size_t i = 0; i <= k; ++i)
                for (std::size_t j = 0; j <= k; ++j) m[i][j] = Rat(seq[i + j]);
            CHECK(Rat(h[k]) == naive_det(m));
        }
    }
}

TEST_CASE("invert transform") {
    Series a = invert_transform(parse_series("1/(1-2*x-2*x^2)", 20));
    CHECK(a.equal_to(parse_series("1/(1-3*x-2*x^2)", 20), 20));

    CHECK(invert_transform(Series(10)).is_zero());

    Series g = invert_transform(parse_series("1/(1-x)", 20));
    CHECK(g.equal_to(parse_series("1/(1-2*x)", 20), 20));
}

TEST_CASE("continued fraction evaluation") {
    CFSpec jac;  // all-ones Jacobi fraction gives the Motzkin numbers
    jac.kind = CFSpec::Kind::jacobi;
    jac.b_or_c.assign(16, 1);
    jac.lam_or_d.assign(16, 1);
    Series m = cf_eval(jac, 12);
    CHECK(m.equal_to(parse_series("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", 14), 12));

    CFSpec jac2;  // b = (2,3,3,...), lam = 2: large Schroeder numbers
    jac2.kind = CFSpec::Kind::jacobi;
    jac2.b_or_c.assign(16, 3);
    jac2.b_or_c[0] = 2;
    jac2.lam_or_d.assign(16, 2);
    Series s = cf_eval(jac2, 12);
    CHECK(s.equal_to(parse_series("(1-x-sqrt(1-6*x+x^2))/(2*x)", 14), 12));

    CFSpec thr;  // c = d = 1: also Schroeder
    thr.kind = CFSpec::Kind::thron;
    thr.b_or_c.assign(20, 1);
    thr.lam_or_d.assign(20, 1);
    CHECK(cf_eval(thr, 12).equal_to(s, 12));

    CFSpec shallow = thr;
    shallow.b_or_c.resize(6);
    shallow.lam_or_d.resize(6);
    CHECK_THROWS_MATCHES(cf_eval(shallow, 12), DomainError,
                         Catch::Matchers::Predicate<DomainError>([](const DomainError& e) {
                             return e.code() == Errc::insufficient_depth;
                         }));
}

TEST_CASE("J-fraction extraction") {
    CFSpec m = jfraction_extract(parse_series("(1-x-sqrt(1-2*x-3*x^2))/(2*x^2)", 25), 8);
    CHECK(m.b_or_c == std::vector<Rat>(8, 1));
    CHECK(m.lam_or_d == std::vector<Rat>(8, 1));

    CFSpec s = jfraction_extract(parse_series("(1-x-sqrt(1-6*x+x^2))/(2*x)", 25), 8);
    CHECK(s.b_or_c == std::vector<Rat>{2, 3, 3, 3, 3, 3, 3, 3});
    CHECK(s.lam_or_d == std::vector<Rat>(8, 2));

    // terminating fraction: geometric series
    CFSpec g = jfraction_extract(parse_series("1/(1-x)", 25), 6);
    CHECK(g.b_or_c == std::vector<Rat>{1, 0, 0, 0, 0, 0});
    CHECK(g.lam_or_d == std::vector<Rat>(6, 0));

    // round-trip through evaluation
    Series fib = parse_series("1/(1-x-x^2)", 25);
    CFSpec f = jfraction_extract(fib, 9);
    CHECK(cf_eval(f, 16).equal_to(fib, 16));

    // vanishing Hankel determinant: 1 + x^2 + ... has h_1 = -1, but
    // 1/(1-x^3)-ish sequences break at the right spot
    Series bad = parse_series("1+x^3", 25);
    CHECK_THROWS_MATCHES(jfraction_extract(bad, 6), DomainError,
                         Catch::Matchers::Predicate<DomainError>([](const DomainError& e) {
                             return e.code() == Errc::zero_hankel;
                         }));

    CHECK_THROWS_AS(jfraction_extract(parse_series("2+x", 25), 4), DomainError);
    CHECK_THROWS_AS(jfraction_extract(parse_series("1/(1-x)", 6), 8), DomainError);
}

TEST_CASE("Somos-4 recurrence check") {
    std::vector<Int> ones{1, 1, 1, 1, 1};
    CHECK(somos4_check(ones, 1, 0));
    CHECK_FALSE(somos4_check(ones, 2, 0));
    CHECK(somos4_check(ones, 0, 1));

    // classic Somos-4: a(n) a(n-4) = a(n-1) a(n-3) + a(n-2)^2
    std::vector<Int> somos{1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209};
    CHECK(somos4_check(somos, 1, 1));
    CHECK_FALSE(somos4_check(somos, 1, 2));

    CHECK_THROWS_AS(somos4_check(std::vector<Int>{1, 1, 1}, 1, 1), DomainError);
}
