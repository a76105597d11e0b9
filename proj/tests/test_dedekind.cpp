#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "polyded/dedekind.hpp"

using polyded::PolyBernoulliCache;
using polyded::Rational;

TEST_CASE("dedekind_sum on fixed inputs") {
    CHECK(polyded::dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(polyded::dedekind_sum(5, 1) == Rational(0));
    CHECK(polyded::dedekind_sum(1, 2) == Rational(0));
    CHECK(polyded::dedekind_sum(3, 5) == polyded::dedekind_sum(8, 5));  // periodic in h mod m
    CHECK_THROWS_AS(polyded::dedekind_sum(1, 0), std::invalid_argument);
}

TEST_CASE("the three classical sum expressions agree on coprime pairs") {
    for (long long h = 1; h <= 12; ++h)
        for (long long m = 1; m <= 12; ++m) {
            if (std::gcd(h, m) != 1) continue;
            const Rational reference = polyded::dedekind_sum(h, m);
            REQUIRE(polyded::dedekind_sum_linear_form(h, m) == reference);
            REQUIRE(polyded::dedekind_sum_bernoulli_form(h, m) == reference);
        }
}

TEST_CASE("apostol_sum on fixed inputs") {
    CHECK(polyded::apostol_sum(2, 1, 3) == Rational(-1, 18));
    CHECK(polyded::apostol_sum(4, 7, 1) == Rational(0));
    // p = 1 reduces to the classical sum on coprime pairs
    for (long long h = 1; h <= 8; ++h)
        for (long long m = 1; m <= 8; ++m) {
            if (std::gcd(h, m) != 1) continue;
            REQUIRE(polyded::apostol_sum(1, h, m) == polyded::dedekind_sum(h, m));
        }
    CHECK_THROWS_AS(polyded::apostol_sum(0, 1, 3), std::invalid_argument);
}

TEST_CASE("poly_dedekind_sum on fixed inputs") {
    CHECK(polyded::poly_dedekind_sum(2, 3, 2, 1) == Rational(0));
    // S_1^(2)(1,2) = (1/2) Bbar_1^(2)(1/2) = (1/2)(1/2 - 3/4)
    CHECK(polyded::poly_dedekind_sum(2, 1, 1, 2) == Rational(-1, 8));
    // index 1 reduces to the Apostol sum
    for (long long p = 1; p <= 6; ++p) {
        const PolyBernoulliCache cache(1, static_cast<int>(p));
        for (long long h = 1; h <= 8; ++h)
            for (long long m = 1; m <= 8; ++m)
                REQUIRE(polyded::poly_dedekind_sum(cache, p, h, m) == polyded::apostol_sum(p, h, m));
    }
}

TEST_CASE("h = 1 closed form matches direct summation for every parity") {
    for (int k = -2; k <= 3; ++k)
        for (long long p = 1; p <= 6; ++p) {
            const PolyBernoulliCache cache(k, static_cast<int>(p));
            for (long long m = 1; m <= 8; ++m)
                REQUIRE(polyded::poly_dedekind_sum_h1_closed(cache, p, m) ==
                        polyded::poly_dedekind_sum(cache, p, 1, m));
        }
}

TEST_CASE("classical reciprocity") {
    {
        const auto r = polyded::classical_reciprocity_check(1, 3);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(1, 18));
    }
    {
        const auto r = polyded::classical_reciprocity_check(1, 1);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(0));
    }
    CHECK(polyded::classical_reciprocity_check(3, 5).holds);
    for (long long h = 1; h <= 12; ++h)
        for (long long m = 1; m <= 12; ++m) {
            if (std::gcd(h, m) != 1) continue;
            REQUIRE(polyded::classical_reciprocity_check(h, m).holds);
        }
    CHECK_THROWS_WITH(polyded::classical_reciprocity_check(4, 6),
                      Catch::Matchers::ContainsSubstring("gcd(4, 6) = 2"));
}

TEST_CASE("apostol reciprocity") {
    CHECK(polyded::apostol_reciprocity_check(1, 1, 3).holds);
    CHECK(polyded::apostol_reciprocity_check(3, 2, 3).holds);
    {
        const auto r = polyded::apostol_reciprocity_check(3, 1, 1);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(0));
    }
    for (long long p : {1, 3, 5, 7})
        for (long long h = 1; h <= 6; ++h)
            for (long long m = 1; m <= 6; ++m) {
                if (std::gcd(h, m) != 1) continue;
                REQUIRE(polyded::apostol_reciprocity_check(p, h, m).holds);
            }
    CHECK_THROWS_AS(polyded::apostol_reciprocity_check(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(polyded::apostol_reciprocity_check(3, 2, 4), std::invalid_argument);
}

TEST_CASE("apostol reciprocity at p = 1 is the classical relation rescaled") {
    for (long long h = 1; h <= 8; ++h)
        for (long long m = 1; m <= 8; ++m) {
            if (std::gcd(h, m) != 1) continue;
            const auto apostol = polyded::apostol_reciprocity_check(1, h, m);
            const auto classical = polyded::classical_reciprocity_check(h, m);
            REQUIRE(apostol.holds);
            // (p+1) h m (S(h,m) + S(m,h)) should equal the Apostol left side
            REQUIRE(apostol.lhs == Rational(2) * Rational(h) * Rational(m) * classical.lhs);
        }
}

TEST_CASE("theorem10_rhs on fixed inputs") {
    CHECK(polyded::theorem10_rhs(2, 4, 1, 1) == Rational(0));
    CHECK(polyded::theorem10_rhs(-3, 2, 1, 1) == Rational(0));

    // at index 1 the Stirling weight collapses and the corollary11 double sum
    // must reproduce it
    for (long long p = 1; p <= 4; ++p)
        for (long long h = 1; h <= 5; ++h)
            for (long long m = 1; m <= 5; ++m) {
                if (std::gcd(h, m) != 1) continue;
                REQUIRE(polyded::theorem10_rhs(1, p, h, m) == polyded::corollary11_check(p, h, m).rhs);
            }

    // independent route to the left side
    const PolyBernoulliCache cache(2, 2);
    const Rational lhs = Rational(2) * pow(Rational(3), 2) * polyded::poly_dedekind_sum(cache, 2, 2, 3) +
                         Rational(3) * pow(Rational(2), 2) * polyded::poly_dedekind_sum(cache, 2, 3, 2);
    CHECK(polyded::theorem10_rhs(2, 2, 2, 3) == lhs);
}

TEST_CASE("theorem10 reciprocity") {
    {
        const auto r = polyded::theorem10_check(3, 2, 1, 1);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(0));
    }
    CHECK(polyded::theorem10_check(-1, 3, 3, 4).holds);
    CHECK_THROWS_AS(polyded::theorem10_check(1, 2, 2, 6), std::invalid_argument);
}

TEST_CASE("theorem10 at index 1 agrees with corollary11") {
    for (long long p = 1; p <= 4; ++p) {
        const PolyBernoulliCache cache(1, static_cast<int>(p));
        for (long long h = 1; h <= 5; ++h)
            for (long long m = 1; m <= 5; ++m) {
                if (std::gcd(h, m) != 1) continue;
                const auto t10 = polyded::theorem10_check(1, p, h, m, cache);
                const auto c11 = polyded::corollary11_check(p, h, m);
                REQUIRE(t10.holds);
                REQUIRE(c11.holds);
                REQUIRE(t10.lhs == c11.lhs);
                REQUIRE(t10.rhs == c11.rhs);
            }
    }
}

TEST_CASE("corollary11 on fixed inputs") {
    {
        const auto r = polyded::corollary11_check(1, 1, 3);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(1, 6));
    }
    CHECK(polyded::corollary11_check(3, 1, 1).holds);
    CHECK(polyded::corollary11_check(4, 2, 5).holds);
    CHECK_THROWS_AS(polyded::corollary11_check(2, 4, 6), std::invalid_argument);
}

TEST_CASE("proposition6") {
    CHECK(polyded::proposition6_check(1, 3, 2).holds);
    {
        const auto r = polyded::proposition6_check(2, 3, 1);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(0));
        REQUIRE(r.rhs == Rational(0));
    }
    CHECK(polyded::proposition6_check(0, 5, 3).holds);
    CHECK_THROWS_AS(polyded::proposition6_check(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(polyded::proposition6_check(1, 1, 2), std::invalid_argument);
}

TEST_CASE("theorem7") {
    CHECK(polyded::theorem7_check(1, 3, 2).holds);
    CHECK(polyded::theorem7_check(2, 5, 4).holds);
    {
        const auto r = polyded::theorem7_check(-2, 3, 1);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Rational(0));
    }
    CHECK_THROWS_AS(polyded::theorem7_check(1, 2, 2), std::invalid_argument);
}

TEST_CASE("theorem8") {
    CHECK(polyded::theorem8_check(0, 3, 1, 1).holds);
    CHECK(polyded::theorem8_check(1, 3, 2, 3).holds);
    CHECK(polyded::theorem8_check(-2, 5, 3, 2).holds);
    CHECK_THROWS_AS(polyded::theorem8_check(1, 3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(polyded::theorem8_check(1, 4, 2, 3), std::invalid_argument);
}

TEST_CASE("sum_table") {
    {
        const auto table = polyded::sum_table(polyded::SumKind::classical, {1}, {1, 2, 3});
        REQUIRE(table.size() == 3);
        CHECK(table[0].value == Rational(0));
        CHECK(table[1].value == Rational(0));
        CHECK(table[2].value == Rational(1, 18));
        CHECK(table[2].params.h == 1);
        CHECK(table[2].params.m == 3);
        CHECK_FALSE(table[2].params.p.has_value());
    }
    {
        // the poly table at index 1 is the apostol table
        const auto poly =
            polyded::sum_table(polyded::SumKind::poly, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}, {1});
        const auto apostol = polyded::sum_table(polyded::SumKind::apostol, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3});
        REQUIRE(poly.size() == apostol.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            REQUIRE(poly[i].value == apostol[i].value);
            REQUIRE(poly[i].params.h == apostol[i].params.h);
            REQUIRE(poly[i].params.m == apostol[i].params.m);
            REQUIRE(poly[i].params.p == apostol[i].params.p);
        }
    }
    {
        const auto empty = polyded::sum_table(polyded::SumKind::classical, {1, 2}, {});
        CHECK(empty.empty());
    }
    {
        // lexicographic (h, m, p, k) enumeration
        const auto table = polyded::sum_table(polyded::SumKind::poly, {1, 2}, {1, 3}, {1, 2}, {0, 1});
        REQUIRE(table.size() == 16);
        std::vector<std::array<long long, 4>> seen;
        for (const auto& e : table) seen.push_back({e.params.h, e.params.m, *e.params.p, *e.params.k});
        auto sorted = seen;
        std::sort(sorted.begin(), sorted.end());
        CHECK(seen == sorted);
        CHECK(seen[0] == std::array<long long, 4>{1, 1, 1, 0});
        CHECK(seen[15] == std::array<long long, 4>{2, 3, 2, 1});
    }
}
