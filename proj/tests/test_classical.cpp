#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyded/classical.hpp"

using polyded::BernoulliCache;
using polyded::Polynomial;
using polyded::Rational;
using polyded::Stirling1Table;

namespace {

Rational random_rational(std::mt19937_64& rng, long long max_den) {
    const long long den = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(max_den));
    const long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(8 * den)) - 4 * den;
    return Rational(num, den);
}

}  // namespace

TEST_CASE("Bernoulli numbers from the recurrence") {
    const BernoulliCache cache(10);
    CHECK(cache.number(0) == Rational(1));
    CHECK(cache.number(1) == Rational(-1, 2));
    CHECK(cache.number(2) == Rational(1, 6));
    CHECK(cache.number(4) == Rational(-1, 30));
    CHECK(cache.number(6) == Rational(1, 42));
    CHECK(cache.number(3) == Rational(0));
    CHECK(cache.number(5) == Rational(0));
    CHECK(cache.number(7) == Rational(0));
}

TEST_CASE("recurrence and series-inversion constructions agree") {
    const BernoulliCache recurrence(20);
    const auto series = polyded::bernoulli_numbers_from_series(20);
    for (int n = 0; n <= 20; ++n) REQUIRE(recurrence.number(n) == series[static_cast<std::size_t>(n)]);
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(polyded::bernoulli_poly(0) == Polynomial({Rational(1)}));
    CHECK(polyded::bernoulli_poly(1) == Polynomial({Rational(-1, 2), Rational(1)}));
    CHECK(polyded::bernoulli_poly(2) == Polynomial({Rational(1, 6), Rational(-1), Rational(1)}));
}

TEST_CASE("telescoping: B_n(1) - B_n(0) vanishes except at n = 1") {
    for (int n = 0; n <= 20; ++n) {
        const Polynomial b = polyded::bernoulli_poly(n);
        const Rational diff = poly_eval(b, Rational(1)) - poly_eval(b, Rational(0));
        REQUIRE(diff == (n == 1 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("reflection: B_n(1-x) = (-1)^n B_n(x) as polynomials") {
    for (int n = 0; n <= 15; ++n) {
        const Polynomial b = polyded::bernoulli_poly(n);
        const Polynomial reflected = poly_compose_affine(b, Rational(-1), Rational(1));
        REQUIRE(reflected == (n % 2 ? Rational(-1) : Rational(1)) * b);
    }
}

TEST_CASE("fractional_part") {
    CHECK(polyded::fractional_part(Rational(7, 3)) == Rational(1, 3));
    CHECK(polyded::fractional_part(Rational(-1, 3)) == Rational(2, 3));
    CHECK(polyded::fractional_part(Rational(5)) == Rational(0));
    CHECK(polyded::fractional_part(Rational(-5)) == Rational(0));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational f = polyded::fractional_part(random_rational(rng, 97));
        REQUIRE(f >= Rational(0));
        REQUIRE(f < Rational(1));
    }
}

TEST_CASE("bernoulli_function") {
    CHECK(polyded::bernoulli_function(1, Rational(1, 2)) == Rational(0));
    CHECK(polyded::bernoulli_function(1, Rational(4, 3)) == Rational(-1, 6));
    CHECK(polyded::bernoulli_function(2, Rational(-2, 3)) == Rational(-1, 18));
}

TEST_CASE("bernoulli_function has period 1") {
    std::mt19937_64 rng(12);
    for (int n = 0; n <= 8; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Rational x = random_rational(rng, 50);
            REQUIRE(polyded::bernoulli_function(n, x + Rational(1)) == polyded::bernoulli_function(n, x));
        }
}

TEST_CASE("sawtooth") {
    CHECK(polyded::sawtooth(Rational(0)) == Rational(0));
    CHECK(polyded::sawtooth(Rational(4)) == Rational(0));
    CHECK(polyded::sawtooth(Rational(-7)) == Rational(0));
    CHECK(polyded::sawtooth(Rational(1, 4)) == Rational(-1, 4));
    CHECK(polyded::sawtooth(Rational(7, 3)) == Rational(-1, 6));
    CHECK(polyded::sawtooth(Rational(-1, 4)) == Rational(1, 4));
}

TEST_CASE("Stirling numbers of the first kind") {
    const Stirling1Table table(15);
    CHECK(table.at(3, 2) == -3);
    CHECK(table.at(4, 2) == 11);
    CHECK(table.at(2, 1) == -1);
    for (int n = 0; n <= 15; ++n) CHECK(table.at(n, n) == 1);
    for (int n = 1; n <= 15; ++n) CHECK(table.at(n, 0) == 0);
    CHECK(table.value(4, 9) == 0);
    CHECK(table.value(4, -1) == 0);

    // row sums vanish from the second row on
    for (int n = 2; n <= 15; ++n) {
        polyded::Integer sum = 0;
        for (int m = 0; m <= n; ++m) sum += table.at(n, m);
        REQUIRE(sum == 0);
    }
    // first column: (-1)^(n-1) (n-1)!
    for (int n = 1; n <= 12; ++n) {
        polyded::Integer expected = polyded::factorial(n - 1);
        if (n % 2 == 0) expected = -expected;
        REQUIRE(table.at(n, 1) == expected);
    }
    // interior recurrence
    for (int n = 1; n <= 14; ++n)
        for (int m = 1; m <= n; ++m)
            REQUIRE(table.at(n + 1, m) == table.value(n, m - 1) - polyded::Integer(n) * table.value(n, m));
}

TEST_CASE("power_sum") {
    CHECK(polyded::power_sum(2, 3) == Rational(5));
    CHECK(polyded::power_sum(0, 7) == Rational(7));
    CHECK(polyded::power_sum(5, 1) == Rational(0));
    CHECK_THROWS_AS(polyded::power_sum(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(polyded::power_sum(2, 0), std::invalid_argument);

    // brute-force oracle; 0^0 counts as 1
    for (long long j = 0; j <= 8; ++j)
        for (long long n = 1; n <= 50; ++n) {
            Rational direct;
            for (long long l = 0; l < n; ++l)
                direct += (j == 0) ? Rational(1) : Rational(polyded::pow_integer(polyded::make_integer(l), j));
            REQUIRE(polyded::power_sum(j, n) == direct);
        }
}

TEST_CASE("distribution relations at fixed points") {
    // n = 1, d = 2: B_1(x/2) + B_1((x+1)/2) = x - 1/2 = 2^0 B_1(x)
    const auto r1 = polyded::verify_distribution(1, 2, Rational(3, 7));
    CHECK(r1.a_holds);
    CHECK(r1.b_holds);
    CHECK(r1.c_holds);

    // d = 1 collapses to the same expression on both sides
    const auto r2 = polyded::verify_distribution(6, 1, Rational(-13, 9));
    CHECK(r2.all_hold());

    // n = 2, d = 3, x = 1/2: both function sides equal -1/36
    const auto r3 = polyded::verify_distribution(2, 3, Rational(1, 2));
    CHECK(r3.all_hold());
    CHECK(r3.b_lhs == Rational(-1, 36));
    CHECK(r3.b_rhs == Rational(-1, 36));

    CHECK_THROWS_AS(polyded::verify_distribution(2, 0, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(polyded::verify_distribution(-1, 2, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("distribution relation holds as a polynomial identity") {
    for (int n = 0; n <= 10; ++n)
        for (long long d = 1; d <= 6; ++d) {
            const auto report = polyded::verify_distribution(n, d, Rational(1, 3));
            REQUIRE(report.a_holds);
        }
}

TEST_CASE("distribution relations for functions at random rationals") {
    std::mt19937_64 rng(4242);
    for (int n = 0; n <= 8; ++n)
        for (long long d = 1; d <= 5; ++d)
            for (int trial = 0; trial < 100; ++trial) {
                const Rational x = random_rational(rng, 50);
                const auto report = polyded::verify_distribution(n, d, x);
                REQUIRE(report.b_holds);
                REQUIRE(report.c_holds);
            }
}
