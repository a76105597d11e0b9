#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyded/rational.hpp"

using polyded::Integer;
using polyded::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("zero is 0/1") {
    const Rational z = Rational(5, 7) - Rational(5, 7);
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(z.is_zero());
}

TEST_CASE("arithmetic stays in lowest terms with positive denominator") {
    // Random operation chains; the canonical-form invariant must survive all
    // of them.
    std::mt19937_64 rng(20240517);
    const auto pick = [&]() {
        const long long num = static_cast<long long>(rng() % 41) - 20;
        const long long den = 1 + static_cast<long long>(rng() % 23);
        return Rational(num, den);
    };
    Rational acc(1, 3);
    for (int step = 0; step < 500; ++step) {
        const Rational r = pick();
        switch (rng() % 4) {
            case 0: acc += r; break;
            case 1: acc -= r; break;
            case 2: acc *= r; break;
            default:
                if (!r.is_zero()) acc /= r;
                break;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), acc.numerator().get_mpz_t(), acc.denominator().get_mpz_t());
        REQUIRE(g == 1);
        REQUIRE(acc.denominator() > 0);
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), 0) == Rational(1));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(-2), -3) == Rational(-1, 8));
    CHECK(pow(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(pow(Rational(0), 4) == Rational(0));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("floor follows the greatest-integer convention") {
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-1, 3).floor() == -1);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(-5).floor() == -5);
}

TEST_CASE("text form and parsing round-trip") {
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-12, 4).str() == "-3");

    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("4/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r(static_cast<long long>(rng() % 2001) - 1000, 1 + static_cast<long long>(rng() % 997));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(1));
}

TEST_CASE("binomial coefficients") {
    using polyded::binomial;
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, 9) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

    // Pascal's rule over the whole triangle up to n = 30.
    for (long long n = 1; n <= 30; ++n)
        for (long long k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial") {
    CHECK(polyded::factorial(0) == 1);
    CHECK(polyded::factorial(5) == 120);
    CHECK_THROWS_AS(polyded::factorial(-2), std::invalid_argument);
}
