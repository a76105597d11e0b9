#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyded/polynomial.hpp"
#include "polyded/rational.hpp"
#include "polyded/series.hpp"

namespace polyded {

namespace testing {

// Test seam: when set, stirling1_table() adds `delta` to the (n, m) entry of
// every table large enough to contain it. Used to prove that the verification
// pipeline actually notices a wrong value.
struct StirlingCorruption {
    int n = 0;
    int m = 0;
    long long delta = 0;
};

inline std::optional<StirlingCorruption>& stirling_corruption() {
    static std::optional<StirlingCorruption> corruption;
    return corruption;
}

}  // namespace testing

// B_0..B_max_n with B_1 = -1/2, built from the defining recurrence
// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
class BernoulliCache {
public:
    explicit BernoulliCache(int max_n) {
        if (max_n < 0) throw std::invalid_argument("BernoulliCache: negative max_n");
        b_.reserve(static_cast<std::size_t>(max_n) + 1);
        b_.emplace_back(1);
        for (int n = 1; n <= max_n; ++n) {
            Rational acc;
            for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b_[static_cast<std::size_t>(j)];
            b_.push_back(-acc / Rational(n + 1));
        }
    }

    int max_n() const { return static_cast<int>(b_.size()) - 1; }

    const Rational& number(int n) const {
        if (n < 0 || n > max_n()) throw std::out_of_range("BernoulliCache: index out of range");
        return b_[static_cast<std::size_t>(n)];
    }

    const std::vector<Rational>& numbers() const { return b_; }

private:
    std::vector<Rational> b_;
};

inline BernoulliCache bernoulli_numbers(int max_n) { return BernoulliCache(max_n); }

// Independent construction via series inversion of (e^t - 1)/t; the n-th
// coefficient times n! is B_n. Cross-checked against the recurrence in tests.
inline std::vector<Rational> bernoulli_numbers_from_series(int max_n) {
    if (max_n < 0) throw std::invalid_argument("bernoulli_numbers_from_series: negative max_n");
    const TruncSeries inv = series_inv(series_shift_down(expm1_series(max_n + 1)));
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(inv.coeff(n) * Rational(factorial(n)));
    return out;
}

// B_n(x) = sum_l C(n, l) B_l x^(n-l).
inline Polynomial bernoulli_poly(int n, const BernoulliCache& cache) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) c[static_cast<std::size_t>(n - l)] = Rational(binomial(n, l)) * cache.number(l);
    return Polynomial(std::move(c));
}

inline Polynomial bernoulli_poly(int n) { return bernoulli_poly(n, BernoulliCache(n)); }

// <x> = x - [x], in [0, 1).
inline Rational fractional_part(const Rational& x) { return x - Rational(x.floor()); }

// Periodic extension: the degree-n Bernoulli polynomial at <x>.
inline Rational bernoulli_function(int n, const Rational& x) {
    return poly_eval(bernoulli_poly(n), fractional_part(x));
}

inline Rational bernoulli_function(int n, const Rational& x, const BernoulliCache& cache) {
    return poly_eval(bernoulli_poly(n, cache), fractional_part(x));
}

// ((x)): 0 at integers, x - [x] - 1/2 elsewhere.
inline Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return fractional_part(x) - Rational(1, 2);
}

// Signed Stirling numbers of the first kind, S1(n+1, m) = S1(n, m-1) - n*S1(n, m),
// stored as the triangle 0 <= m <= n <= max_n.
class Stirling1Table {
public:
    explicit Stirling1Table(int max_n) : max_n_(max_n) {
        if (max_n < 0) throw std::invalid_argument("Stirling1Table: negative max_n");
        s_.resize(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) {
            auto& row = s_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            row[static_cast<std::size_t>(n)] = 1;
            for (int m = 1; m < n; ++m)
                row[static_cast<std::size_t>(m)] = s_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)] -
                                                   Integer(n - 1) * s_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
            if (n >= 1) row[0] = 0;
        }
        if (const auto& corrupt = testing::stirling_corruption();
            corrupt && corrupt->n <= max_n && corrupt->m >= 0 && corrupt->m <= corrupt->n)
            s_[static_cast<std::size_t>(corrupt->n)][static_cast<std::size_t>(corrupt->m)] += make_integer(corrupt->delta);
    }

    int max_n() const { return max_n_; }

    const Integer& at(int n, int m) const {
        if (n < 0 || n > max_n_ || m < 0 || m > n) throw std::out_of_range("Stirling1Table: index outside triangle");
        return s_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

    // Zero outside the triangle; convenient in summations.
    Integer value(int n, int m) const {
        if (n < 0 || n > max_n_) throw std::out_of_range("Stirling1Table: row out of range");
        if (m < 0 || m > n) return Integer(0);
        return s_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

private:
    int max_n_;
    std::vector<std::vector<Integer>> s_;
};

inline Stirling1Table stirling1_table(int max_n) { return Stirling1Table(max_n); }

// sum_{l=0}^{n-1} l^j via the Bernoulli closed form (B_{j+1}(n) - B_{j+1})/(j+1).
inline Rational power_sum(long long j, long long n) {
    if (j < 0) throw std::invalid_argument("power_sum: negative exponent");
    if (n < 1) throw std::invalid_argument("power_sum: n must be positive");
    const BernoulliCache cache(static_cast<int>(j) + 1);
    const Polynomial b = bernoulli_poly(static_cast<int>(j) + 1, cache);
    return (poly_eval(b, Rational(n)) - cache.number(static_cast<int>(j) + 1)) / Rational(j + 1);
}

// One evaluation of the distribution relations for modulus d at the point x:
//   (a) sum_i B_n((x+i)/d) = d^(1-n) B_n(x)        (also as a coefficient identity)
//   (b) the same with Bernoulli functions
//   (c) sum_i B_n((<x>+i)/d) = sum_i Bbar_n((x+i)/d)
struct DistributionReport {
    int n = 0;
    long long d = 1;
    Rational x;
    Rational a_lhs, a_rhs;
    Rational b_lhs, b_rhs;
    Rational c_lhs, c_rhs;
    bool a_holds = false;
    bool b_holds = false;
    bool c_holds = false;
    bool all_hold() const { return a_holds && b_holds && c_holds; }
};

inline DistributionReport verify_distribution(int n, long long d, const Rational& x) {
    if (n < 0) throw std::invalid_argument("verify_distribution: negative n");
    if (d < 1) throw std::invalid_argument("verify_distribution: d must be positive");
    const BernoulliCache cache(n);
    const Polynomial bn = bernoulli_poly(n, cache);
    const Rational inv_d(1, d);

    DistributionReport report;
    report.n = n;
    report.d = d;
    report.x = x;

    Polynomial lhs_poly;
    for (long long i = 0; i < d; ++i) lhs_poly += poly_compose_affine(bn, inv_d, Rational(i, d));
    const Polynomial rhs_poly = pow(Rational(d), 1 - static_cast<long long>(n)) * bn;
    report.a_lhs = poly_eval(lhs_poly, x);
    report.a_rhs = poly_eval(rhs_poly, x);
    report.a_holds = lhs_poly == rhs_poly && report.a_lhs == report.a_rhs;

    for (long long i = 0; i < d; ++i) report.b_lhs += poly_eval(bn, fractional_part((x + Rational(i)) / Rational(d)));
    report.b_rhs = pow(Rational(d), 1 - static_cast<long long>(n)) * poly_eval(bn, fractional_part(x));
    report.b_holds = report.b_lhs == report.b_rhs;

    const Rational fx = fractional_part(x);
    for (long long i = 0; i < d; ++i) report.c_lhs += poly_eval(bn, (fx + Rational(i)) / Rational(d));
    report.c_rhs = report.b_lhs;  // the (c) right side is literally the (b) left side
    report.c_holds = report.c_lhs == report.c_rhs;

    return report;
}

}  // namespace polyded
