#pragma once

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyded/classical.hpp"
#include "polyded/polynomial.hpp"
#include "polyded/rational.hpp"
#include "polyded/report.hpp"
#include "polyded/series.hpp"

namespace polyded {

// Cap on |k| for poly-Bernoulli indices. Purely a guard against runaway
// rational growth; there is no mathematical restriction.
inline int& poly_bernoulli_index_cap() {
    static int cap = 16;
    return cap;
}

namespace detail {

inline void check_index(int k) {
    const int cap = poly_bernoulli_index_cap();
    if (k > cap || k < -cap)
        throw std::invalid_argument("poly-Bernoulli index |k| exceeds the configured cap of " +
                                    std::to_string(cap));
}

}  // namespace detail

// Type 2 poly-Bernoulli numbers and polynomials of index k:
//   Ei_k(log(1+t)) / (e^t - 1) * e^(xt) = sum B_n^(k)(x) t^n / n!.
// Numbers come from the generating function, assembled as
// [Ei_k(log(1+t))/t] * [t/(e^t-1)] so that both factors are invertible;
// polynomials follow from the binomial expansion over the numbers. Index 1
// reproduces the classical Bernoulli family.
class PolyBernoulliCache {
public:
    PolyBernoulliCache(int k, int max_n) : k_(k) {
        detail::check_index(k);
        if (max_n < 0) throw std::invalid_argument("PolyBernoulliCache: negative max_n");
        const int order = max_n + 1;
        const TruncSeries composed = series_compose(polyexp_series(k, order), log1p_series(order));
        const TruncSeries numerator = series_shift_down(composed);            // Ei_k(log(1+t))/t
        const TruncSeries denominator = series_shift_down(expm1_series(order));  // (e^t-1)/t
        const TruncSeries gf = series_mul(numerator, series_inv(denominator));

        numbers_.reserve(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) numbers_.push_back(gf.coeff(n) * Rational(factorial(n)));

        polys_.reserve(numbers_.size());
        for (int n = 0; n <= max_n; ++n) {
            std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
            for (int l = 0; l <= n; ++l)
                c[static_cast<std::size_t>(n - l)] = Rational(binomial(n, l)) * numbers_[static_cast<std::size_t>(l)];
            polys_.emplace_back(std::move(c));
        }
    }

    int index_k() const { return k_; }
    int max_n() const { return static_cast<int>(numbers_.size()) - 1; }

    const Rational& number(int n) const {
        if (n < 0 || n > max_n()) throw std::out_of_range("PolyBernoulliCache: number index out of range");
        return numbers_[static_cast<std::size_t>(n)];
    }

    const Polynomial& poly(int n) const {
        if (n < 0 || n > max_n()) throw std::out_of_range("PolyBernoulliCache: polynomial index out of range");
        return polys_[static_cast<std::size_t>(n)];
    }

    // B_n^(k)(x).
    Rational value_at(int n, const Rational& x) const { return poly_eval(poly(n), x); }

    // Bbar_n^(k)(x) = B_n^(k)(<x>).
    Rational function_at(int n, const Rational& x) const { return poly_eval(poly(n), fractional_part(x)); }

    const std::vector<Rational>& numbers() const { return numbers_; }

private:
    int k_;
    std::vector<Rational> numbers_;
    std::vector<Polynomial> polys_;
};

inline std::vector<Rational> poly_bernoulli_numbers(int k, int max_n) {
    return PolyBernoulliCache(k, max_n).numbers();
}

inline Polynomial poly_bernoulli_poly(int k, int n) { return PolyBernoulliCache(k, n).poly(n); }

inline Rational poly_bernoulli_function(int k, int n, const Rational& x) {
    return PolyBernoulliCache(k, n).function_at(n, x);
}

// B_n^(k)(1) - B_n^(k) = sum_{m=1}^{n} S1(n, m) / m^(k-1).
inline IdentityReport theorem2_check(int k, int n, const PolyBernoulliCache& cache,
                                     const Stirling1Table& stirling) {
    if (n < 1) throw std::invalid_argument("theorem2_check: n must be positive");
    const Rational lhs = cache.value_at(n, Rational(1)) - cache.number(n);
    Rational rhs;
    for (int m = 1; m <= n; ++m)
        rhs += Rational(stirling.at(n, m)) * pow(Rational(m), 1 - static_cast<long long>(k));
    return make_report("theorem2", {{"k", k}, {"n", n}}, lhs, rhs);
}

inline IdentityReport theorem2_check(int k, int n) {
    return theorem2_check(k, n, PolyBernoulliCache(k, n), Stirling1Table(n));
}

// sum_v C(p,v) C(p-v+2,s) B_v^(k) / (p-v+2)
//   = C(p+1,s) B_{p-s+1}^(k)(1)/(p+1) + (s-1)/(p+1) C(p+2,s) B_{p-s+2}^(k)(1)/(p+2).
// Vanishing binomials kill their whole term, so out-of-range upper indices are
// never evaluated; for s > p+2 both sides collapse to 0.
inline IdentityReport theorem3_check(int k, long long s, long long p, const PolyBernoulliCache& cache) {
    if (s < 1 || p < 1) throw std::invalid_argument("theorem3_check: s and p must be positive");
    Rational lhs;
    for (long long v = 0; v <= p; ++v) {
        const Integer c = binomial(p, v) * binomial(p - v + 2, s);
        if (c == 0) continue;
        lhs += Rational(c) * cache.number(static_cast<int>(v)) / Rational(p - v + 2);
    }
    Rational rhs;
    if (const Integer c1 = binomial(p + 1, s); c1 != 0)
        rhs += Rational(c1) * cache.value_at(static_cast<int>(p - s + 1), Rational(1)) / Rational(p + 1);
    if (const Integer c2 = binomial(p + 2, s); c2 != 0)
        rhs += Rational(s - 1, p + 1) * Rational(c2) * cache.value_at(static_cast<int>(p - s + 2), Rational(1)) /
               Rational(p + 2);
    return make_report("theorem3", {{"p", p}, {"k", k}, {"s", s}}, lhs, rhs);
}

inline IdentityReport theorem3_check(int k, long long s, long long p) {
    return theorem3_check(k, s, p, PolyBernoulliCache(k, static_cast<int>(p) + 2));
}

// The truncated variant: the v-sum stops at p-s+1 and the correction term
// -(1/s) C(p,s-2) B_{p-s+2}^(k) moves to the right side.
inline IdentityReport corollary4_check(int k, long long s, long long p, const PolyBernoulliCache& cache) {
    if (s < 1 || p < 1) throw std::invalid_argument("corollary4_check: s and p must be positive");
    Rational lhs;
    for (long long v = 0; v <= p - s + 1; ++v) {
        const Integer c = binomial(p, v) * binomial(p - v + 2, s);
        if (c == 0) continue;
        lhs += Rational(c) * cache.number(static_cast<int>(v)) / Rational(p - v + 2);
    }
    Rational rhs;
    if (const Integer c1 = binomial(p + 1, s); c1 != 0)
        rhs += Rational(c1) * cache.value_at(static_cast<int>(p - s + 1), Rational(1)) / Rational(p + 1);
    if (const Integer c2 = binomial(p + 2, s); c2 != 0)
        rhs += Rational(s - 1, p + 1) * Rational(c2) * cache.value_at(static_cast<int>(p - s + 2), Rational(1)) /
               Rational(p + 2);
    if (const Integer c3 = binomial(p, s - 2); c3 != 0)
        rhs -= Rational(c3) * cache.number(static_cast<int>(p - s + 2)) / Rational(s);
    return make_report("corollary4", {{"p", p}, {"k", k}, {"s", s}}, lhs, rhs);
}

inline IdentityReport corollary4_check(int k, long long s, long long p) {
    return corollary4_check(k, s, p, PolyBernoulliCache(k, static_cast<int>(p) + 2));
}

// integral_0^1 x B_p^(k)(x) dx, by exact monomial integration.
inline Rational integral_x_poly_bernoulli(long long p, const PolyBernoulliCache& cache) {
    const Polynomial& poly = cache.poly(static_cast<int>(p));
    Rational acc;
    for (int j = 0; j <= poly.degree(); ++j) acc += poly.coeff(j) / Rational(j + 2);
    return acc;
}

// sum_s C(p,s) B_s^(k) / (p+2-s)
//   = B_{p+1}^(k)(1)/(p+1) - B_{p+2}^(k)(1)/((p+1)(p+2)) + B_{p+2}^(k)/((p+1)(p+2)).
inline IdentityReport theorem5_check(int k, long long p, const PolyBernoulliCache& cache) {
    if (p < 1) throw std::invalid_argument("theorem5_check: p must be positive");
    Rational lhs;
    for (long long s = 0; s <= p; ++s)
        lhs += Rational(binomial(p, s)) * cache.number(static_cast<int>(s)) / Rational(p + 2 - s);
    const Rational denom = Rational(p + 1) * Rational(p + 2);
    const Rational rhs = cache.value_at(static_cast<int>(p) + 1, Rational(1)) / Rational(p + 1) -
                         cache.value_at(static_cast<int>(p) + 2, Rational(1)) / denom +
                         cache.number(static_cast<int>(p) + 2) / denom;
    return make_report("theorem5", {{"p", p}, {"k", k}}, lhs, rhs);
}

inline IdentityReport theorem5_check(int k, long long p) {
    return theorem5_check(k, p, PolyBernoulliCache(k, static_cast<int>(p) + 2));
}

// Quadrature cross-check of the same left side against the exact integral.
inline IdentityReport theorem5_integral_check(int k, long long p, const PolyBernoulliCache& cache) {
    if (p < 1) throw std::invalid_argument("theorem5_integral_check: p must be positive");
    Rational lhs;
    for (long long s = 0; s <= p; ++s)
        lhs += Rational(binomial(p, s)) * cache.number(static_cast<int>(s)) / Rational(p + 2 - s);
    return make_report("theorem5-integral", {{"p", p}, {"k", k}}, lhs, integral_x_poly_bernoulli(p, cache));
}

inline IdentityReport theorem5_integral_check(int k, long long p) {
    return theorem5_integral_check(k, p, PolyBernoulliCache(k, static_cast<int>(p) + 2));
}

// Second, independent construction of B_n^(k)(x): the distribution-style
// expansion over classical Bernoulli polynomials and Stirling numbers,
//   B_n^(k)(x) = sum_{j<=n} sum_{i<d} sum_{l<=n-j+1}
//                C(n,j) d^(j-1) B_j((x+i)/d) S1(n-j+1,l) / ((n-j+1) l^(k-1)),
// sharing nothing with the generating-function path beyond base arithmetic.
inline Polynomial theorem9_expand(int k, int n, long long d) {
    detail::check_index(k);
    if (n < 0) throw std::invalid_argument("theorem9_expand: negative n");
    if (d < 1) throw std::invalid_argument("theorem9_expand: d must be positive");
    const BernoulliCache bernoulli(n);
    const Stirling1Table stirling(n + 1);
    const Rational inv_d(1, d);

    Polynomial acc;
    for (int j = 0; j <= n; ++j) {
        const int rows = n - j + 1;
        Rational weight;
        for (int l = 1; l <= rows; ++l)
            weight += Rational(stirling.at(rows, l)) * pow(Rational(l), 1 - static_cast<long long>(k));
        weight /= Rational(rows);
        weight *= Rational(binomial(n, j)) * pow(Rational(d), static_cast<long long>(j) - 1);
        if (weight.is_zero()) continue;

        const Polynomial bj = bernoulli_poly(j, bernoulli);
        Polynomial inner;
        for (long long i = 0; i < d; ++i) inner += poly_compose_affine(bj, inv_d, Rational(i, d));
        acc += weight * inner;
    }
    return acc;
}

}  // namespace polyded
