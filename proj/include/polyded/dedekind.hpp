#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyded/classical.hpp"
#include "polyded/polybernoulli.hpp"
#include "polyded/polynomial.hpp"
#include "polyded/rational.hpp"
#include "polyded/report.hpp"

namespace polyded {

namespace detail {

inline void require_positive(const char* what, long long h, long long m) {
    if (h < 1 || m < 1)
        throw std::invalid_argument(std::string(what) + ": h and m must be positive");
}

inline void require_coprime(const char* what, long long h, long long m) {
    require_positive(what, h, m);
    const long long g = std::gcd(h, m);
    if (g != 1)
        throw std::invalid_argument(std::string(what) + ": h and m must be coprime, but gcd(" +
                                    std::to_string(h) + ", " + std::to_string(m) + ") = " +
                                    std::to_string(g));
}

inline void require_odd_p(const char* what, long long p, long long min_p) {
    if (p < min_p || p % 2 == 0)
        throw std::invalid_argument(std::string(what) + ": p must be an odd integer >= " +
                                    std::to_string(min_p) + ", got " + std::to_string(p));
}

inline Rational ratio(long long num, long long den) { return Rational(make_integer(num), make_integer(den)); }

// h*mu/m without intermediate overflow.
inline Rational scaled_ratio(long long h, long long mu, long long m) {
    return Rational(make_integer(h) * make_integer(mu), make_integer(m));
}

}  // namespace detail

// S(h,m) = sum_{mu=1}^{m} ((mu/m)) ((h mu/m)). The mu = m term vanishes, so
// the loop stops at m-1.
inline Rational dedekind_sum(long long h, long long m) {
    detail::require_positive("dedekind_sum", h, m);
    Rational acc;
    for (long long mu = 1; mu < m; ++mu)
        acc += sawtooth(detail::ratio(mu, m)) * sawtooth(detail::scaled_ratio(h, mu, m));
    return acc;
}

// Alternate route sum_{mu=1}^{m} (mu/m) ((h mu/m)); agrees with dedekind_sum
// for coprime h, m.
inline Rational dedekind_sum_linear_form(long long h, long long m) {
    detail::require_positive("dedekind_sum_linear_form", h, m);
    Rational acc;
    for (long long mu = 1; mu <= m; ++mu)
        acc += detail::ratio(mu, m) * sawtooth(detail::scaled_ratio(h, mu, m));
    return acc;
}

// Alternate route sum_{mu=1}^{m-1} Bbar_1(mu/m) Bbar_1(h mu/m); agrees with
// dedekind_sum for coprime h, m.
inline Rational dedekind_sum_bernoulli_form(long long h, long long m) {
    detail::require_positive("dedekind_sum_bernoulli_form", h, m);
    const BernoulliCache cache(1);
    const Polynomial b1 = bernoulli_poly(1, cache);
    Rational acc;
    for (long long mu = 1; mu < m; ++mu)
        acc += poly_eval(b1, fractional_part(detail::ratio(mu, m))) *
               poly_eval(b1, fractional_part(detail::scaled_ratio(h, mu, m)));
    return acc;
}

// Generalized sum S_p(h,m) = sum_{mu=1}^{m-1} (mu/m) Bbar_p(h mu/m).
inline Rational apostol_sum(long long p, long long h, long long m) {
    detail::require_positive("apostol_sum", h, m);
    if (p < 1) throw std::invalid_argument("apostol_sum: p must be positive");
    const Polynomial bp = bernoulli_poly(static_cast<int>(p));
    Rational acc;
    for (long long mu = 1; mu < m; ++mu)
        acc += detail::ratio(mu, m) * poly_eval(bp, fractional_part(detail::scaled_ratio(h, mu, m)));
    return acc;
}

// Poly-Dedekind sum S_p^(k)(h,m) = sum_{mu=1}^{m-1} (mu/m) Bbar_p^(k)(h mu/m).
inline Rational poly_dedekind_sum(const PolyBernoulliCache& cache, long long p, long long h, long long m) {
    detail::require_positive("poly_dedekind_sum", h, m);
    if (p < 1) throw std::invalid_argument("poly_dedekind_sum: p must be positive");
    Rational acc;
    for (long long mu = 1; mu < m; ++mu)
        acc += detail::ratio(mu, m) * cache.function_at(static_cast<int>(p), detail::scaled_ratio(h, mu, m));
    return acc;
}

inline Rational poly_dedekind_sum(int k, long long p, long long h, long long m) {
    return poly_dedekind_sum(PolyBernoulliCache(k, static_cast<int>(p)), p, h, m);
}

// Closed form of m^p S_p^(k)(1,m) divided by m^p, valid for every p >= 1:
// (1/m^p) sum_v C(p,v) B_v^(k)/(p+2-v) sum_{i=0}^{p+1-v} C(p+2-v,i) B_i m^(p+1-i).
inline Rational poly_dedekind_sum_h1_closed(const PolyBernoulliCache& cache, long long p, long long m) {
    if (p < 1) throw std::invalid_argument("poly_dedekind_sum_h1_closed: p must be positive");
    if (m < 1) throw std::invalid_argument("poly_dedekind_sum_h1_closed: m must be positive");
    const BernoulliCache bernoulli(static_cast<int>(p) + 1);
    Rational acc;
    for (long long v = 0; v <= p; ++v) {
        Rational inner;
        for (long long i = 0; i <= p + 1 - v; ++i)
            inner += Rational(binomial(p + 2 - v, i)) * bernoulli.number(static_cast<int>(i)) *
                     pow(Rational(m), p + 1 - i);
        acc += Rational(binomial(p, v)) * cache.number(static_cast<int>(v)) / Rational(p + 2 - v) * inner;
    }
    return acc / pow(Rational(m), p);
}

inline Rational poly_dedekind_sum_h1_closed(int k, long long p, long long m) {
    return poly_dedekind_sum_h1_closed(PolyBernoulliCache(k, static_cast<int>(p)), p, m);
}

// S(h,m) + S(m,h) = (1/12)(h/m + 1/(hm) + m/h) - 1/4 for coprime h, m.
inline IdentityReport classical_reciprocity_check(long long h, long long m) {
    detail::require_coprime("classical_reciprocity_check", h, m);
    const Rational lhs = dedekind_sum(h, m) + dedekind_sum(m, h);
    const Rational rhs = Rational(1, 12) * (detail::ratio(h, m) + detail::ratio(1, h * m) + detail::ratio(m, h)) -
                         Rational(1, 4);
    return make_report("classical-reciprocity", {{"h", h}, {"m", m}}, lhs, rhs);
}

// (p+1)(h m^p S_p(h,m) + m h^p S_p(m,h))
//   = p B_{p+1} + sum_s C(p+1,s) (-1)^s B_s B_{p+1-s} h^s m^(p+1-s), odd p.
inline IdentityReport apostol_reciprocity_check(long long p, long long h, long long m) {
    detail::require_coprime("apostol_reciprocity_check", h, m);
    detail::require_odd_p("apostol_reciprocity_check", p, 1);
    const Rational lhs = Rational(p + 1) * (Rational(h) * pow(Rational(m), p) * apostol_sum(p, h, m) +
                                            Rational(m) * pow(Rational(h), p) * apostol_sum(p, m, h));
    const BernoulliCache cache(static_cast<int>(p) + 1);
    Rational rhs = Rational(p) * cache.number(static_cast<int>(p) + 1);
    for (long long s = 0; s <= p + 1; ++s) {
        Rational term = Rational(binomial(p + 1, s)) * cache.number(static_cast<int>(s)) *
                        cache.number(static_cast<int>(p + 1 - s)) * pow(Rational(h), s) * pow(Rational(m), p + 1 - s);
        if (s % 2) term = -term;
        rhs += term;
    }
    return make_report("apostol-reciprocity", {{"h", h}, {"m", m}, {"p", p}}, lhs, rhs);
}

// Right side of the poly-Dedekind reciprocity: the quadruple sum
//   sum_{mu<m} sum_{j<=p} sum_{nu<h} sum_{l<=p-j+1}
//     (mh)^(j-1) C(p,j) S1(p-j+1,l) / ((p-j+1) l^(k-1))
//     * ((mu h) m^(p-j) + (m nu) h^(p-j)) * Bbar_j(nu/h + mu/m),
// evaluated with the l-sum hoisted into a per-j weight.
inline Rational theorem10_rhs(int k, long long p, long long h, long long m) {
    detail::require_positive("theorem10_rhs", h, m);
    if (p < 1) throw std::invalid_argument("theorem10_rhs: p must be positive");
    const BernoulliCache bernoulli(static_cast<int>(p));
    const Stirling1Table stirling(static_cast<int>(p) + 1);

    Rational total;
    for (long long j = 0; j <= p; ++j) {
        const long long rows = p - j + 1;
        Rational weight;
        for (long long l = 1; l <= rows; ++l)
            weight += Rational(stirling.at(static_cast<int>(rows), static_cast<int>(l))) *
                      pow(Rational(l), 1 - static_cast<long long>(k));
        weight /= Rational(rows);
        weight *= Rational(binomial(p, j)) * pow(detail::ratio(m * h, 1), j - 1);
        if (weight.is_zero()) continue;

        const Polynomial bj = bernoulli_poly(static_cast<int>(j), bernoulli);
        const Rational m_pow = pow(Rational(m), p - j);
        const Rational h_pow = pow(Rational(h), p - j);
        Rational inner;
        for (long long mu = 0; mu < m; ++mu) {
            for (long long nu = 0; nu < h; ++nu) {
                const Rational scale = Rational(mu * h) * m_pow + Rational(m * nu) * h_pow;
                if (scale.is_zero()) continue;
                const Rational arg = detail::ratio(nu, h) + detail::ratio(mu, m);
                inner += scale * poly_eval(bj, fractional_part(arg));
            }
        }
        total += weight * inner;
    }
    return total;
}

// Reciprocity for poly-Dedekind sums:
// h m^p S_p^(k)(h,m) + m h^p S_p^(k)(m,h) equals theorem10_rhs. The left side
// runs through the generating-function construction, the right side through
// classical Bernoulli functions and Stirling numbers.
inline IdentityReport theorem10_check(int k, long long p, long long h, long long m,
                                      const PolyBernoulliCache& cache) {
    detail::require_coprime("theorem10_check", h, m);
    const Rational lhs = Rational(h) * pow(Rational(m), p) * poly_dedekind_sum(cache, p, h, m) +
                         Rational(m) * pow(Rational(h), p) * poly_dedekind_sum(cache, p, m, h);
    return make_report("theorem10", {{"h", h}, {"m", m}, {"p", p}, {"k", k}}, lhs,
                       theorem10_rhs(k, p, h, m));
}

inline IdentityReport theorem10_check(int k, long long p, long long h, long long m) {
    return theorem10_check(k, p, h, m, PolyBernoulliCache(k, static_cast<int>(p)));
}

// Index-1 reduction of the reciprocity:
// h m^p S_p(h,m) + m h^p S_p(m,h) = sum_{mu<m} sum_{nu<h} (mh)^(p-1) (mu h + m nu) Bbar_p(nu/h + mu/m).
inline IdentityReport corollary11_check(long long p, long long h, long long m) {
    detail::require_coprime("corollary11_check", h, m);
    if (p < 1) throw std::invalid_argument("corollary11_check: p must be positive");
    const Rational lhs = Rational(h) * pow(Rational(m), p) * apostol_sum(p, h, m) +
                         Rational(m) * pow(Rational(h), p) * apostol_sum(p, m, h);
    const Polynomial bp = bernoulli_poly(static_cast<int>(p));
    const Rational front = pow(detail::ratio(m * h, 1), p - 1);
    Rational rhs;
    for (long long mu = 0; mu < m; ++mu)
        for (long long nu = 0; nu < h; ++nu) {
            const Rational scale(mu * h + m * nu);
            if (scale.is_zero()) continue;
            rhs += scale * poly_eval(bp, fractional_part(detail::ratio(nu, h) + detail::ratio(mu, m)));
        }
    rhs *= front;
    return make_report("corollary11", {{"h", h}, {"m", m}, {"p", p}}, lhs, rhs);
}

// m^p S_p^(k)(1,m) as an explicit polynomial in m (odd p >= 3):
//   sum_v C(p,v) B_v^(k)/(p+2-v) m^(p+1)
// + sum_{i=1}^{p-1} sum_{v=0}^{p+1-i} C(p,v) C(p+2-v,i) B_v^(k)/(p+2-v) B_i m^(p+1-i)
// + B_{p+1}.
inline IdentityReport proposition6_check(int k, long long p, long long m, const PolyBernoulliCache& cache) {
    detail::require_odd_p("proposition6_check", p, 3);
    if (m < 1) throw std::invalid_argument("proposition6_check: m must be positive");
    const Rational lhs = pow(Rational(m), p) * poly_dedekind_sum(cache, p, 1, m);

    const BernoulliCache bernoulli(static_cast<int>(p) + 1);
    Rational first;
    for (long long v = 0; v <= p; ++v)
        first += Rational(binomial(p, v)) * cache.number(static_cast<int>(v)) / Rational(p + 2 - v);
    Rational rhs = first * pow(Rational(m), p + 1);
    for (long long i = 1; i <= p - 1; ++i) {
        Rational inner;
        for (long long v = 0; v <= p + 1 - i; ++v)
            inner += Rational(binomial(p, v) * binomial(p + 2 - v, i)) * cache.number(static_cast<int>(v)) /
                     Rational(p + 2 - v);
        rhs += inner * bernoulli.number(static_cast<int>(i)) * pow(Rational(m), p + 1 - i);
    }
    rhs += bernoulli.number(static_cast<int>(p) + 1);
    return make_report("proposition6", {{"m", m}, {"p", p}, {"k", k}}, lhs, rhs);
}

inline IdentityReport proposition6_check(int k, long long p, long long m) {
    return proposition6_check(k, p, m, PolyBernoulliCache(k, static_cast<int>(p)));
}

// (p+1) m^p S_p^(k)(1,m)
//   = sum_i C(p+1,i) B_i m^(p+1-i) B_{p+1-i}^(k)(1)
//   + (1/(p+2)) sum_i C(p+2,i)(i-1) B_i m^(p+1-i) (B_{p+2-i}^(k)(1) - B_{p+2-i}^(k)), odd p >= 3.
inline IdentityReport theorem7_check(int k, long long p, long long m, const PolyBernoulliCache& cache) {
    detail::require_odd_p("theorem7_check", p, 3);
    if (m < 1) throw std::invalid_argument("theorem7_check: m must be positive");
    if (cache.max_n() < p + 2) throw std::invalid_argument("theorem7_check: cache too small");
    const Rational lhs = Rational(p + 1) * pow(Rational(m), p) * poly_dedekind_sum(cache, p, 1, m);

    const BernoulliCache bernoulli(static_cast<int>(p) + 1);
    Rational rhs;
    for (long long i = 0; i <= p + 1; ++i) {
        const Rational common = bernoulli.number(static_cast<int>(i)) * pow(Rational(m), p + 1 - i);
        rhs += Rational(binomial(p + 1, i)) * common * cache.value_at(static_cast<int>(p + 1 - i), Rational(1));
        rhs += Rational(binomial(p + 2, i)) * Rational(i - 1) * common *
               (cache.value_at(static_cast<int>(p + 2 - i), Rational(1)) - cache.number(static_cast<int>(p + 2 - i))) /
               Rational(p + 2);
    }
    return make_report("theorem7", {{"m", m}, {"p", p}, {"k", k}}, lhs, rhs);
}

inline IdentityReport theorem7_check(int k, long long p, long long m) {
    return theorem7_check(k, p, m, PolyBernoulliCache(k, static_cast<int>(p) + 2));
}

// sum_s C(p+1,s) B_s B_{p+1-s}^(k)(1) (mh)^(p+1-s)
//   = m^p sum_{mu<m} sum_s C(p+1,s) h^s B_s^(k)(mu/m) B_{p+1-s}(h - [h mu/m]),
// for coprime h, m and odd p >= 3. The inner classical factor takes the plain
// polynomial at an integer argument, not the periodic extension.
inline IdentityReport theorem8_check(int k, long long p, long long h, long long m,
                                     const PolyBernoulliCache& cache) {
    detail::require_coprime("theorem8_check", h, m);
    detail::require_odd_p("theorem8_check", p, 3);
    if (cache.max_n() < p + 1) throw std::invalid_argument("theorem8_check: cache too small");
    const BernoulliCache bernoulli(static_cast<int>(p) + 1);
    std::vector<Polynomial> classical;
    classical.reserve(static_cast<std::size_t>(p) + 2);
    for (long long j = 0; j <= p + 1; ++j) classical.push_back(bernoulli_poly(static_cast<int>(j), bernoulli));

    Rational lhs;
    for (long long s = 0; s <= p + 1; ++s)
        lhs += Rational(binomial(p + 1, s)) * bernoulli.number(static_cast<int>(s)) *
               cache.value_at(static_cast<int>(p + 1 - s), Rational(1)) * pow(detail::ratio(m * h, 1), p + 1 - s);

    Rational rhs;
    for (long long mu = 0; mu < m; ++mu) {
        const Rational mu_over_m = detail::ratio(mu, m);
        const Rational shifted = Rational(h) - Rational(detail::scaled_ratio(h, mu, m).floor());
        for (long long s = 0; s <= p + 1; ++s)
            rhs += Rational(binomial(p + 1, s)) * pow(Rational(h), s) *
                   cache.value_at(static_cast<int>(s), mu_over_m) *
                   poly_eval(classical[static_cast<std::size_t>(p + 1 - s)], shifted);
    }
    rhs *= pow(Rational(m), p);
    return make_report("theorem8", {{"h", h}, {"m", m}, {"p", p}, {"k", k}}, lhs, rhs);
}

inline IdentityReport theorem8_check(int k, long long p, long long h, long long m) {
    return theorem8_check(k, p, h, m, PolyBernoulliCache(k, static_cast<int>(p) + 1));
}

enum class SumKind { classical, apostol, poly };

struct SumParams {
    long long h = 1;
    long long m = 1;
    std::optional<long long> p;
    std::optional<long long> k;
};

struct SumTableEntry {
    SumParams params;
    Rational value;
};

// Enumerates sums over the Cartesian product of the ranges in lexicographic
// (h, m, p, k) order. Ranges not used by the kind are ignored; an empty
// required range yields the empty table.
inline std::vector<SumTableEntry> sum_table(SumKind kind,
                                            const std::vector<long long>& hs,
                                            const std::vector<long long>& ms,
                                            const std::vector<long long>& ps = {},
                                            const std::vector<long long>& ks = {}) {
    std::vector<SumTableEntry> table;
    switch (kind) {
        case SumKind::classical:
            for (long long h : hs)
                for (long long m : ms) table.push_back({{h, m, {}, {}}, dedekind_sum(h, m)});
            break;
        case SumKind::apostol: {
            long long max_p = 0;
            for (long long p : ps) max_p = std::max(max_p, p);
            const BernoulliCache cache(static_cast<int>(max_p));
            for (long long h : hs)
                for (long long m : ms)
                    for (long long p : ps) {
                        if (p < 1) throw std::invalid_argument("sum_table: p must be positive");
                        const Polynomial bp = bernoulli_poly(static_cast<int>(p), cache);
                        Rational acc;
                        for (long long mu = 1; mu < m; ++mu)
                            acc += detail::ratio(mu, m) *
                                   poly_eval(bp, fractional_part(detail::scaled_ratio(h, mu, m)));
                        table.push_back({{h, m, p, {}}, acc});
                    }
            break;
        }
        case SumKind::poly: {
            long long max_p = 0;
            for (long long p : ps) max_p = std::max(max_p, p);
            std::map<long long, PolyBernoulliCache> caches;
            for (long long k : ks) caches.emplace(k, PolyBernoulliCache(static_cast<int>(k), static_cast<int>(max_p)));
            for (long long h : hs)
                for (long long m : ms)
                    for (long long p : ps)
                        for (long long k : ks)
                            table.push_back({{h, m, p, k}, poly_dedekind_sum(caches.at(k), p, h, m)});
            break;
        }
    }
    return table;
}

}  // namespace polyded
