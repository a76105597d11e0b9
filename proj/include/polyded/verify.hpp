#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyded/dedekind.hpp"

namespace polyded::verify {

// Inclusive integer range.
struct Range {
    long long lo = 0;
    long long hi = 0;
};

struct SweepOptions {
    std::optional<Range> h, m, p, k, n, s, d;
    bool fail_fast = false;
};

// One row of a verification sweep. Params follow the canonical
// h,m,p,k,n,s,d,i order; `skipped` carries the reason for tuples a gate
// excludes (non-coprime pair, parity), in which case lhs/rhs are empty.
struct Line {
    std::string identity;
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
    bool holds = false;
    std::string skipped;
};

using Sink = std::function<void(const Line&)>;

inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "lemma1",      "theorem2",  "theorem3",  "corollary4",  "theorem5",
        "proposition6", "theorem7", "theorem8",  "theorem9",    "theorem10",
        "corollary11", "classical-reciprocity",  "apostol-reciprocity"};
    return names;
}

namespace detail {

struct SweepContext {
    const Sink& sink;
    bool fail_fast = false;
    bool all_hold = true;
    bool stop = false;

    void emit(Line line) {
        if (stop) return;
        const bool failed = line.skipped.empty() && !line.holds;
        sink(line);
        if (failed) {
            all_hold = false;
            if (fail_fast) stop = true;
        }
    }

    void report(const IdentityReport& r) {
        emit(Line{r.identity, r.params, r.lhs.str(), r.rhs.str(), r.holds, {}});
    }

    void skip(std::string identity, std::vector<std::pair<std::string, long long>> params,
              std::string reason) {
        emit(Line{std::move(identity), std::move(params), {}, {}, false, std::move(reason)});
    }
};

inline Range pick(const std::optional<Range>& override_range, long long lo, long long hi) {
    return override_range ? *override_range : Range{lo, hi};
}

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic sample point for the distribution-relation sweeps: a rational
// in [-4, 4) with denominator at most 50, fixed per (n, d, i).
inline Rational sample_point(long long n, long long d, long long i) {
    const std::uint64_t seed = splitmix64(splitmix64(splitmix64(static_cast<std::uint64_t>(n)) ^
                                                     static_cast<std::uint64_t>(d) * 0x632be59bd9b4e019ull) +
                                          static_cast<std::uint64_t>(i));
    const long long den = 1 + static_cast<long long>(seed % 50);
    const long long num = static_cast<long long>(splitmix64(seed) % static_cast<std::uint64_t>(8 * den)) - 4 * den;
    return Rational(num, den);
}

// Point digest of a polynomial pair: equal polynomials report their value at
// x = 1/2; differing ones report values at the first of 1/2, 3/2, 5/2, ...
// that separates them (one of deg+1 distinct points must).
inline std::pair<Rational, Rational> poly_digest(const Polynomial& a, const Polynomial& b) {
    const bool equal = a == b;
    const int attempts = 2 + std::max(a.is_zero() ? 0 : a.degree(), b.is_zero() ? 0 : b.degree());
    Rational x(1, 2);
    for (int attempt = 0; attempt < attempts; ++attempt, x += Rational(1)) {
        Rational va = poly_eval(a, x);
        Rational vb = poly_eval(b, x);
        if (equal || va != vb) return {va, vb};
    }
    return {poly_eval(a, x), poly_eval(b, x)};
}

inline void run_lemma1(const SweepOptions& opt, SweepContext& ctx) {
    const Range n_poly = pick(opt.n, 0, 10);
    const Range d_poly = pick(opt.d, 1, 6);
    for (long long n = n_poly.lo; n <= n_poly.hi && !ctx.stop; ++n) {
        const BernoulliCache cache(static_cast<int>(n));
        const Polynomial bn = bernoulli_poly(static_cast<int>(n), cache);
        for (long long d = d_poly.lo; d <= d_poly.hi && !ctx.stop; ++d) {
            Polynomial lhs;
            for (long long i = 0; i < d; ++i)
                lhs += poly_compose_affine(bn, Rational(1, d), Rational(i, d));
            const Polynomial rhs = pow(Rational(d), 1 - n) * bn;
            const auto [lv, rv] = poly_digest(lhs, rhs);
            ctx.emit(Line{"lemma1a", {{"n", n}, {"d", d}}, lv.str(), rv.str(), lhs == rhs, {}});
        }
    }

    const Range n_fn = pick(opt.n, 0, 8);
    const Range d_fn = pick(opt.d, 1, 5);
    constexpr long long samples = 100;
    for (const char* part : {"lemma1b", "lemma1c"}) {
        const bool part_b = part[6] == 'b';
        for (long long n = n_fn.lo; n <= n_fn.hi && !ctx.stop; ++n)
            for (long long d = d_fn.lo; d <= d_fn.hi && !ctx.stop; ++d)
                for (long long i = 0; i < samples && !ctx.stop; ++i) {
                    const DistributionReport r =
                        verify_distribution(static_cast<int>(n), d, sample_point(n, d, i));
                    const Rational& lhs = part_b ? r.b_lhs : r.c_lhs;
                    const Rational& rhs = part_b ? r.b_rhs : r.c_rhs;
                    ctx.emit(Line{part,
                                  {{"n", n}, {"d", d}, {"i", i}},
                                  lhs.str(),
                                  rhs.str(),
                                  part_b ? r.b_holds : r.c_holds,
                                  {}});
                }
    }
}

inline void run_theorem2(const SweepOptions& opt, SweepContext& ctx) {
    const Range k_range = pick(opt.k, -3, 3);
    const Range n_range = pick(opt.n, 1, 12);
    if (n_range.lo < 1) throw std::invalid_argument("theorem2 sweep: n must start at 1");
    const Stirling1Table stirling(static_cast<int>(n_range.hi));
    for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
        const PolyBernoulliCache cache(static_cast<int>(k), static_cast<int>(n_range.hi));
        for (long long n = n_range.lo; n <= n_range.hi && !ctx.stop; ++n)
            ctx.report(theorem2_check(static_cast<int>(k), static_cast<int>(n), cache, stirling));
    }
}

template <typename Check>
inline void run_section2_family(const SweepOptions& opt, SweepContext& ctx, bool sweep_s, Check&& check) {
    const Range p_range = pick(opt.p, 1, 8);
    const Range k_range = pick(opt.k, -2, 3);
    if (p_range.lo < 1) throw std::invalid_argument("sweep: p must start at 1");
    std::map<long long, PolyBernoulliCache> caches;
    for (long long k = k_range.lo; k <= k_range.hi; ++k)
        caches.emplace(k, PolyBernoulliCache(static_cast<int>(k), static_cast<int>(p_range.hi) + 2));
    for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p)
        for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
            if (!sweep_s) {
                check(caches.at(k), k, p, 0);
                continue;
            }
            const Range s_range = pick(opt.s, 1, p + 2);
            for (long long s = s_range.lo; s <= s_range.hi && !ctx.stop; ++s)
                check(caches.at(k), k, p, s);
        }
}

inline void run_theorem3(const SweepOptions& opt, SweepContext& ctx) {
    run_section2_family(opt, ctx, true,
                        [&](const PolyBernoulliCache& cache, long long k, long long p, long long s) {
                            ctx.report(theorem3_check(static_cast<int>(k), s, p, cache));
                        });
}

inline void run_corollary4(const SweepOptions& opt, SweepContext& ctx) {
    run_section2_family(opt, ctx, true,
                        [&](const PolyBernoulliCache& cache, long long k, long long p, long long s) {
                            ctx.report(corollary4_check(static_cast<int>(k), s, p, cache));
                        });
}

inline void run_theorem5(const SweepOptions& opt, SweepContext& ctx) {
    run_section2_family(opt, ctx, false,
                        [&](const PolyBernoulliCache& cache, long long k, long long p, long long) {
                            ctx.report(theorem5_check(static_cast<int>(k), p, cache));
                            if (!ctx.stop) ctx.report(theorem5_integral_check(static_cast<int>(k), p, cache));
                        });
}

// proposition6 and theorem7 share the (m, p, k) sweep shape and parity gate.
template <typename Check>
inline void run_h1_closed_forms(const char* identity, const SweepOptions& opt, SweepContext& ctx,
                                Check&& check) {
    const Range m_range = pick(opt.m, 1, 10);
    const Range p_range = pick(opt.p, 3, 7);
    const Range k_range = pick(opt.k, -2, 3);
    std::map<long long, PolyBernoulliCache> caches;
    for (long long k = k_range.lo; k <= k_range.hi; ++k)
        caches.emplace(k, PolyBernoulliCache(static_cast<int>(k), static_cast<int>(p_range.hi) + 2));
    for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m)
        for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p)
            for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
                std::vector<std::pair<std::string, long long>> params{{"m", m}, {"p", p}, {"k", k}};
                if (p % 2 == 0) {
                    ctx.skip(identity, std::move(params), "p even");
                    continue;
                }
                if (p < 3) {
                    ctx.skip(identity, std::move(params), "p < 3");
                    continue;
                }
                check(caches.at(k), k, p, m);
            }
}

inline void run_proposition6(const SweepOptions& opt, SweepContext& ctx) {
    run_h1_closed_forms("proposition6", opt, ctx,
                        [&](const PolyBernoulliCache& cache, long long k, long long p, long long m) {
                            ctx.report(proposition6_check(static_cast<int>(k), p, m, cache));
                        });
}

inline void run_theorem7(const SweepOptions& opt, SweepContext& ctx) {
    run_h1_closed_forms("theorem7", opt, ctx,
                        [&](const PolyBernoulliCache& cache, long long k, long long p, long long m) {
                            ctx.report(theorem7_check(static_cast<int>(k), p, m, cache));
                        });
}

inline void run_theorem8(const SweepOptions& opt, SweepContext& ctx) {
    const Range h_range = pick(opt.h, 1, 6);
    const Range m_range = pick(opt.m, 1, 6);
    const Range p_range = pick(opt.p, 3, 7);
    const Range k_range = pick(opt.k, -2, 3);
    std::map<long long, PolyBernoulliCache> caches;
    for (long long k = k_range.lo; k <= k_range.hi; ++k)
        caches.emplace(k, PolyBernoulliCache(static_cast<int>(k), static_cast<int>(p_range.hi) + 2));
    for (long long h = h_range.lo; h <= h_range.hi && !ctx.stop; ++h)
        for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m)
            for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p)
                for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
                    std::vector<std::pair<std::string, long long>> params{
                        {"h", h}, {"m", m}, {"p", p}, {"k", k}};
                    if (std::gcd(h, m) != 1) {
                        ctx.skip("theorem8", std::move(params), "gcd>1");
                        continue;
                    }
                    if (p % 2 == 0) {
                        ctx.skip("theorem8", std::move(params), "p even");
                        continue;
                    }
                    ctx.report(theorem8_check(static_cast<int>(k), p, h, m, caches.at(k)));
                }
}

inline void run_theorem9(const SweepOptions& opt, SweepContext& ctx) {
    const Range k_range = pick(opt.k, -2, 3);
    const Range n_range = pick(opt.n, 0, 8);
    const Range d_range = pick(opt.d, 1, 5);
    for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
        const PolyBernoulliCache cache(static_cast<int>(k), static_cast<int>(n_range.hi));
        for (long long n = n_range.lo; n <= n_range.hi && !ctx.stop; ++n)
            for (long long d = d_range.lo; d <= d_range.hi && !ctx.stop; ++d) {
                const Polynomial expanded = theorem9_expand(static_cast<int>(k), static_cast<int>(n), d);
                const Polynomial& direct = cache.poly(static_cast<int>(n));
                const auto [lv, rv] = poly_digest(expanded, direct);
                ctx.emit(Line{"theorem9",
                              {{"k", k}, {"n", n}, {"d", d}},
                              lv.str(),
                              rv.str(),
                              expanded == direct,
                              {}});
            }
    }
}

inline void run_theorem10(const SweepOptions& opt, SweepContext& ctx) {
    const Range h_range = pick(opt.h, 1, 8);
    const Range m_range = pick(opt.m, 1, 8);
    const Range p_range = pick(opt.p, 1, 6);
    const Range k_range = pick(opt.k, -2, 3);
    std::map<long long, PolyBernoulliCache> caches;
    for (long long k = k_range.lo; k <= k_range.hi; ++k)
        caches.emplace(k, PolyBernoulliCache(static_cast<int>(k), static_cast<int>(p_range.hi)));
    for (long long h = h_range.lo; h <= h_range.hi && !ctx.stop; ++h)
        for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m)
            for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p)
                for (long long k = k_range.lo; k <= k_range.hi && !ctx.stop; ++k) {
                    if (std::gcd(h, m) != 1) {
                        ctx.skip("theorem10", {{"h", h}, {"m", m}, {"p", p}, {"k", k}}, "gcd>1");
                        continue;
                    }
                    ctx.report(theorem10_check(static_cast<int>(k), p, h, m, caches.at(k)));
                }
}

inline void run_corollary11(const SweepOptions& opt, SweepContext& ctx) {
    const Range h_range = pick(opt.h, 1, 8);
    const Range m_range = pick(opt.m, 1, 8);
    const Range p_range = pick(opt.p, 1, 6);
    for (long long h = h_range.lo; h <= h_range.hi && !ctx.stop; ++h)
        for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m)
            for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p) {
                if (std::gcd(h, m) != 1) {
                    ctx.skip("corollary11", {{"h", h}, {"m", m}, {"p", p}}, "gcd>1");
                    continue;
                }
                ctx.report(corollary11_check(p, h, m));
            }
}

inline void run_classical_reciprocity(const SweepOptions& opt, SweepContext& ctx) {
    const Range h_range = pick(opt.h, 1, 30);
    const Range m_range = pick(opt.m, 1, 30);
    for (long long h = h_range.lo; h <= h_range.hi && !ctx.stop; ++h)
        for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m) {
            if (std::gcd(h, m) != 1) {
                ctx.skip("classical-reciprocity", {{"h", h}, {"m", m}}, "gcd>1");
                continue;
            }
            ctx.report(classical_reciprocity_check(h, m));
        }
}

inline void run_apostol_reciprocity(const SweepOptions& opt, SweepContext& ctx) {
    const Range h_range = pick(opt.h, 1, 10);
    const Range m_range = pick(opt.m, 1, 10);
    const Range p_range = pick(opt.p, 1, 7);
    for (long long h = h_range.lo; h <= h_range.hi && !ctx.stop; ++h)
        for (long long m = m_range.lo; m <= m_range.hi && !ctx.stop; ++m)
            for (long long p = p_range.lo; p <= p_range.hi && !ctx.stop; ++p) {
                std::vector<std::pair<std::string, long long>> params{{"h", h}, {"m", m}, {"p", p}};
                if (std::gcd(h, m) != 1) {
                    ctx.skip("apostol-reciprocity", std::move(params), "gcd>1");
                    continue;
                }
                if (p % 2 == 0) {
                    ctx.skip("apostol-reciprocity", std::move(params), "p even");
                    continue;
                }
                ctx.report(apostol_reciprocity_check(p, h, m));
            }
}

}  // namespace detail

// Runs one identity sweep (or all of them) and streams rows to the sink in
// deterministic parameter-lexicographic order. Returns true when every
// non-skipped row holds.
inline bool run_identity(const std::string& identity, const SweepOptions& opt, const Sink& sink) {
    detail::SweepContext ctx{sink, opt.fail_fast};
    const auto dispatch = [&](const std::string& name) {
        if (name == "lemma1") detail::run_lemma1(opt, ctx);
        else if (name == "theorem2") detail::run_theorem2(opt, ctx);
        else if (name == "theorem3") detail::run_theorem3(opt, ctx);
        else if (name == "corollary4") detail::run_corollary4(opt, ctx);
        else if (name == "theorem5") detail::run_theorem5(opt, ctx);
        else if (name == "proposition6") detail::run_proposition6(opt, ctx);
        else if (name == "theorem7") detail::run_theorem7(opt, ctx);
        else if (name == "theorem8") detail::run_theorem8(opt, ctx);
        else if (name == "theorem9") detail::run_theorem9(opt, ctx);
        else if (name == "theorem10") detail::run_theorem10(opt, ctx);
        else if (name == "corollary11") detail::run_corollary11(opt, ctx);
        else if (name == "classical-reciprocity") detail::run_classical_reciprocity(opt, ctx);
        else if (name == "apostol-reciprocity") detail::run_apostol_reciprocity(opt, ctx);
        else throw std::invalid_argument("unknown identity '" + name + "'");
    };
    if (identity == "all") {
        for (const auto& name : identity_names()) {
            if (ctx.stop) break;
            dispatch(name);
        }
    } else {
        dispatch(identity);
    }
    return ctx.all_hold;
}

}  // namespace polyded::verify
