#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyded/rational.hpp"

namespace polyded {

// Truncated formal power series sum c_n t^n, n <= order, with ordinary (not
// factorial-scaled) coefficients. All order+1 coefficients are stored
// explicitly; the truncation order is part of the value, so series of
// different orders never mix.
class TruncSeries {
public:
    explicit TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncSeries: order must be nonnegative");
    }

    static TruncSeries zero(int order) {
        check_order(order);
        return TruncSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    }
    static TruncSeries one(int order) {
        TruncSeries s = zero(order);
        s.c_[0] = Rational(1);
        return s;
    }
    // The series t (identically zero when order is 0).
    static TruncSeries t(int order) {
        TruncSeries s = zero(order);
        if (order >= 1) s.c_[1] = Rational(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int i) const {
        if (i < 0 || i > order()) throw std::out_of_range("TruncSeries: coefficient index out of range");
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    // Series are comparable only at equal order; mixing orders is a usage bug.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        ensure_same_order(a, b, "operator==");
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        ensure_same_order(a, b, "operator+");
        std::vector<Rational> sum(a.c_);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.c_[i];
        return TruncSeries(std::move(sum));
    }

    static void ensure_same_order(const TruncSeries& a, const TruncSeries& b, const char* what) {
        if (a.order() != b.order())
            throw std::invalid_argument(std::string("TruncSeries ") + what + ": order mismatch (" +
                                        std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    }

private:
    static void check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: order must be nonnegative");
    }
    std::vector<Rational> c_;
};

namespace detail {

// Cauchy product of coefficient vectors, truncated to their common length.
inline std::vector<Rational> convolve_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.size() && j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return prod;
}

}  // namespace detail

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::ensure_same_order(a, b, "series_mul");
    return TruncSeries(detail::convolve_trunc(a.coefficients(), b.coefficients()));
}

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

// Multiplicative inverse; requires a nonzero constant term.
inline TruncSeries series_inv(const TruncSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::domain_error("series_inv: series with zero constant term is not invertible");
    const int n = a.order();
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = Rational(1) / a.coeff(0);
    for (int i = 1; i <= n; ++i) {
        Rational acc;
        for (int j = 1; j <= i; ++j) acc += a.coeff(j) * inv[static_cast<std::size_t>(i - j)];
        inv[static_cast<std::size_t>(i)] = -acc / a.coeff(0);
    }
    return TruncSeries(std::move(inv));
}

// outer(inner(t)); defined only when inner has no constant term.
inline TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
    TruncSeries::ensure_same_order(outer, inner, "series_compose");
    if (!inner.coeff(0).is_zero())
        throw std::domain_error("series_compose: inner series must have zero constant term");
    const std::size_t n = inner.coefficients().size();
    std::vector<Rational> acc(n);
    for (std::size_t i = n; i-- > 0;) {
        acc = detail::convolve_trunc(acc, inner.coefficients());
        acc[0] += outer.coeff(static_cast<int>(i));
    }
    return TruncSeries(std::move(acc));
}

// Division by t: requires a vanishing constant term, drops the order by one.
inline TruncSeries series_shift_down(const TruncSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_shift_down: constant term must vanish");
    if (a.order() == 0) throw std::invalid_argument("series_shift_down: order 0 series");
    std::vector<Rational> shifted(a.coefficients().begin() + 1, a.coefficients().end());
    return TruncSeries(std::move(shifted));
}

// log(1+t) = sum (-1)^(n-1) t^n / n.
inline TruncSeries log1p_series(int order) {
    TruncSeries s = TruncSeries::zero(order);
    std::vector<Rational> c(s.coefficients());
    for (int i = 1; i <= order; ++i) c[static_cast<std::size_t>(i)] = Rational(i % 2 ? 1 : -1, i);
    return TruncSeries(std::move(c));
}

// e^t - 1 = sum t^n / n!.
inline TruncSeries expm1_series(int order) {
    TruncSeries s = TruncSeries::zero(order);
    std::vector<Rational> c(s.coefficients());
    for (int i = 1; i <= order; ++i) c[static_cast<std::size_t>(i)] = Rational(Integer(1), factorial(i));
    return TruncSeries(std::move(c));
}

// Polyexponential of index k: sum t^n / (n^k (n-1)!), n >= 1. Negative k
// turns n^k into the exact rational 1/n^(-k).
inline TruncSeries polyexp_series(int k, int order) {
    TruncSeries s = TruncSeries::zero(order);
    std::vector<Rational> c(s.coefficients());
    for (int i = 1; i <= order; ++i)
        c[static_cast<std::size_t>(i)] =
            pow(Rational(i), -static_cast<long long>(k)) / Rational(factorial(i - 1));
    return TruncSeries(std::move(c));
}

inline std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    os << "[";
    for (int i = 0; i <= s.order(); ++i) {
        if (i) os << ", ";
        os << s.coeff(i);
    }
    return os << "]";
}

}  // namespace polyded
