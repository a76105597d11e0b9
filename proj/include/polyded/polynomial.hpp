#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyded/rational.hpp"

namespace polyded {

// Dense univariate polynomial over Rational, indexed by power. Canonical form
// strips trailing zero coefficients; the zero polynomial is the empty list and
// has no degree, so callers branch on is_zero() before asking for one.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Polynomial constant(const Rational& value) { return Polynomial({value}); }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (c_.empty()) throw std::logic_error("Polynomial: the zero polynomial has no degree");
        return static_cast<int>(c_.size()) - 1;
    }

    // Coefficient of x^i; zero outside the stored range.
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        strip();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        strip();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(prod));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Horner evaluation.
inline Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational acc;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

inline Polynomial poly_derivative(const Polynomial& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = Rational(static_cast<long long>(i)) * c[i];
    return Polynomial(std::move(d));
}

// q(x) = p(a*x + b), expanded exactly.
inline Polynomial poly_compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) return {};
    const Polynomial affine({b, a});
    Polynomial acc;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * affine;
        acc += Polynomial::constant(c[i]);
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << " + ";
        os << "(" << c[i] << ")x^" << i;
    }
    return os;
}

}  // namespace polyded
