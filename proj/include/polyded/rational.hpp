#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace polyded {

using Integer = mpz_class;

inline Integer make_integer(long long v) { return Integer(static_cast<long>(v)); }

// Arbitrary-precision rational scalar. Always kept in lowest terms with a
// positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(const Integer& v) : v_(v) {}

    Rational(const Integer& num, const Integer& den) : v_() {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long long num, long long den) : Rational(make_integer(num), make_integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Greatest integer not exceeding the value.
    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // "num/den" in lowest terms, integers without the "/1".
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) {
            s += '/';
            s += v_.get_den().get_str();
        }
        return s;
    }

    // Accepts an optionally signed integer, optionally followed by '/' and a
    // positive integer. Everything else (including a zero denominator) is
    // rejected.
    static Rational parse(std::string_view text);

    Rational operator-() const { return Rational(mpq_class(-v_), Raw{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    struct Raw {};
    Rational(mpq_class v, Raw) : v_(std::move(v)) {}
    mpq_class v_;
};

// Integer power, negative exponents allowed for nonzero bases.
inline Rational pow(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    const bool negative = exponent < 0;
    if (negative && base.is_zero()) throw std::domain_error("pow: negative power of zero");
    const unsigned long long mag =
        negative ? 0ull - static_cast<unsigned long long>(exponent)
                 : static_cast<unsigned long long>(exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(mag));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(mag));
    return negative ? Rational(den, num) : Rational(num, den);
}

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::size_t i = 0;
    bool negate = false;
    if (text[0] == '+' || text[0] == '-') {
        negate = text[0] == '-';
        i = 1;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_begin) return fail();
    Integer num(std::string(text.substr(num_begin, i - num_begin)), 10);
    if (negate) num = -num;
    if (i == text.size()) return Rational(num);
    if (text[i] != '/') return fail();
    const std::size_t den_begin = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == den_begin || i != text.size()) return fail();
    Integer den(std::string(text.substr(den_begin)), 10);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// C(n, k); zero outside 0 <= k <= n. n must be nonnegative.
inline Integer binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative row index");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer pow_integer(const Integer& base, long long exponent) {
    if (exponent < 0) throw std::invalid_argument("pow_integer: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

}  // namespace polyded
