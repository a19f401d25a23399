#ifndef CAPELLI_RATIONAL_HPP
#define CAPELLI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace capelli {

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. All core arithmetic in this project is exact;
/// no floating point is used anywhere.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
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

    /// Integer power with the global convention 0^0 = 1.
    Rational pow(long e) const {
        if (e < 0) throw std::invalid_argument("Rational::pow: negative exponent");
        Rational r(1), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Serialized as "p" or "p/q", never as a float.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double approx() const { return v_.get_d(); }

  private:
    mpq_class v_;
};

/// x(x-1)...(x-i+1); the empty product (i = 0) is 1.
inline Rational falling_factorial(const Rational& x, long i) {
    if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
    Rational r(1);
    for (long t = 0; t < i; ++t) r *= x - Rational(t);
    return r;
}

inline Rational factorial(long k) {
    Rational r(1);
    for (long t = 2; t <= k; ++t) r *= Rational(t);
    return r;
}

/// Generalized binomial coefficient C(x, k) = x^{falling k} / k!.
inline Rational gen_binomial(const Rational& x, long k) {
    return falling_factorial(x, k) / factorial(k);
}

}  // namespace capelli

#endif
