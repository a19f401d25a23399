#ifndef CAPELLI_POLYNOMIAL_HPP
#define CAPELLI_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace capelli {

/// Dense univariate polynomial over Q, coefficients in ascending degree
/// with no trailing zeros. The zero polynomial has an empty coefficient
/// list and degree() reports -1 as the "minus infinity" marker.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly x() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// Monic linear factor (x - r).
    static UniPoly linear(const Rational& r) {
        return UniPoly(std::vector<Rational>{-r, Rational(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        UniPoly r(a);
        for (auto& c : r.coeffs_) c *= s;
        r.trim();
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient of an exact division; throws if the division leaves a remainder.
    friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        if (a.is_zero()) return UniPoly();
        if (a.degree() < b.degree())
            throw std::domain_error("UniPoly: inexact division (degree)");
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
        const Rational lb = b.leading();
        for (long i = a.degree() - b.degree(); i >= 0; --i) {
            Rational f = rem[i + b.degree()] / lb;
            q[i] = f;
            for (long j = 0; j <= b.degree(); ++j) rem[i + j] -= f * b.coeff(j);
        }
        for (const auto& c : rem)
            if (!c.is_zero()) throw std::domain_error("UniPoly: inexact division (remainder)");
        return UniPoly(std::move(q));
    }

    bool divisible_by(const UniPoly& b) const {
        if (is_zero()) return true;
        if (b.is_zero() || degree() < b.degree()) return false;
        try {
            (void)exact_div(*this, b);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    UniPoly pow(long e) const {
        if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
        UniPoly r(Rational(1)), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            if (!s.empty()) s += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0) s += "-";
            Rational a = c.sign() < 0 ? -c : c;
            if (i == 0) {
                s += a.str();
            } else {
                if (!a.is_one()) s += a.str() + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace capelli

#endif
