#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace zassenhaus {

/// Exact rational coefficient, always stored reduced with a positive
/// denominator. Equality is value equality.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {} // NOLINT: implicit by design, coefficients read naturally
  Rational(long num, long den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  static Rational from_strings(const std::string &num, const std::string &den) {
    mpz_class n(num), d(den);
    if (d == 0)
      throw std::invalid_argument("Rational: zero denominator");
    Rational r;
    r.value_ = mpq_class(n, d);
    r.value_.canonicalize();
    return r;
  }

  static Rational factorial(int n) {
    if (n < 0)
      throw std::invalid_argument("Rational::factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    Rational r;
    r.value_ = mpq_class(f);
    return r;
  }

  static Rational binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n)
      throw std::invalid_argument("Rational::binomial: out of range");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    Rational r;
    r.value_ = mpq_class(b);
    return r;
  }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  std::string num_string() const { return value_.get_num().get_str(); }
  std::string den_string() const { return value_.get_den().get_str(); }

  // gcd(|num|, den) == 1 and den > 0. GMP maintains this; tests assert it.
  bool is_reduced() const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value_.get_num().get_mpz_t(),
            value_.get_den().get_mpz_t());
    return g == 1 && value_.get_den() > 0;
  }

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator>=(const Rational &a, const Rational &b) {
    return b <= a;
  }

  std::string to_string() const {
    if (value_.get_den() == 1)
      return num_string();
    return num_string() + "/" + den_string();
  }

private:
  mpq_class value_;
};

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

} // namespace zassenhaus
