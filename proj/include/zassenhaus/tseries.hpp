#pragma once

#include <vector>

#include "zassenhaus/ncpoly.hpp"

namespace zassenhaus {

/// Polynomial in a formal parameter t with NCPoly coefficients, truncated at
/// a fixed degree N: exactly N+1 coefficient slots, and every operation
/// discards t-powers above N. Mixing truncation degrees is an error rather
/// than a silent re-truncation.
class TSeries {
public:
  explicit TSeries(int truncation_degree);

  static TSeries one(int truncation_degree);
  /// p·t^power (throws if power is outside [0, truncation]).
  static TSeries term(const NCPoly &p, int power, int truncation_degree);

  int truncation() const { return truncation_; }
  const NCPoly &coeff(int k) const;
  void set_coeff(int k, const NCPoly &p);

  bool is_one() const;

  TSeries &operator+=(const TSeries &o);
  TSeries &operator-=(const TSeries &o);
  TSeries &operator*=(const Rational &c);
  friend TSeries operator+(TSeries a, const TSeries &b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries &b) { return a -= b; }

  /// Cauchy product, truncated at the common degree.
  friend TSeries operator*(const TSeries &a, const TSeries &b);

  friend bool operator==(const TSeries &a, const TSeries &b) = default;

private:
  int truncation_ = 0;
  std::vector<NCPoly> coeffs_; // index = t-power, size truncation_+1
};

/// Truncated exponential sum_{j<=N} s^j / j!. Requires the t^0 coefficient of
/// s to be zero (the argument is nilpotent modulo truncation); otherwise
/// throws.
TSeries ts_exp(const TSeries &s);

} // namespace zassenhaus
