#include "zassenhaus/tseries.hpp"

#include <stdexcept>

namespace zassenhaus {

TSeries::TSeries(int truncation_degree) : truncation_(truncation_degree) {
  if (truncation_degree < 0)
    throw std::invalid_argument("TSeries: negative truncation degree");
  coeffs_.resize(static_cast<std::size_t>(truncation_degree) + 1);
}

TSeries TSeries::one(int truncation_degree) {
  TSeries s(truncation_degree);
  s.coeffs_[0] = NCPoly::unit();
  return s;
}

TSeries TSeries::term(const NCPoly &p, int power, int truncation_degree) {
  TSeries s(truncation_degree);
  if (power < 0 || power > truncation_degree)
    throw std::invalid_argument("TSeries::term: power outside truncation");
  s.coeffs_[static_cast<std::size_t>(power)] = p;
  return s;
}

const NCPoly &TSeries::coeff(int k) const {
  if (k < 0 || k > truncation_)
    throw std::out_of_range("TSeries::coeff: index outside truncation");
  return coeffs_[static_cast<std::size_t>(k)];
}

void TSeries::set_coeff(int k, const NCPoly &p) {
  if (k < 0 || k > truncation_)
    throw std::out_of_range("TSeries::set_coeff: index outside truncation");
  coeffs_[static_cast<std::size_t>(k)] = p;
}

bool TSeries::is_one() const { return *this == one(truncation_); }

namespace {
void require_same_truncation(const TSeries &a, const TSeries &b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("TSeries: mismatched truncation degrees");
}
} // namespace

TSeries &TSeries::operator+=(const TSeries &o) {
  require_same_truncation(*this, o);
  for (int k = 0; k <= truncation_; ++k)
    coeffs_[static_cast<std::size_t>(k)] += o.coeff(k);
  return *this;
}

TSeries &TSeries::operator-=(const TSeries &o) {
  require_same_truncation(*this, o);
  for (int k = 0; k <= truncation_; ++k)
    coeffs_[static_cast<std::size_t>(k)] -= o.coeff(k);
  return *this;
}

TSeries &TSeries::operator*=(const Rational &c) {
  for (auto &p : coeffs_)
    p *= c;
  return *this;
}

TSeries operator*(const TSeries &a, const TSeries &b) {
  require_same_truncation(a, b);
  const int n = a.truncation();
  TSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero())
      continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j).is_zero())
        continue;
      NCPoly prod = a.coeff(i) * b.coeff(j);
      prod += r.coeff(i + j);
      r.set_coeff(i + j, prod);
    }
  }
  return r;
}

TSeries ts_exp(const TSeries &s) {
  if (!s.coeff(0).is_zero())
    throw std::invalid_argument(
        "ts_exp: nonzero constant term (argument must be nilpotent modulo "
        "truncation)");
  const int n = s.truncation();
  TSeries result = TSeries::one(n);
  TSeries power = TSeries::one(n); // s^j / j!
  for (int j = 1; j <= n; ++j) {
    power = power * s;
    power *= Rational(1, j);
    result += power;
  }
  return result;
}

} // namespace zassenhaus
