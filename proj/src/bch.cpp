#include "zassenhaus/bch.hpp"

#include <stdexcept>

namespace zassenhaus {

namespace {
const NCPoly &poly_x() {
  static const NCPoly p = NCPoly::generator(GenX);
  return p;
}
const NCPoly &poly_y() {
  static const NCPoly p = NCPoly::generator(GenY);
  return p;
}
const NCPoly &poly_xy_sum() {
  static const NCPoly p = NCPoly::generator(GenX) + NCPoly::generator(GenY);
  return p;
}
} // namespace

NCPoly script_x(int n) {
  if (n < 1)
    throw std::invalid_argument("script_x: requires n >= 1");
  NCPoly r = ad_power(poly_y(), poly_xy_sum(), n - 1);
  r *= Rational(1) / Rational::factorial(n);
  return r;
}

NCPoly script_y(int n) {
  if (n < 1)
    throw std::invalid_argument("script_y: requires n >= 1");
  NCPoly r = ad_power(poly_x(), poly_xy_sum(), n - 1);
  r *= Rational(1) / Rational::factorial(n);
  return r;
}

std::vector<BCHTerm> bch_terms(BCHFamily family, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("bch_terms: negative degree bound");
  std::vector<BCHTerm> out;
  for (auto &c : enumerate_compositions(max_degree, std::nullopt)) {
    // ScriptX shares the Left side's sign rule, ScriptY the Right side's
    // all-positive coefficients.
    Rational coeff = composition_coefficient(
        c, family == BCHFamily::ScriptX ? Side::Left : Side::Right);
    out.push_back(BCHTerm{std::move(c), std::move(coeff), family});
  }
  return out;
}

namespace {
NCPoly bch_sum(BCHFamily family, int max_degree) {
  NCPoly r = NCPoly::unit();
  for (const auto &term : bch_terms(family, max_degree)) {
    const auto &parts = term.composition.parts;
    NCPoly prod = NCPoly::unit();
    if (family == BCHFamily::ScriptX) {
      for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        prod = prod * script_x(*it);
    } else {
      for (int n : parts)
        prod = prod * script_y(n);
    }
    prod *= term.coefficient;
    r += prod;
  }
  return r;
}
} // namespace

NCPoly bch_product_x(int max_degree) {
  return bch_sum(BCHFamily::ScriptX, max_degree);
}

NCPoly bch_product_y(int max_degree) {
  return bch_sum(BCHFamily::ScriptY, max_degree);
}

NCPoly bch_symmetrized(int max_degree) {
  NCPoly r = bch_product_x(max_degree) + bch_product_y(max_degree);
  r *= Rational(1, 2);
  return r;
}

} // namespace zassenhaus
