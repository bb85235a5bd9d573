#include "zassenhaus/ncpoly.hpp"

#include <stdexcept>

namespace zassenhaus {

NCPoly commutator(const NCPoly &p, const NCPoly &q) { return p * q - q * p; }

NCPoly ad_power(const NCPoly &base, const NCPoly &arg, int k) {
  if (k < 0)
    throw std::invalid_argument("ad_power: negative iteration count");
  NCPoly r = arg;
  for (int i = 0; i < k; ++i)
    r = commutator(base, r);
  return r;
}

NCPoly reversed(const NCPoly &p) {
  NCPoly r;
  for (const auto &[w, c] : p.terms())
    r.add_term(w.reversed(), c);
  return r;
}

NCPoly grade(const NCPoly &p, int d) {
  NCPoly r;
  for (const auto &[w, c] : p.terms())
    if (w.degree() == d)
      r.add_term(w, c);
  return r;
}

NCPoly truncated(const NCPoly &p, int max_degree) {
  NCPoly r;
  for (const auto &[w, c] : p.terms())
    if (w.degree() <= max_degree)
      r.add_term(w, c);
  return r;
}

NCPoly pow(const NCPoly &p, int k) {
  if (k < 0)
    throw std::invalid_argument("pow: negative exponent");
  NCPoly r = NCPoly::unit();
  for (int i = 0; i < k; ++i)
    r = r * p;
  return r;
}

} // namespace zassenhaus
