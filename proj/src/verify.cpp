#include "zassenhaus/verify.hpp"

#include <iterator>
#include <sstream>
#include <stdexcept>

#include "zassenhaus/bch.hpp"
#include "zassenhaus/expansion.hpp"
#include "zassenhaus/render.hpp"
#include "zassenhaus/tseries.hpp"

namespace zassenhaus {

namespace {

const NCPoly kA = NCPoly::generator(Gen::A);
const NCPoly kB = NCPoly::generator(Gen::B);

// B'_k expanded into words straight from the definition; the suites compare
// library routes against combinations of these.
NCPoly bp(int k) { return ad_power(kA, kB, k - 1); }

// The X_{m,p} table for m <= 5, transcribed term by term.
NCPoly golden_xmp(int m, int p) {
  const Rational two(2), three(3), four(4), six(6);
  if (p == 1)
    return bp(m);
  if (p == m)
    return pow(kB, m);
  if (m == 3 && p == 2)
    return bp(2) * kB + two * (kB * bp(2));
  if (m == 4 && p == 2)
    return bp(3) * kB + three * (bp(2) * bp(2)) + three * (kB * bp(3));
  if (m == 4 && p == 3)
    return (bp(2) * kB + two * (kB * bp(2))) * kB + three * (pow(kB, 2) * bp(2));
  if (m == 5 && p == 2)
    return bp(4) * kB + four * (bp(3) * bp(2)) + six * (bp(2) * bp(3)) +
           four * (kB * bp(4));
  if (m == 5 && p == 3)
    return (bp(3) * kB + three * (bp(2) * bp(2)) + three * (kB * bp(3))) * kB +
           four * ((bp(2) * kB + two * (kB * bp(2))) * bp(2)) +
           six * (pow(kB, 2) * bp(3));
  if (m == 5 && p == 4)
    return ((bp(2) * kB + two * (kB * bp(2))) * kB + three * (pow(kB, 2) * bp(2))) *
               kB +
           four * (pow(kB, 3) * bp(2));
  throw std::invalid_argument("golden_xmp: no table entry");
}

void push(std::vector<Check> &out, std::string name, bool pass,
          std::string detail = {}) {
  out.push_back(Check{std::move(name), pass, pass ? std::string{} : detail});
}

void push_poly_eq(std::vector<Check> &out, std::string name, const NCPoly &got,
                  const NCPoly &want) {
  const bool ok = got == want;
  std::string detail;
  if (!ok)
    detail = "got " + poly_to_text(got) + ", want " + poly_to_text(want);
  push(out, std::move(name), ok, std::move(detail));
}

std::vector<Check> suite_xmp() {
  std::vector<Check> out;
  for (int m = 1; m <= 5; ++m)
    for (int p = 1; p <= m; ++p) {
      std::ostringstream name;
      name << "golden table X_{" << m << "," << p << "}";
      const NCPoly want = golden_xmp(m, p);
      const bool ok = xmp_recursive(m, p) == want && xmp_closed(m, p) == want;
      push(out, name.str(), ok, "route disagrees with the golden table");
    }
  push_poly_eq(out, "golden table X_2 = B^2 + B'_2", xm(2), pow(kB, 2) + bp(2));

  for (int m = 1; m <= 8; ++m)
    for (int p = 1; p <= m; ++p) {
      std::ostringstream name;
      name << "closed form = recursion at (" << m << "," << p << ")";
      push_poly_eq(out, name.str(), xmp_closed(m, p), xmp_recursive(m, p));
    }

  for (int m = 2; m <= 7; ++m)
    for (int p = 2; p <= m; ++p) {
      std::ostringstream name;
      name << "induction [A,X_{" << m << "," << p << "}] + B X_{" << m << ","
           << p - 1 << "} = X_{" << m + 1 << "," << p << "}";
      const NCPoly lhs =
          commutator(kA, xmp_recursive(m, p)) + kB * xmp_recursive(m, p - 1);
      push_poly_eq(out, name.str(), lhs, xmp_recursive(m + 1, p));
    }

  bool bookkeeping = true;
  std::string detail;
  for (int m = 1; m <= 8 && bookkeeping; ++m)
    for (int p = 1; p <= m && bookkeeping; ++p) {
      const NCPoly xmp = xmp_recursive(m, p);
      for (const auto &[w, c] : xmp.terms())
        if (w.degree() != m || w.bdeg() != p) {
          bookkeeping = false;
          detail = "word " + word_to_string(w) + " in X_{" +
                   std::to_string(m) + "," + std::to_string(p) + "}";
          break;
        }
    }
  push(out, "every X_{m,p} word has degree m and B-power p (m <= 8)",
       bookkeeping, detail);
  return out;
}

std::vector<Check> suite_resum() {
  std::vector<Check> out;
  for (int n = 0; n <= 8; ++n) {
    std::ostringstream name;
    name << "binomial reconstruction (A+B)^" << n;
    push_poly_eq(out, name.str(), reconstruct_power(n), pow(kA + kB, n));
  }

  const int N = 6;
  const NCPoly lhs = right_expansion({N, std::nullopt, Side::Right}) *
                     taylor_exponential(kA, N);
  const NCPoly rhs = taylor_exponential(kA + kB, N);
  for (int d = 0; d <= N; ++d) {
    std::ostringstream name;
    name << "right form matches e^{A+B} in degree " << d << " (N=" << N << ")";
    push_poly_eq(out, name.str(), grade(lhs, d), grade(rhs, d));
  }

  bool in_range = true;
  std::string detail;
  for (const auto &c : enumerate_compositions(8, std::nullopt)) {
    const Rational r = composition_coefficient(c, Side::Right);
    if (!(Rational(0) < r && r <= Rational(1))) {
      in_range = false;
      detail = "coefficient " + r.to_string();
      break;
    }
  }
  push(out, "right coefficients lie in (0,1] (weight <= 8)", in_range, detail);

  bool ones_ok = true;
  for (int p = 1; p <= 8; ++p) {
    Composition ones(std::vector<int>(static_cast<std::size_t>(p), 1));
    if (composition_coefficient(ones, Side::Right) !=
        Rational(1) / Rational::factorial(p))
      ones_ok = false;
  }
  push(out, "all-ones composition carries 1/p! (p <= 8)", ones_ok,
       "e^B subseries coefficient is off");
  return out;
}

std::vector<Check> suite_duality() {
  std::vector<Check> out;
  const int N = 6;
  const NCPoly lhs = taylor_exponential(kA, N) *
                     left_expansion({N, std::nullopt, Side::Left});
  const NCPoly rhs = taylor_exponential(kA + kB, N);
  for (int d = 0; d <= N; ++d) {
    std::ostringstream name;
    name << "left form matches e^{A+B} in degree " << d << " (N=" << N << ")";
    push_poly_eq(out, name.str(), grade(lhs, d), grade(rhs, d));
  }

  for (int n = 1; n <= N; ++n) {
    std::ostringstream name;
    name << "left expansion is the word reversal of right (N=" << n << ")";
    push_poly_eq(out, name.str(), left_expansion({n, std::nullopt, Side::Left}),
                 reversed(right_expansion({n, std::nullopt, Side::Right})));
  }

  bool signs = true;
  std::string detail;
  for (const auto &c : enumerate_compositions(6, std::nullopt)) {
    const Rational right = composition_coefficient(c, Side::Right);
    const Rational left = composition_coefficient(c, Side::Left);
    const bool flip = (c.weight() - c.length()) % 2 != 0;
    if (left != (flip ? -right : right)) {
      signs = false;
      detail = "composition " + std::to_string(c.weight()) + "-weight";
      break;
    }
  }
  push(out, "left coefficient = (-1)^{weight-p} right coefficient (weight <= 6)",
       signs, detail);
  return out;
}

std::vector<Check> suite_bch() {
  std::vector<Check> out;
  const int N = 6;
  const NCPoly x = NCPoly::generator(GenX), y = NCPoly::generator(GenY);
  const NCPoly taylor =
      truncated(taylor_exponential(x, N) * taylor_exponential(y, N), N);
  const NCPoly px = bch_product_x(N);
  const NCPoly py = bch_product_y(N);
  for (int d = 0; d <= N; ++d) {
    std::ostringstream name;
    name << "e^X e^Y X-family expansion matches Taylor in degree " << d;
    push_poly_eq(out, name.str(), grade(px, d), grade(taylor, d));
  }
  for (int d = 0; d <= N; ++d) {
    std::ostringstream name;
    name << "e^X e^Y Y-family expansion matches Taylor in degree " << d;
    push_poly_eq(out, name.str(), grade(py, d), grade(taylor, d));
  }
  push(out, "symmetrized average equals both expansions (N=6)",
       bch_symmetrized(N) == px && px == py, "families disagree");

  const NCPoly sum = x + y;
  const NCPoly quad = Rational(1, 2) * commutator(x, y) +
                      Rational(1, 2) * pow(sum, 2);
  push_poly_eq(out, "quadratic display 1/2[X,Y] + 1/2(X+Y)^2",
               grade(bch_symmetrized(2), 2), quad);

  const NCPoly cubic =
      Rational(1, 12) * (commutator(y, commutator(y, x)) +
                         commutator(x, commutator(x, y))) +
      Rational(1, 4) * (commutator(x, y) * sum + sum * commutator(x, y)) +
      Rational(1, 6) * pow(sum, 3);
  push_poly_eq(out, "cubic display 1/12, 1/4, 1/6", grade(bch_symmetrized(3), 3),
               cubic);

  int worked = 0;
  for (const auto &t : bch_terms(BCHFamily::ScriptX, 3)) {
    if (t.composition == Composition{1, 2} && t.coefficient == Rational(-1, 3))
      ++worked;
    if (t.composition == Composition{2, 1} && t.coefficient == Rational(-2, 3))
      ++worked;
  }
  for (const auto &t : bch_terms(BCHFamily::ScriptY, 3)) {
    if (t.composition == Composition{2, 1} && t.coefficient == Rational(2, 3))
      ++worked;
    if (t.composition == Composition{1, 1} && t.coefficient == Rational(1, 2))
      ++worked;
  }
  push(out, "worked two-factor coefficients (-1/3, -2/3, 2/3, 1/2)",
       worked == 4, "a term-list coefficient is off or missing");

  bool homogeneous = true;
  for (int n = 1; n <= 8; ++n) {
    const NCPoly sx = script_x(n), sy = script_y(n);
    for (const auto &[w, c] : sx.terms())
      if (w.degree() != n)
        homogeneous = false;
    for (const auto &[w, c] : sy.terms())
      if (w.degree() != n)
        homogeneous = false;
  }
  push(out, "X_n and Y_n are homogeneous of degree n (n <= 8)", homogeneous,
       "an inhomogeneous term appeared");
  return out;
}

std::vector<Check> suite_classical() {
  std::vector<Check> out;
  const int N = 5;
  const auto zs = classical_zassenhaus_terms(N, N);
  const auto zts = classical_zassenhaus_transposed(N, N);

  push_poly_eq(out, "Z_2 = -(1/2)[A,B]", zs[0],
               Rational(-1, 2) * commutator(kA, kB));
  push_poly_eq(out, "Z_3 = (1/3)[B,[A,B]] + (1/6)[A,[A,B]]", zs[1],
               Rational(1, 3) * commutator(kB, commutator(kA, kB)) +
                   Rational(1, 6) * commutator(kA, commutator(kA, kB)));

  bool homogeneous = true;
  for (int n = 2; n <= N; ++n)
    for (const auto &[w, c] : zs[static_cast<std::size_t>(n - 2)].terms())
      if (w.degree() != n)
        homogeneous = false;
  push(out, "Z_n homogeneous of degree n (n <= 5)", homogeneous,
       "an inhomogeneous term appeared");

  // e^{tA} e^{tB} e^{t^2 Z_2} ... e^{t^5 Z_5} = e^{t(A+B)} through t^5
  TSeries product = ts_exp(TSeries::term(kA, 1, N)) *
                    ts_exp(TSeries::term(kB, 1, N));
  for (int n = 2; n <= N; ++n)
    product = product * ts_exp(TSeries::term(zs[static_cast<std::size_t>(n - 2)],
                                             n, N));
  push(out, "ordered product reconstructs e^{t(A+B)} through t^5",
       product == ts_exp(TSeries::term(kA + kB, 1, N)),
       "reconstruction residual is nonzero");

  // (e^{b^5 Z'_5} ... e^{b^2 Z'_2}) e^{bB} e^{bA} = e^{b(A+B)} through b^5
  TSeries tproduct = TSeries::one(N);
  for (int n = N; n >= 2; --n)
    tproduct = tproduct * ts_exp(TSeries::term(
                              zts[static_cast<std::size_t>(n - 2)], n, N));
  tproduct = tproduct * ts_exp(TSeries::term(kB, 1, N)) *
             ts_exp(TSeries::term(kA, 1, N));
  push(out, "transposed product reconstructs e^{b(A+B)} through b^5",
       tproduct == ts_exp(TSeries::term(kA + kB, 1, N)),
       "reconstruction residual is nonzero");

  bool reversal = true;
  for (int n = 2; n <= N; ++n) {
    const NCPoly &z = zs[static_cast<std::size_t>(n - 2)];
    const NCPoly &zt = zts[static_cast<std::size_t>(n - 2)];
    const NCPoly signed_z = (n % 2 == 0) ? -z : z; // (-1)^{n+1} z
    if (zt != reversed(z) || zt != signed_z)
      reversal = false;
  }
  push(out, "transposed terms satisfy Z'_n = reversed(Z_n) = (-1)^{n+1} Z_n",
       reversal, "a transposed term broke the reversal relation");
  return out;
}

} // namespace

std::vector<Check> verify_suite(const std::string &suite) {
  if (suite == "xmp")
    return suite_xmp();
  if (suite == "resum")
    return suite_resum();
  if (suite == "duality")
    return suite_duality();
  if (suite == "bch")
    return suite_bch();
  if (suite == "classical")
    return suite_classical();
  if (suite == "all") {
    std::vector<Check> out;
    for (const char *name : {"xmp", "resum", "duality", "bch", "classical"}) {
      auto part = verify_suite(name);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

bool all_passed(const std::vector<Check> &checks) {
  for (const auto &c : checks)
    if (!c.pass)
      return false;
  return true;
}

} // namespace zassenhaus
