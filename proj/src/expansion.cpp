#include "zassenhaus/expansion.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "zassenhaus/tseries.hpp"

namespace zassenhaus {

namespace {
const NCPoly &poly_a() {
  static const NCPoly p = NCPoly::generator(Gen::A);
  return p;
}
const NCPoly &poly_b() {
  static const NCPoly p = NCPoly::generator(Gen::B);
  return p;
}

void check_mp(int m, int p) {
  if (m < 1 || p < 1 || p > m)
    throw std::invalid_argument("X_{m,p}: requires 1 <= p <= m");
}
} // namespace

NCPoly script_b_prime(int m) {
  if (m < 1)
    throw std::invalid_argument("script_b_prime: requires m >= 1");
  return ad_power(poly_a(), poly_b(), m - 1);
}

NCPoly script_b(int m) {
  NCPoly r = script_b_prime(m);
  r *= Rational(1) / Rational::factorial(m);
  return r;
}

NCPoly xmp_recursive(int m, int p) {
  check_mp(m, p);
  static std::map<std::pair<int, int>, NCPoly> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);

  if (auto it = memo.find({m, p}); it != memo.end())
    return it->second;

  // Fill the table row by row so recursion depth stays trivial.
  if (memo.find({1, 1}) == memo.end())
    memo.emplace(std::pair{1, 1}, poly_b());
  int filled = 1;
  while (memo.find({filled + 1, 1}) != memo.end())
    ++filled;
  for (int mm = filled; mm < m; ++mm) {
    for (int pp = 1; pp <= mm + 1; ++pp) {
      NCPoly next;
      if (pp == 1) {
        next = commutator(poly_a(), memo.at({mm, 1}));
      } else if (pp == mm + 1) {
        next = poly_b() * memo.at({mm, mm});
      } else {
        next = commutator(poly_a(), memo.at({mm, pp})) +
               poly_b() * memo.at({mm, pp - 1});
      }
      memo.emplace(std::pair{mm + 1, pp}, std::move(next));
    }
  }
  return memo.at({m, p});
}

std::vector<XmpTerm> xmp_composition_terms(int m, int p) {
  check_mp(m, p);
  std::vector<XmpTerm> out;
  // Tuples (k_1, ..., k_{p-1}) with k_i >= 1 and k_1+...+k_{p-1} <= m-1,
  // leaving the leading factor subscript m - sum >= 1.
  std::vector<int> ks(static_cast<std::size_t>(p - 1), 0);
  // coefficient on the B-basis: m! k_1···k_{p-1} / (m (m-k_1) ···);
  // rescaled to the B'-basis by the factorials of all subscripts.
  auto emit = [&]() {
    int rest = m;
    Rational num = Rational::factorial(m);
    Rational den(1);
    for (int i = 0; i < p - 1; ++i) {
      den *= Rational(rest);
      num *= Rational(ks[static_cast<std::size_t>(i)]);
      rest -= ks[static_cast<std::size_t>(i)];
    }
    XmpTerm term;
    term.factors.push_back(rest); // subscript of the leading B factor
    for (int i = p - 2; i >= 0; --i)
      term.factors.push_back(ks[static_cast<std::size_t>(i)]);
    for (int f : term.factors)
      den *= Rational::factorial(f);
    term.coefficient = num / den;
    out.push_back(std::move(term));
  };
  auto recurse = [&](auto &&self, int idx, int budget) -> void {
    if (idx == p - 1) {
      emit();
      return;
    }
    for (int k = 1; k <= budget - (p - 1 - idx - 1) - 1; ++k) {
      ks[static_cast<std::size_t>(idx)] = k;
      self(self, idx + 1, budget - k);
    }
  };
  recurse(recurse, 0, m);
  return out;
}

NCPoly xmp_closed(int m, int p) {
  NCPoly r;
  for (const auto &term : xmp_composition_terms(m, p)) {
    NCPoly prod = NCPoly::unit();
    for (int f : term.factors)
      prod = prod * script_b_prime(f);
    prod *= term.coefficient;
    r += prod;
  }
  return r;
}

NCPoly xm(int m) {
  if (m < 0)
    throw std::invalid_argument("xm: requires m >= 0");
  if (m == 0)
    return NCPoly::unit();
  NCPoly r;
  for (int p = 1; p <= m; ++p)
    r += xmp_recursive(m, p);
  return r;
}

NCPoly reconstruct_power(int n) {
  if (n < 0)
    throw std::invalid_argument("reconstruct_power: requires n >= 0");
  NCPoly r;
  for (int m = 0; m <= n; ++m) {
    NCPoly term = xm(m) * pow(poly_a(), n - m);
    term *= Rational::binomial(n, m);
    r += term;
  }
  return r;
}

NCPoly taylor_exponential(const NCPoly &p, int max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("taylor_exponential: negative degree bound");
  NCPoly result = NCPoly::unit();
  NCPoly power = NCPoly::unit(); // p^j / j!, graded cut at max_degree
  for (int j = 1; j <= max_degree; ++j) {
    power = truncated(power * p, max_degree);
    power *= Rational(1, j);
    if (power.is_zero())
      break;
    result += power;
  }
  return result;
}

namespace {
NCPoly expansion_sum(const ExpansionConfig &cfg) {
  NCPoly r = NCPoly::unit();
  for (const auto &term : expansion_terms(cfg)) {
    const auto &parts = term.composition.parts;
    NCPoly prod = NCPoly::unit();
    if (cfg.side == Side::Right) {
      for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        prod = prod * script_b(*it);
    } else {
      for (int n : parts)
        prod = prod * script_b(n);
    }
    prod *= term.coefficient;
    r += prod;
  }
  return r;
}
} // namespace

NCPoly right_expansion(const ExpansionConfig &cfg) {
  if (cfg.side != Side::Right)
    throw std::invalid_argument("right_expansion: config side must be Right");
  return expansion_sum(cfg);
}

NCPoly left_expansion(const ExpansionConfig &cfg) {
  if (cfg.side != Side::Left)
    throw std::invalid_argument("left_expansion: config side must be Left");
  return expansion_sum(cfg);
}

namespace {
void check_comparator_range(int n_max, int truncation) {
  if (n_max < 2)
    throw std::invalid_argument("classical comparator: requires n_max >= 2");
  if (n_max > truncation)
    throw std::invalid_argument(
        "classical comparator: n_max exceeds truncation degree");
}
} // namespace

std::vector<NCPoly> classical_zassenhaus_terms(int n_max, int truncation) {
  check_comparator_range(n_max, truncation);
  const int N = truncation;
  // residual e^{-tB} e^{-tA} e^{t(A+B)} = 1 + O(t^2)
  TSeries residual = ts_exp(TSeries::term(-poly_b(), 1, N)) *
                     ts_exp(TSeries::term(-poly_a(), 1, N)) *
                     ts_exp(TSeries::term(poly_a() + poly_b(), 1, N));
  std::vector<NCPoly> zs;
  for (int n = 2; n <= n_max; ++n) {
    NCPoly zn = residual.coeff(n);
    residual = ts_exp(TSeries::term(-zn, n, N)) * residual;
    zs.push_back(std::move(zn));
  }
  return zs;
}

std::vector<NCPoly> classical_zassenhaus_transposed(int n_max,
                                                    int truncation) {
  check_comparator_range(n_max, truncation);
  const int N = truncation;
  // residual e^{b(A+B)} e^{-bA} e^{-bB} = 1 + O(b^2)
  TSeries residual = ts_exp(TSeries::term(poly_a() + poly_b(), 1, N)) *
                     ts_exp(TSeries::term(-poly_a(), 1, N)) *
                     ts_exp(TSeries::term(-poly_b(), 1, N));
  std::vector<NCPoly> zs;
  for (int n = 2; n <= n_max; ++n) {
    NCPoly zn = residual.coeff(n);
    residual = residual * ts_exp(TSeries::term(-zn, n, N));
    zs.push_back(std::move(zn));
  }
  return zs;
}

} // namespace zassenhaus
