#include "zassenhaus/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace zassenhaus {

namespace {
void check_dim(int dim) {
  if (dim < 1)
    throw std::invalid_argument("DenseMatrix: dimension must be >= 1");
}

void check_finite(const std::vector<double> &entries) {
  for (double x : entries)
    if (!std::isfinite(x))
      throw std::invalid_argument("DenseMatrix: non-finite entry");
}

void check_same_dim(const DenseMatrix &a, const DenseMatrix &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("DenseMatrix: dimension mismatch");
}
} // namespace

DenseMatrix::DenseMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                  0.0);
}

DenseMatrix::DenseMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  check_dim(dim);
  if (entries_.size() !=
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw std::invalid_argument("DenseMatrix: entry count does not match dim");
  check_finite(entries_);
}

DenseMatrix DenseMatrix::identity(int dim) {
  DenseMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    m.at(i, i) = 1.0;
  return m;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= o.entries_[i];
  return *this;
}

DenseMatrix &DenseMatrix::operator*=(double s) {
  for (double &x : entries_)
    x *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
  check_same_dim(a, b);
  const int d = a.dim();
  DenseMatrix r(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0)
        continue;
      for (int j = 0; j < d; ++j)
        r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : entries_)
    s += x * x;
  return std::sqrt(s);
}

double frobenius_distance(const DenseMatrix &a, const DenseMatrix &b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const double d = a.entries()[i] - b.entries()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Assignment::Assignment(DenseMatrix a, DenseMatrix b)
    : A(std::move(a)), B(std::move(b)) {
  if (A.dim() != B.dim())
    throw std::invalid_argument("Assignment: A and B must share a dimension");
}

DenseMatrix evaluate(const NCPoly &p, const Assignment &a) {
  const int d = a.dim();
  DenseMatrix acc(d);
  for (const auto &[word, coeff] : p.terms()) {
    DenseMatrix prod = DenseMatrix::identity(d);
    for (Gen g : word.letters())
      prod = prod * (g == Gen::A ? a.A : a.B);
    prod *= coeff.to_double();
    acc += prod;
  }
  return acc;
}

DenseMatrix expm(const DenseMatrix &m) {
  // scale so the kernel sees norm <= 0.5, then square back
  int squarings = 0;
  double norm = m.frobenius_norm();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  DenseMatrix x = m;
  x *= std::ldexp(1.0, -squarings);

  constexpr int kTaylorOrder = 24; // tail 0.5^25/25! is far below rounding
  DenseMatrix result = DenseMatrix::identity(m.dim());
  DenseMatrix term = DenseMatrix::identity(m.dim());
  for (int j = 1; j <= kTaylorOrder; ++j) {
    term = term * x;
    term *= 1.0 / j;
    result += term;
  }
  for (int i = 0; i < squarings; ++i)
    result = result * result;
  return result;
}

namespace {
// B_n(M) for n = 1..max_subscript: rescaled nested commutators, built
// progressively so entries stay well-scaled (divide by n at each step
// instead of by n! at the end).
std::vector<DenseMatrix> b_factor_matrices(const Assignment &a,
                                           int max_subscript) {
  std::vector<DenseMatrix> out;
  if (max_subscript < 1)
    return out;
  out.reserve(static_cast<std::size_t>(max_subscript));
  DenseMatrix cur = a.B; // B_1
  out.push_back(cur);
  for (int n = 2; n <= max_subscript; ++n) {
    cur = (a.A * cur - cur * a.A) * (1.0 / n);
    out.push_back(cur);
  }
  return out;
}
} // namespace

DenseMatrix zassenhaus_apply(const Assignment &a, const ExpansionConfig &cfg) {
  cfg.validate();
  const int d = a.dim();
  const auto factors = b_factor_matrices(a, cfg.max_total_degree);
  DenseMatrix acc = DenseMatrix::identity(d);
  for (const auto &term : expansion_terms(cfg)) {
    const auto &parts = term.composition.parts;
    const auto factor_of = [&](int n) -> const DenseMatrix & {
      return factors[static_cast<std::size_t>(n - 1)];
    };
    DenseMatrix prod(d);
    if (cfg.side == Side::Right) {
      prod = factor_of(parts.back());
      for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
        prod = prod * factor_of(*it);
    } else {
      prod = factor_of(parts.front());
      for (std::size_t i = 1; i < parts.size(); ++i)
        prod = prod * factor_of(parts[i]);
    }
    prod *= term.coefficient.to_double();
    acc += prod;
  }
  const DenseMatrix ea = expm(a.A);
  return cfg.side == Side::Right ? acc * ea : ea * acc;
}

ErrorReport convergence_scan(const Assignment &a,
                             const std::vector<int> &degrees, Side side,
                             std::optional<int> factor_cap) {
  if (degrees.empty())
    throw std::invalid_argument("convergence_scan: no degrees given");
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1])
      throw std::invalid_argument("convergence_scan: degrees must ascend");

  const DenseMatrix oracle = expm(a.A + a.B);
  ErrorReport report;
  for (int n : degrees) {
    ExpansionConfig cfg{n, factor_cap, side};
    const DenseMatrix approx = zassenhaus_apply(a, cfg);
    ErrorRow row;
    row.degree = n;
    row.factor_cap = factor_cap;
    row.frobenius_error = frobenius_distance(approx, oracle);
    row.terms_evaluated =
        static_cast<long>(enumerate_compositions(n, factor_cap).size());
    report.rows.push_back(row);
  }
  return report;
}

namespace {
// splitmix64: fixed, platform-independent stream for reproducible fixtures
std::uint64_t splitmix64_next(std::uint64_t &state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t &state) {
  // [0,1) with 53 random bits
  return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}
} // namespace

DenseMatrix random_matrix(int dim, std::uint64_t seed, double target_norm) {
  check_dim(dim);
  if (!(target_norm > 0.0))
    throw std::invalid_argument("random_matrix: target norm must be positive");
  std::uint64_t state = seed;
  std::vector<double> entries(static_cast<std::size_t>(dim) *
                              static_cast<std::size_t>(dim));
  for (double &x : entries)
    x = 2.0 * unit_double(state) - 1.0;
  DenseMatrix m(dim, std::move(entries));
  const double norm = m.frobenius_norm();
  m *= target_norm / norm;
  return m;
}

} // namespace zassenhaus
