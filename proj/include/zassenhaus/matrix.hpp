#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zassenhaus/composition.hpp"
#include "zassenhaus/ncpoly.hpp"

namespace zassenhaus {

/// Square d×d matrix of doubles, row-major. Inputs must be finite; NaN/Inf
/// entries are rejected at construction.
class DenseMatrix {
public:
  explicit DenseMatrix(int dim);                       // zero matrix
  DenseMatrix(int dim, std::vector<double> entries);   // row-major
  static DenseMatrix identity(int dim);

  int dim() const { return dim_; }
  double &at(int r, int c) { return entries_[index(r, c)]; }
  double at(int r, int c) const { return entries_[index(r, c)]; }
  const std::vector<double> &entries() const { return entries_; }

  DenseMatrix &operator+=(const DenseMatrix &o);
  DenseMatrix &operator-=(const DenseMatrix &o);
  DenseMatrix &operator*=(double s);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
    return a += b;
  }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
    return a -= b;
  }
  friend DenseMatrix operator*(DenseMatrix a, double s) { return a *= s; }
  friend DenseMatrix operator*(double s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

  double frobenius_norm() const;

private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }
  int dim_;
  std::vector<double> entries_;
};

double frobenius_distance(const DenseMatrix &a, const DenseMatrix &b);

/// A concrete pair of matrices standing in for the generators A and B.
struct Assignment {
  DenseMatrix A;
  DenseMatrix B;
  Assignment(DenseMatrix a, DenseMatrix b);
  int dim() const { return A.dim(); }
};

/// The representation homomorphism: words map to matrix products, the empty
/// word to the identity, sums to sums, rational coefficients to doubles.
DenseMatrix evaluate(const NCPoly &p, const Assignment &a);

/// Matrix exponential by scaling and squaring around a fixed-order Taylor
/// kernel. Relative accuracy ~1e-13 for norms up to about 10.
DenseMatrix expm(const DenseMatrix &m);

/// The truncated explicit expansion applied to a representation:
/// Right side: (1 + sum coeff · B_{n_p}(M)···B_{n_1}(M)) · expm(A),
/// Left side:  expm(A) · (1 + sum signed coeff · B_{n_1}(M)···B_{n_p}(M)),
/// where B_n(M) is the n-th rescaled nested commutator of the assignment,
/// computed directly on matrices (never via word expansion, whose size is
/// exponential in n).
DenseMatrix zassenhaus_apply(const Assignment &a, const ExpansionConfig &cfg);

struct ErrorRow {
  int degree = 0;
  std::optional<int> factor_cap;
  double frobenius_error = 0.0;
  long terms_evaluated = 0; // composition terms (the unit excluded)
};

struct ErrorReport {
  std::vector<ErrorRow> rows; // sorted by degree
};

/// Frobenius error of zassenhaus_apply against expm(A+B) for each requested
/// truncation degree. Degrees must be nonempty and ascending.
ErrorReport convergence_scan(const Assignment &a,
                             const std::vector<int> &degrees,
                             Side side = Side::Right,
                             std::optional<int> factor_cap = std::nullopt);

/// Deterministic pseudo-random matrix, scaled to the requested Frobenius
/// norm. Same seed, same matrix, on every platform.
DenseMatrix random_matrix(int dim, std::uint64_t seed, double target_norm);

} // namespace zassenhaus
