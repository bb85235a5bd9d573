#pragma once

#include <vector>

#include "zassenhaus/composition.hpp"
#include "zassenhaus/ncpoly.hpp"

namespace zassenhaus {

/// B'_m = (ad_A)^{m-1} B: the nested commutator building block. Homogeneous
/// of degree m; every word contains exactly one B.
NCPoly script_b_prime(int m);

/// B_m = B'_m / m!.
NCPoly script_b(int m);

/// X_{m,p} by the three-case recursion
///   X_{m+1,1} = [A, X_{m,1}],  X_{m+1,m+1} = B X_{m,m},
///   X_{m+1,p} = [A, X_{m,p}] + B X_{m,p-1}   (2 <= p <= m),
/// with base X_{1,1} = B. Memoized; requires 1 <= p <= m.
NCPoly xmp_recursive(int m, int p);

/// X_{m,p} by the closed-form sum over tuples (k_1, ..., k_{p-1}):
///   sum  m! k_1···k_{p-1} / (m (m-k_1) ··· (m-(k_1+...+k_{p-2})))
///        * B_{m-(k_1+...+k_{p-1})} B_{k_{p-1}} ··· B_{k_1}.
/// An independent route from the recursion; requires 1 <= p <= m.
NCPoly xmp_closed(int m, int p);

/// One term of the closed form, kept on the B'-basis so rendered output is
/// diffable against grouped-commutator displays: `factors` lists the B'
/// subscripts in product order (B'_1 = B).
struct XmpTerm {
  std::vector<int> factors;
  Rational coefficient;
};

/// The closed-form term list of X_{m,p}, tuples enumerated lexicographically.
std::vector<XmpTerm> xmp_composition_terms(int m, int p);

/// X_m = sum_{p=1}^m X_{m,p}; X_0 = 1.
NCPoly xm(int m);

/// sum_{m<=n} C(n,m) X_m A^{n-m}, which must equal the direct expansion of
/// (A+B)^n: the reordering that defines the X_m.
NCPoly reconstruct_power(int n);

/// Truncated free-algebra exponential sum_{j<=max_degree} p^j / j!, graded
/// cut at max_degree. The only formal exponential outside TSeries.
NCPoly taylor_exponential(const NCPoly &p, int max_degree);

/// 1 + sum over compositions (weight <= N, length <= cap) of
/// coeff · B_{n_p}···B_{n_1}. Multiplied by e^A on the right it reproduces
/// e^{A+B} grade by grade.
NCPoly right_expansion(const ExpansionConfig &cfg);

/// The transposed form: 1 + sum of signed coeff · B_{n_1}···B_{n_p}.
/// Multiplied by e^A on the left it reproduces e^{A+B}; equals the word
/// reversal of right_expansion at the same truncation.
NCPoly left_expansion(const ExpansionConfig &cfg);

/// Z_2, ..., Z_{n_max} of the classical ordered-product factorization
/// e^{t(A+B)} = e^{tA} e^{tB} prod_{n>=2} e^{t^n Z_n}, extracted as t-series
/// coefficients of the residual e^{-t^{n-1}Z_{n-1}}···e^{-tB}e^{-tA}e^{t(A+B)}
/// at truncation degree N. Requires 2 <= n_max <= N.
std::vector<NCPoly> classical_zassenhaus_terms(int n_max, int truncation);

/// The transposed factorization e^{b(A+B)} = (···e^{b^3 Z3'} e^{b^2 Z2'})
/// e^{bB} e^{bA}; returns Z'_2, ..., Z'_{n_max}. Each Z'_n equals both
/// reversed(Z_n) and (-1)^{n+1} Z_n.
std::vector<NCPoly> classical_zassenhaus_transposed(int n_max, int truncation);

} // namespace zassenhaus
