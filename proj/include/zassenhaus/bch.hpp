#pragma once

#include <vector>

#include "zassenhaus/composition.hpp"
#include "zassenhaus/ncpoly.hpp"

namespace zassenhaus {

// The BCH layer works in the same two-generator algebra with the roles
// X = first generator, Y = second generator.
inline constexpr Gen GenX = Gen::A;
inline constexpr Gen GenY = Gen::B;

/// Which of the two product expansions of e^X e^Y a term belongs to:
/// ScriptX terms carry the alternating sign (-1)^{(sum n_i)-p} and multiply
/// as X_{n_p}···X_{n_1}; ScriptY terms are positive and multiply as
/// Y_{n_1}···Y_{n_p}.
enum class BCHFamily { ScriptX, ScriptY };

struct BCHTerm {
  Composition composition;
  Rational coefficient;
  BCHFamily family;
};

/// X_n = (1/n!) (ad_Y)^{n-1} (X+Y).
NCPoly script_x(int n);

/// Y_n = (1/n!) (ad_X)^{n-1} (X+Y).
NCPoly script_y(int n);

/// The term list of either expansion for compositions of weight <= N.
std::vector<BCHTerm> bch_terms(BCHFamily family, int max_degree);

/// 1 + sum of signed coeff · X_{n_p}···X_{n_1}; equals the Taylor expansion
/// of e^X e^Y graded through max_degree.
NCPoly bch_product_x(int max_degree);

/// 1 + sum of positive coeff · Y_{n_1}···Y_{n_p}; same contract.
NCPoly bch_product_y(int max_degree);

/// The average of the two expansions, which puts X and Y on equal footing;
/// equal to each of them as a polynomial.
NCPoly bch_symmetrized(int max_degree);

} // namespace zassenhaus
