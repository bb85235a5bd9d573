#pragma once

#include <optional>
#include <vector>

#include "zassenhaus/rational.hpp"

namespace zassenhaus {

/// Which exponential prefactor ordering an expansion targets: Right puts the
/// B-polynomial prefactor left of e^A, Left puts it right of e^A (with the
/// alternating sign and reversed factor order that come with transposition).
enum class Side { Right, Left };

/// A tuple (n_1, ..., n_p) of positive integers. Indexes one product term of
/// the explicit expansions: factors B_{n_p}···B_{n_1} on the Right side,
/// B_{n_1}···B_{n_p} on the Left side.
struct Composition {
  std::vector<int> parts;

  explicit Composition(std::vector<int> p);
  Composition(std::initializer_list<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const;

  friend bool operator==(const Composition &, const Composition &) = default;
};

/// One rendered term of an expansion: the composition, its exact coefficient
/// (sign included on the Left side) and which side it belongs to.
struct ExpansionTerm {
  Composition composition;
  Rational coefficient;
  Side side;
};

/// Truncation policy: keep compositions of weight <= max_total_degree and,
/// when max_factors is set, length <= max_factors.
struct ExpansionConfig {
  int max_total_degree = 0;
  std::optional<int> max_factors;
  Side side = Side::Right;

  void validate() const;
};

/// The exact coefficient of the composition's product term.
/// Right: (n_p···n_1) / (n_p(n_p+n_{p-1})···(n_p+...+n_1)), always in (0,1].
/// Left: the same magnitude times (-1)^{(sum n_i)-p}.
Rational composition_coefficient(const Composition &c, Side side);

/// All compositions of weight 1..max_weight (length capped by max_parts when
/// present), in deterministic order: weight-major, then lexicographic on the
/// parts tuple.
std::vector<Composition> enumerate_compositions(int max_weight,
                                                std::optional<int> max_parts);

/// The term list of an expansion, in enumeration order.
std::vector<ExpansionTerm> expansion_terms(const ExpansionConfig &cfg);

} // namespace zassenhaus
