#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zassenhaus/bch.hpp"
#include "zassenhaus/composition.hpp"
#include "zassenhaus/expansion.hpp"
#include "zassenhaus/matrix.hpp"
#include "zassenhaus/ncpoly.hpp"

namespace zassenhaus {

enum class OutputFormat { Json, Text, Latex };

OutputFormat parse_format(const std::string &name); // throws on unknown name

std::string side_name(Side side);
Side parse_side(const std::string &name); // throws on unknown name

// Words serialize as their letter string; the empty word is "".
std::string word_to_string(const Word &w);
Word word_from_string(const std::string &s); // throws on a foreign letter

// Exact coefficients always serialize as decimal strings, never as floats.
nlohmann::ordered_json rational_to_json(const Rational &r);
Rational rational_from_json(const nlohmann::json &j);

nlohmann::ordered_json poly_to_json(const NCPoly &p);
NCPoly poly_from_json(const nlohmann::json &j);

nlohmann::ordered_json matrix_to_json(const DenseMatrix &m);
DenseMatrix matrix_from_json(const nlohmann::json &j);

/// Input schema of the eval command: {"A": {"dim": d, "rows": [...]},
/// "B": {...}}.
Assignment assignment_from_json(const nlohmann::json &j);

nlohmann::ordered_json
expansion_terms_to_json(const ExpansionConfig &cfg,
                        const std::vector<ExpansionTerm> &terms);
std::pair<ExpansionConfig, std::vector<ExpansionTerm>>
expansion_terms_from_json(const nlohmann::json &j);

/// Letter names for the two generators in rendered output; the BCH layer
/// passes {'X','Y'}. JSON always uses the canonical A/B letters.
struct GenNames {
  char first = 'A';
  char second = 'B';
};

std::string poly_to_text(const NCPoly &p, GenNames names = {});
std::string poly_to_latex(const NCPoly &p, GenNames names = {});

std::string expansion_terms_to_text(const ExpansionConfig &cfg,
                                    const std::vector<ExpansionTerm> &terms);
std::string expansion_terms_to_latex(const ExpansionConfig &cfg,
                                     const std::vector<ExpansionTerm> &terms);

/// Grouped-commutator rendering of a closed-form X_{m,p} term list, diffable
/// against nested B' displays after expansion.
std::string xmp_terms_to_text(const std::vector<XmpTerm> &terms);
std::string xmp_terms_to_latex(const std::vector<XmpTerm> &terms);

std::string bch_terms_to_text(const std::vector<BCHTerm> &terms);
std::string bch_terms_to_latex(const std::vector<BCHTerm> &terms);

std::string matrix_to_text(const DenseMatrix &m);
std::string matrix_to_latex(const DenseMatrix &m);

/// Fixed "%.17g" formatting so repeated runs are byte-identical.
std::string double_to_string(double x);

} // namespace zassenhaus
