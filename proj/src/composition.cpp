#include "zassenhaus/composition.hpp"

#include <stdexcept>

namespace zassenhaus {

namespace {
void check_parts(const std::vector<int> &parts) {
  if (parts.empty())
    throw std::invalid_argument("Composition: needs at least one part");
  for (int n : parts)
    if (n < 1)
      throw std::invalid_argument("Composition: every part must be >= 1");
}
} // namespace

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  check_parts(parts);
}

Composition::Composition(std::initializer_list<int> p) : parts(p) {
  check_parts(parts);
}

int Composition::weight() const {
  int w = 0;
  for (int n : parts)
    w += n;
  return w;
}

void ExpansionConfig::validate() const {
  if (max_total_degree < 0)
    throw std::invalid_argument("ExpansionConfig: negative degree bound");
  if (max_factors && *max_factors < 1)
    throw std::invalid_argument("ExpansionConfig: factor cap must be >= 1");
}

Rational composition_coefficient(const Composition &c, Side side) {
  const auto &n = c.parts;
  const int p = c.length();
  // numerator n_p···n_1; denominator of partial sums n_p, n_p+n_{p-1}, ...
  Rational num(1), den(1);
  long suffix = 0;
  for (int j = p - 1; j >= 0; --j) {
    suffix += n[static_cast<std::size_t>(j)];
    num *= Rational(n[static_cast<std::size_t>(j)]);
    den *= Rational(suffix);
  }
  Rational coeff = num / den;
  if (side == Side::Left && (c.weight() - p) % 2 != 0)
    coeff = -coeff;
  return coeff;
}

namespace {
void emit_compositions(int remaining, std::optional<int> parts_left,
                       std::vector<int> &prefix,
                       std::vector<Composition> &out) {
  if (remaining == 0) {
    if (!prefix.empty())
      out.emplace_back(prefix);
    return;
  }
  if (parts_left && *parts_left == 0)
    return;
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    emit_compositions(remaining - first,
                      parts_left ? std::optional<int>(*parts_left - 1)
                                 : std::nullopt,
                      prefix, out);
    prefix.pop_back();
  }
}
} // namespace

std::vector<Composition> enumerate_compositions(int max_weight,
                                                std::optional<int> max_parts) {
  if (max_weight < 0)
    throw std::invalid_argument("enumerate_compositions: negative weight");
  if (max_parts && *max_parts < 1)
    throw std::invalid_argument("enumerate_compositions: cap must be >= 1");
  std::vector<Composition> out;
  std::vector<int> prefix;
  for (int w = 1; w <= max_weight; ++w)
    emit_compositions(w, max_parts, prefix, out);
  return out;
}

std::vector<ExpansionTerm> expansion_terms(const ExpansionConfig &cfg) {
  cfg.validate();
  std::vector<ExpansionTerm> out;
  for (auto &c : enumerate_compositions(cfg.max_total_degree, cfg.max_factors)) {
    Rational coeff = composition_coefficient(c, cfg.side);
    out.push_back(ExpansionTerm{std::move(c), std::move(coeff), cfg.side});
  }
  return out;
}

} // namespace zassenhaus
