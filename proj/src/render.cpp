#include "zassenhaus/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zassenhaus {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat parse_format(const std::string &name) {
  if (name == "json")
    return OutputFormat::Json;
  if (name == "text")
    return OutputFormat::Text;
  if (name == "latex")
    return OutputFormat::Latex;
  throw std::invalid_argument("unknown format: " + name);
}

std::string side_name(Side side) {
  return side == Side::Right ? "right" : "left";
}

Side parse_side(const std::string &name) {
  if (name == "right")
    return Side::Right;
  if (name == "left")
    return Side::Left;
  throw std::invalid_argument("unknown side: " + name);
}

std::string word_to_string(const Word &w) {
  std::string s;
  s.reserve(w.letters().size());
  for (Gen g : w.letters())
    s.push_back(g == Gen::A ? 'A' : 'B');
  return s;
}

Word word_from_string(const std::string &s) {
  std::vector<Gen> letters;
  letters.reserve(s.size());
  for (char c : s) {
    if (c == 'A')
      letters.push_back(Gen::A);
    else if (c == 'B')
      letters.push_back(Gen::B);
    else
      throw std::invalid_argument(std::string("bad word letter: ") + c);
  }
  return Word(std::move(letters));
}

ordered_json rational_to_json(const Rational &r) {
  return ordered_json{{"num", r.num_string()}, {"den", r.den_string()}};
}

Rational rational_from_json(const json &j) {
  return Rational::from_strings(j.at("num").get<std::string>(),
                                j.at("den").get<std::string>());
}

ordered_json poly_to_json(const NCPoly &p) {
  ordered_json terms = ordered_json::array();
  for (const auto &[w, c] : p.terms())
    terms.push_back(
        ordered_json{{"word", word_to_string(w)}, {"coeff", rational_to_json(c)}});
  return ordered_json{{"terms", std::move(terms)}};
}

NCPoly poly_from_json(const json &j) {
  NCPoly p;
  for (const auto &t : j.at("terms")) {
    p.add_term(word_from_string(t.at("word").get<std::string>()),
               rational_from_json(t.at("coeff")));
  }
  return p;
}

ordered_json matrix_to_json(const DenseMatrix &m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

DenseMatrix matrix_from_json(const json &j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1)
    throw std::invalid_argument("matrix: dim must be >= 1");
  const auto &rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("matrix: row count does not match dim");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (const auto &row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix: row length does not match dim");
    for (const auto &x : row)
      entries.push_back(x.get<double>());
  }
  return DenseMatrix(dim, std::move(entries));
}

Assignment assignment_from_json(const json &j) {
  return Assignment(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")));
}

ordered_json expansion_terms_to_json(const ExpansionConfig &cfg,
                                     const std::vector<ExpansionTerm> &terms) {
  ordered_json out;
  out["side"] = side_name(cfg.side);
  out["degree"] = cfg.max_total_degree;
  out["factors"] = cfg.max_factors ? ordered_json(*cfg.max_factors)
                                   : ordered_json(nullptr);
  out["constant"] = rational_to_json(Rational(1));
  ordered_json list = ordered_json::array();
  for (const auto &t : terms) {
    list.push_back(ordered_json{{"parts", t.composition.parts},
                                {"weight", t.composition.weight()},
                                {"coeff", rational_to_json(t.coefficient)}});
  }
  out["terms"] = std::move(list);
  return out;
}

std::pair<ExpansionConfig, std::vector<ExpansionTerm>>
expansion_terms_from_json(const json &j) {
  ExpansionConfig cfg;
  cfg.side = parse_side(j.at("side").get<std::string>());
  cfg.max_total_degree = j.at("degree").get<int>();
  if (!j.at("factors").is_null())
    cfg.max_factors = j.at("factors").get<int>();
  cfg.validate();
  std::vector<ExpansionTerm> terms;
  for (const auto &t : j.at("terms")) {
    Composition c(t.at("parts").get<std::vector<int>>());
    terms.push_back(
        ExpansionTerm{std::move(c), rational_from_json(t.at("coeff")), cfg.side});
  }
  return {cfg, std::move(terms)};
}

namespace {

// run-length grouped word rendering: AAB -> "A^{2} B" (latex) / "A^2 B" (text)
std::string word_grouped(const Word &w, bool latex, GenNames names) {
  if (w.empty())
    return "1";
  std::ostringstream os;
  const auto &ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i])
      ++j;
    if (!first)
      os << ' ';
    first = false;
    os << (ls[i] == Gen::A ? names.first : names.second);
    const std::size_t run = j - i;
    if (run > 1)
      os << (latex ? "^{" : "^") << run << (latex ? "}" : "");
    i = j;
  }
  return os.str();
}

std::string word_plain(const Word &w, GenNames names) {
  if (w.empty())
    return "1";
  std::string s;
  s.reserve(w.letters().size());
  for (Gen g : w.letters())
    s.push_back(g == Gen::A ? names.first : names.second);
  return s;
}

std::string magnitude_text(const Rational &r) {
  Rational m = abs(r);
  return m.to_string();
}

std::string magnitude_latex(const Rational &r) {
  Rational m = abs(r);
  if (m.den_string() == "1")
    return m.num_string();
  return "\\frac{" + m.num_string() + "}{" + m.den_string() + "}";
}

// shared sign-joined term printer; render(term) must emit the unsigned body
template <typename Range, typename CoeffOf, typename BodyOf>
std::string join_signed(const Range &range, CoeffOf coeff_of, BodyOf body_of,
                        bool latex) {
  std::ostringstream os;
  bool first = true;
  for (const auto &item : range) {
    const Rational &c = coeff_of(item);
    if (first) {
      if (c.sign() < 0)
        os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const std::string body = body_of(item);
    const Rational mag = abs(c);
    const bool unit_coeff = (mag == Rational(1));
    if (!unit_coeff || body == "1") {
      os << (latex ? magnitude_latex(c) : magnitude_text(c));
      if (body != "1")
        os << ' ';
    }
    if (body != "1")
      os << body;
  }
  if (first)
    os << '0';
  return os.str();
}

std::string poly_joined(const NCPoly &p, bool latex, GenNames names) {
  return join_signed(
      p.terms(), [](const auto &kv) -> const Rational & { return kv.second; },
      [&](const auto &kv) {
        return latex ? word_grouped(kv.first, true, names)
                     : word_plain(kv.first, names);
      },
      latex);
}

} // namespace

std::string poly_to_text(const NCPoly &p, GenNames names) {
  return poly_joined(p, false, names);
}

std::string poly_to_latex(const NCPoly &p, GenNames names) {
  return poly_joined(p, true, names);
}

namespace {

std::string composition_tuple(const Composition &c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i)
      os << ',';
    os << c.parts[i];
  }
  os << ')';
  return os.str();
}

// factor sequence in product order: Right reads the tuple back to front
std::vector<int> product_order(const ExpansionTerm &t) {
  std::vector<int> f = t.composition.parts;
  if (t.side == Side::Right)
    std::reverse(f.begin(), f.end());
  return f;
}

std::string b_product_text(const std::vector<int> &factors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      os << ' ';
    os << 'B' << factors[i];
  }
  return os.str();
}

std::string b_product_latex(const std::vector<int> &factors) {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      os << ' ';
    os << "\\mathscr{B}_{" << factors[i] << '}';
  }
  return os.str();
}

} // namespace

std::string expansion_terms_to_text(const ExpansionConfig &cfg,
                                    const std::vector<ExpansionTerm> &terms) {
  std::ostringstream os;
  os << side_name(cfg.side) << " expansion, weight <= " << cfg.max_total_degree;
  if (cfg.max_factors)
    os << ", factors <= " << *cfg.max_factors;
  os << "\n1\n";
  for (const auto &t : terms) {
    os << composition_tuple(t.composition) << "  " << t.coefficient.to_string()
       << "  " << b_product_text(product_order(t)) << '\n';
  }
  return os.str();
}

std::string expansion_terms_to_latex(const ExpansionConfig &cfg,
                                     const std::vector<ExpansionTerm> &terms) {
  std::ostringstream os;
  os << "1";
  for (const auto &t : terms) {
    os << (t.coefficient.sign() < 0 ? " - " : " + ");
    const Rational mag = abs(t.coefficient);
    if (mag != Rational(1))
      os << magnitude_latex(mag) << " \\, ";
    os << b_product_latex(product_order(t));
  }
  (void)cfg;
  return os.str();
}

namespace {

// B'_1 = B; runs render as powers so the output matches grouped displays
std::string xmp_factors(const std::vector<int> &factors, bool latex) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i])
      ++j;
    if (!first)
      os << ' ';
    first = false;
    const std::size_t run = j - i;
    std::string sym = factors[i] == 1
                          ? std::string("B")
                          : (latex ? "\\mathscr{B}'_{" +
                                         std::to_string(factors[i]) + "}"
                                   : "B'" + std::to_string(factors[i]));
    if (run > 1) {
      if (factors[i] == 1)
        os << sym << (latex ? "^{" : "^") << run << (latex ? "}" : "");
      else
        os << '(' << sym << ')' << (latex ? "^{" : "^") << run
           << (latex ? "}" : "");
    } else {
      os << sym;
    }
    i = j;
  }
  return os.str();
}

} // namespace

std::string xmp_terms_to_text(const std::vector<XmpTerm> &terms) {
  return join_signed(
      terms, [](const XmpTerm &t) -> const Rational & { return t.coefficient; },
      [](const XmpTerm &t) { return xmp_factors(t.factors, false); }, false);
}

std::string xmp_terms_to_latex(const std::vector<XmpTerm> &terms) {
  return join_signed(
      terms, [](const XmpTerm &t) -> const Rational & { return t.coefficient; },
      [](const XmpTerm &t) { return xmp_factors(t.factors, true); }, true);
}

namespace {

std::vector<int> bch_product_order(const BCHTerm &t) {
  std::vector<int> f = t.composition.parts;
  if (t.family == BCHFamily::ScriptX)
    std::reverse(f.begin(), f.end());
  return f;
}

std::string bch_product(const BCHTerm &t, bool latex) {
  const char letter = t.family == BCHFamily::ScriptX ? 'X' : 'Y';
  std::ostringstream os;
  const auto factors = bch_product_order(t);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      os << ' ';
    if (latex)
      os << "\\mathscr{" << letter << "}_{" << factors[i] << '}';
    else
      os << letter << factors[i];
  }
  return os.str();
}

} // namespace

std::string bch_terms_to_text(const std::vector<BCHTerm> &terms) {
  std::ostringstream os;
  os << "1\n";
  for (const auto &t : terms) {
    os << composition_tuple(t.composition) << "  " << t.coefficient.to_string()
       << "  " << bch_product(t, false) << '\n';
  }
  return os.str();
}

std::string bch_terms_to_latex(const std::vector<BCHTerm> &terms) {
  std::ostringstream os;
  os << "1";
  for (const auto &t : terms) {
    os << (t.coefficient.sign() < 0 ? " - " : " + ");
    const Rational mag = abs(t.coefficient);
    if (mag != Rational(1))
      os << magnitude_latex(mag) << " \\, ";
    os << bch_product(t, true);
  }
  return os.str();
}

std::string double_to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string matrix_to_text(const DenseMatrix &m) {
  std::ostringstream os;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j)
        os << ' ';
      os << double_to_string(m.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_to_latex(const DenseMatrix &m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j)
        os << " & ";
      os << double_to_string(m.at(i, j));
    }
    os << " \\\\\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

} // namespace zassenhaus
