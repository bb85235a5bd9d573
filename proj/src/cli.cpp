#include "zassenhaus/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zassenhaus/bch.hpp"
#include "zassenhaus/expansion.hpp"
#include "zassenhaus/matrix.hpp"
#include "zassenhaus/render.hpp"
#include "zassenhaus/verify.hpp"

namespace zassenhaus {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Composition counts grow like 2^{N-1} without a factor cap; refuse requests
// whose term list would not fit in memory instead of hanging.
constexpr double kMaxTerms = 2.0e6;

double composition_count(int max_weight, std::optional<int> max_parts) {
  // compositions of w into exactly p parts: C(w-1, p-1)
  double total = 0.0;
  for (int w = 1; w <= max_weight; ++w) {
    if (!max_parts) {
      total += std::ldexp(1.0, w - 1);
    } else {
      double ways = 1.0; // C(w-1, 0)
      double sum = ways;
      for (int p = 2; p <= *max_parts && p <= w; ++p) {
        ways = ways * (w - p + 1) / (p - 1);
        sum += ways;
      }
      total += sum;
    }
    if (total > kMaxTerms)
      return total;
  }
  return total;
}

std::optional<int> cap_of(int factors) {
  return factors > 0 ? std::optional<int>(factors) : std::nullopt;
}

void print_json(std::ostream &out, const ordered_json &j) {
  out << j.dump(2) << '\n';
}

int cmd_expand(std::ostream &out, Side side, int degree,
               std::optional<int> factors, OutputFormat fmt) {
  ExpansionConfig cfg{degree, factors, side};
  cfg.validate();
  const auto terms = expansion_terms(cfg);
  switch (fmt) {
  case OutputFormat::Json:
    print_json(out, expansion_terms_to_json(cfg, terms));
    break;
  case OutputFormat::Text:
    out << expansion_terms_to_text(cfg, terms);
    break;
  case OutputFormat::Latex:
    out << expansion_terms_to_latex(cfg, terms) << '\n';
    break;
  }
  return kExitOk;
}

int cmd_xmp(std::ostream &out, int m, int p, OutputFormat fmt) {
  const NCPoly poly = xmp_recursive(m, p);
  switch (fmt) {
  case OutputFormat::Json: {
    ordered_json j;
    j["m"] = m;
    j["p"] = p;
    j["poly"] = poly_to_json(poly);
    print_json(out, j);
    break;
  }
  case OutputFormat::Text:
    out << xmp_terms_to_text(xmp_composition_terms(m, p)) << '\n'
        << "words: " << poly_to_text(poly) << '\n';
    break;
  case OutputFormat::Latex:
    out << xmp_terms_to_latex(xmp_composition_terms(m, p)) << '\n';
    break;
  }
  return kExitOk;
}

int cmd_verify(std::ostream &out, const std::string &suite, OutputFormat fmt) {
  const auto checks = verify_suite(suite);
  std::size_t failed = 0;
  for (const auto &c : checks)
    if (!c.pass)
      ++failed;
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["suite"] = suite;
    ordered_json list = ordered_json::array();
    for (const auto &c : checks) {
      ordered_json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.pass)
        e["detail"] = c.detail;
      list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    print_json(out, j);
  } else {
    for (const auto &c : checks) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      if (!c.pass)
        out << "  [" << c.detail << "]";
      out << '\n';
    }
    out << (failed == 0 ? "ok" : "FAILED") << ": " << (checks.size() - failed)
        << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_bch(std::ostream &out, int degree, const std::string &family,
            OutputFormat fmt) {
  const GenNames xy{'X', 'Y'};
  if (family == "sym") {
    const NCPoly poly = bch_symmetrized(degree);
    switch (fmt) {
    case OutputFormat::Json: {
      ordered_json j;
      j["family"] = family;
      j["degree"] = degree;
      j["poly"] = poly_to_json(poly);
      print_json(out, j);
      break;
    }
    case OutputFormat::Text:
      out << poly_to_text(poly, xy) << '\n';
      break;
    case OutputFormat::Latex:
      out << poly_to_latex(poly, xy) << '\n';
      break;
    }
    return kExitOk;
  }
  const BCHFamily fam = family == "x" ? BCHFamily::ScriptX : BCHFamily::ScriptY;
  const auto terms = bch_terms(fam, degree);
  const NCPoly poly = fam == BCHFamily::ScriptX ? bch_product_x(degree)
                                                : bch_product_y(degree);
  switch (fmt) {
  case OutputFormat::Json: {
    ordered_json j;
    j["family"] = family;
    j["degree"] = degree;
    j["constant"] = rational_to_json(Rational(1));
    ordered_json list = ordered_json::array();
    for (const auto &t : terms)
      list.push_back(ordered_json{{"parts", t.composition.parts},
                                  {"weight", t.composition.weight()},
                                  {"coeff", rational_to_json(t.coefficient)}});
    j["terms"] = std::move(list);
    j["poly"] = poly_to_json(poly);
    print_json(out, j);
    break;
  }
  case OutputFormat::Text:
    out << bch_terms_to_text(terms);
    break;
  case OutputFormat::Latex:
    out << bch_terms_to_latex(terms) << '\n';
    break;
  }
  return kExitOk;
}

int cmd_eval(std::ostream &out, std::ostream &err, const std::string &path,
             Side side, int degree, std::optional<int> factors,
             OutputFormat fmt) {
  std::ifstream in(path);
  if (!in) {
    err << "eval: cannot open " << path << '\n';
    return kExitUsage;
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception &e) {
    err << "eval: " << e.what() << '\n';
    return kExitUsage;
  }
  const Assignment a = assignment_from_json(doc);

  ExpansionConfig cfg{degree, factors, side};
  cfg.validate();
  if (composition_count(degree, factors) > kMaxTerms) {
    err << "eval: term count exceeds " << kMaxTerms
        << "; raise --factors cap or lower --degree\n";
    return kExitUsage;
  }
  const DenseMatrix approx = zassenhaus_apply(a, cfg);
  const DenseMatrix oracle = expm(a.A + a.B);
  const double error = frobenius_distance(approx, oracle);

  switch (fmt) {
  case OutputFormat::Json: {
    ordered_json j;
    j["side"] = side_name(side);
    j["degree"] = degree;
    j["factors"] =
        factors ? ordered_json(*factors) : ordered_json(nullptr);
    j["result"] = matrix_to_json(approx);
    j["frobenius_error"] = error;
    print_json(out, j);
    break;
  }
  case OutputFormat::Text:
    out << matrix_to_text(approx);
    out << "frobenius_error " << double_to_string(error) << '\n';
    break;
  case OutputFormat::Latex:
    out << matrix_to_latex(approx) << '\n';
    out << "% frobenius error " << double_to_string(error) << '\n';
    break;
  }
  return kExitOk;
}

struct BenchRow {
  int dim = 0;
  std::string fixture;
  int degree = 0;
  std::optional<int> factor_cap;
  double frobenius_error = 0.0;
  long terms = 0;
  double millis = 0.0;
};

int cmd_bench(std::ostream &out, const std::vector<int> &dims,
              const std::vector<int> &degrees, OutputFormat fmt) {
  std::vector<BenchRow> rows;
  for (int dim : dims) {
    const Assignment random_fixture(
        random_matrix(dim, 0x5eed0000u + static_cast<std::uint64_t>(dim), 0.25),
        random_matrix(dim, 0xb0b50000u + static_cast<std::uint64_t>(dim), 0.25));
    const DenseMatrix oracle = expm(random_fixture.A + random_fixture.B);
    for (int n : degrees) {
      const auto start = std::chrono::steady_clock::now();
      const DenseMatrix approx =
          zassenhaus_apply(random_fixture, {n, std::nullopt, Side::Right});
      const auto stop = std::chrono::steady_clock::now();
      BenchRow row;
      row.dim = dim;
      row.fixture = "random";
      row.degree = n;
      row.frobenius_error = frobenius_distance(approx, oracle);
      row.terms =
          static_cast<long>(enumerate_compositions(n, std::nullopt).size());
      row.millis =
          std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(std::move(row));
    }

    // strictly-triangular fixture: the factor cap is exact here
    DenseMatrix tri_a(dim), tri_b(dim);
    for (int i = 0; i < dim; ++i)
      tri_a.at(i, i) = i + 1;
    tri_b.at(0, 1 % dim) = 1.0;
    const Assignment tri(tri_a, tri_b);
    const DenseMatrix tri_oracle = expm(tri.A + tri.B);
    const int tri_degree = 30;
    const auto start = std::chrono::steady_clock::now();
    const DenseMatrix approx = zassenhaus_apply(tri, {tri_degree, 1, Side::Right});
    const auto stop = std::chrono::steady_clock::now();
    BenchRow row;
    row.dim = dim;
    row.fixture = "triangular";
    row.degree = tri_degree;
    row.factor_cap = 1;
    row.frobenius_error = frobenius_distance(approx, tri_oracle);
    row.terms = tri_degree;
    row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
  }

  if (fmt == OutputFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto &r : rows) {
      ordered_json j;
      j["dim"] = r.dim;
      j["fixture"] = r.fixture;
      j["degree"] = r.degree;
      j["factors"] =
          r.factor_cap ? ordered_json(*r.factor_cap) : ordered_json(nullptr);
      j["frobenius_error"] = r.frobenius_error;
      j["terms"] = r.terms;
      j["millis"] = r.millis;
      list.push_back(std::move(j));
    }
    print_json(out, ordered_json{{"rows", std::move(list)}});
  } else {
    out << "dim  fixture     degree  cap  frobenius_error        terms  millis\n";
    for (const auto &r : rows) {
      std::ostringstream line;
      line << r.dim << "  " << r.fixture << "  " << r.degree << "  "
           << (r.factor_cap ? std::to_string(*r.factor_cap) : std::string("-"))
           << "  " << double_to_string(r.frobenius_error) << "  " << r.terms
           << "  " << double_to_string(r.millis);
      out << line.str() << '\n';
    }
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Explicit product expansions of e^{A+B} and e^X e^Y in the "
               "free algebra, with exact verification and dense-matrix "
               "evaluation"};
  app.require_subcommand(1);

  // expand
  auto *expand = app.add_subcommand(
      "expand", "List the composition terms of the explicit expansion");
  std::string ex_side = "right", ex_format = "text";
  int ex_degree = 0, ex_factors = 0;
  expand->add_option("--side", ex_side)->check(CLI::IsMember({"right", "left"}));
  expand->add_option("--degree", ex_degree, "total weight bound N")
      ->required()
      ->check(CLI::Range(0, 64));
  expand->add_option("--factors", ex_factors, "cap on factors per term")
      ->check(CLI::Range(1, 64));
  expand->add_option("--format", ex_format)
      ->check(CLI::IsMember({"json", "text", "latex"}));

  // xmp
  auto *xmp_cmd = app.add_subcommand("xmp", "Print X_{m,p}");
  int xm_m = 1, xm_p = 1;
  std::string xm_format = "text";
  xmp_cmd->add_option("m", xm_m)->required()->check(CLI::Range(1, 12));
  xmp_cmd->add_option("p", xm_p)->required()->check(CLI::Range(1, 12));
  xmp_cmd->add_option("--format", xm_format)
      ->check(CLI::IsMember({"json", "text", "latex"}));

  // verify
  auto *verify = app.add_subcommand("verify", "Run an identity suite");
  std::string vf_suite = "all", vf_format = "text";
  verify->add_option("suite", vf_suite)
      ->check(CLI::IsMember(
          {"xmp", "resum", "duality", "bch", "classical", "all"}));
  verify->add_option("--format", vf_format)
      ->check(CLI::IsMember({"json", "text"}));

  // bch
  auto *bch = app.add_subcommand("bch", "Print an e^X e^Y expansion");
  std::string bc_family = "sym", bc_format = "text";
  int bc_degree = 0;
  bch->add_option("--degree", bc_degree)->required()->check(CLI::Range(0, 16));
  bch->add_option("--family", bc_family)
      ->check(CLI::IsMember({"x", "y", "sym"}));
  bch->add_option("--format", bc_format)
      ->check(CLI::IsMember({"json", "text", "latex"}));

  // eval
  auto *eval = app.add_subcommand(
      "eval", "Apply the truncated expansion to a matrix pair");
  std::string ev_path, ev_side = "right", ev_format = "text";
  int ev_degree = 0, ev_factors = 0;
  eval->add_option("input", ev_path, "JSON file with matrices A and B")
      ->required();
  eval->add_option("--side", ev_side)->check(CLI::IsMember({"right", "left"}));
  eval->add_option("--degree", ev_degree)->required()->check(CLI::Range(0, 64));
  eval->add_option("--factors", ev_factors)->check(CLI::Range(1, 64));
  eval->add_option("--format", ev_format)
      ->check(CLI::IsMember({"json", "text", "latex"}));

  // bench
  auto *bench = app.add_subcommand(
      "bench", "Convergence/timing table on seeded fixtures");
  std::vector<int> bn_dims{4};
  std::vector<int> bn_degrees{2, 4, 6, 8, 10, 12};
  std::string bn_format = "text";
  bench->add_option("--dims", bn_dims)->delimiter(',')->check(CLI::Range(1, 16));
  bench->add_option("--degrees", bn_degrees)
      ->delimiter(',')
      ->check(CLI::Range(1, 20));
  bench->add_option("--format", bn_format)
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*expand) {
      if (composition_count(ex_degree, cap_of(ex_factors)) > kMaxTerms) {
        err << "expand: term count exceeds " << kMaxTerms
            << "; raise --factors cap or lower --degree\n";
        return kExitUsage;
      }
      return cmd_expand(out, parse_side(ex_side), ex_degree,
                        cap_of(ex_factors), parse_format(ex_format));
    }
    if (*xmp_cmd) {
      if (xm_p > xm_m) {
        err << "xmp: requires p <= m\n";
        return kExitUsage;
      }
      return cmd_xmp(out, xm_m, xm_p, parse_format(xm_format));
    }
    if (*verify)
      return cmd_verify(out, vf_suite, parse_format(vf_format));
    if (*bch)
      return cmd_bch(out, bc_degree, bc_family, parse_format(bc_format));
    if (*eval)
      return cmd_eval(out, err, ev_path, parse_side(ev_side), ev_degree,
                      cap_of(ev_factors), parse_format(ev_format));
    if (*bench) {
      if (bn_degrees.empty() || bn_dims.empty()) {
        err << "bench: needs at least one dim and one degree\n";
        return kExitUsage;
      }
      std::vector<int> sorted = bn_degrees;
      std::sort(sorted.begin(), sorted.end());
      return cmd_bench(out, bn_dims, sorted, parse_format(bn_format));
    }
  } catch (const std::exception &e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

} // namespace zassenhaus
