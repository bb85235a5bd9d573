// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "zassenhaus/bch.hpp"
#include "zassenhaus/expansion.hpp"
#include "zassenhaus/matrix.hpp"
#include "zassenhaus/tseries.hpp"

#include "test_support.hpp"

using namespace zassenhaus;
using namespace testsupport;

namespace {

struct Outcome {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<Outcome> g_results;

void record(int id, const std::string &title, bool pass,
            const std::string &detail = {}) {
  g_results.push_back(Outcome{id, title, pass, detail});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---- criteria 1-8: exact identities ---------------------------------------

void criterion_1_golden_table() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 5 && pass; ++m)
    for (int p = 1; p <= m && pass; ++p) {
      const NCPoly want = golden_xmp(m, p);
      if (xmp_recursive(m, p) != want || xmp_closed(m, p) != want) {
        pass = false;
        detail = "X_{" + std::to_string(m) + "," + std::to_string(p) +
                 "} disagrees with the golden table";
      }
    }
  const double elapsed = seconds_since(start);
  if (pass && elapsed >= 1.0) {
    pass = false;
    detail = "exceeded 1 s budget";
  }
  std::ostringstream title;
  title << "golden table values X_{m,p}, m <= 5, both routes ("
        << elapsed << " s)";
  record(1, title.str(), pass, detail);
}

void criterion_2_closed_equals_recursive() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 8 && pass; ++m)
    for (int p = 1; p <= m && pass; ++p)
      if (xmp_closed(m, p) != xmp_recursive(m, p)) {
        pass = false;
        detail = "mismatch at (" + std::to_string(m) + "," +
                 std::to_string(p) + ")";
      }
  const double elapsed = seconds_since(start);
  if (pass && elapsed >= 10.0) {
    pass = false;
    detail = "exceeded 10 s budget";
  }
  std::ostringstream title;
  title << "closed form equals recursion for 1 <= p <= m <= 8 (" << elapsed
        << " s)";
  record(2, title.str(), pass, detail);
}

void criterion_3_induction() {
  bool pass = true;
  std::string detail;
  const NCPoly a = gen_a(), b = gen_b();
  for (int m = 2; m <= 7 && pass; ++m)
    for (int p = 2; p <= m && pass; ++p) {
      const NCPoly lhs =
          commutator(a, xmp_recursive(m, p)) + b * xmp_recursive(m, p - 1);
      if (lhs != xmp_recursive(m + 1, p)) {
        pass = false;
        detail = "induction fails at (" + std::to_string(m) + "," +
                 std::to_string(p) + ")";
      }
    }
  record(3, "induction identity [A,X_{m,p}] + B X_{m,p-1} = X_{m+1,p}, m <= 7",
         pass, detail);
}

void criterion_4_binomial_reconstruction() {
  bool pass = true;
  std::string detail;
  const NCPoly sum = gen_a() + gen_b();
  for (int n = 0; n <= 8 && pass; ++n)
    if (reconstruct_power(n) != pow(sum, n)) {
      pass = false;
      detail = "n = " + std::to_string(n);
    }
  record(4, "binomial reconstruction equals (A+B)^n for n <= 8", pass, detail);
}

void criterion_5_right_form() {
  const int N = 6;
  bool pass = true;
  std::string detail;
  const NCPoly lhs = right_expansion({N, std::nullopt, Side::Right}) *
                     taylor_exponential(gen_a(), N);
  const NCPoly rhs = taylor_exponential(gen_a() + gen_b(), N);
  for (int d = 0; d <= N && pass; ++d)
    if (grade(lhs, d) != grade(rhs, d)) {
      pass = false;
      detail = "degree " + std::to_string(d);
    }
  record(5, "right form times e^A matches e^{A+B} in every degree <= 6", pass,
         detail);
}

void criterion_6_left_form_and_duality() {
  const int N = 6;
  bool pass = true;
  std::string detail;
  const NCPoly lhs = taylor_exponential(gen_a(), N) *
                     left_expansion({N, std::nullopt, Side::Left});
  const NCPoly rhs = taylor_exponential(gen_a() + gen_b(), N);
  for (int d = 0; d <= N && pass; ++d)
    if (grade(lhs, d) != grade(rhs, d)) {
      pass = false;
      detail = "degree " + std::to_string(d);
    }
  if (pass) {
    for (int n = 1; n <= N && pass; ++n)
      if (left_expansion({n, std::nullopt, Side::Left}) !=
          reversed(right_expansion({n, std::nullopt, Side::Right}))) {
        pass = false;
        detail = "duality fails at N = " + std::to_string(n);
      }
  }
  if (pass) {
    for (const auto &c : enumerate_compositions(N, std::nullopt)) {
      const Rational right = composition_coefficient(c, Side::Right);
      const Rational left = composition_coefficient(c, Side::Left);
      const bool flip = (c.weight() - c.length()) % 2 != 0;
      if (left != (flip ? -right : right)) {
        pass = false;
        detail = "sign rule fails";
        break;
      }
    }
  }
  record(6, "left form matches e^{A+B}; left is the signed reversal of right",
         pass, detail);
}

void criterion_7_bch() {
  const int N = 6;
  bool pass = true;
  std::string detail;
  const NCPoly x = NCPoly::generator(GenX), y = NCPoly::generator(GenY);
  const NCPoly taylor =
      truncated(taylor_exponential(x, N) * taylor_exponential(y, N), N);
  if (bch_product_x(N) != taylor || bch_product_y(N) != taylor ||
      bch_symmetrized(N) != taylor) {
    pass = false;
    detail = "a family disagrees with the Taylor product";
  }
  if (pass) {
    const NCPoly sum = x + y;
    const NCPoly cubic =
        Rational(1, 12) * (commutator(y, commutator(y, x)) +
                           commutator(x, commutator(x, y))) +
        Rational(1, 4) *
            (commutator(x, y) * sum + sum * commutator(x, y)) +
        Rational(1, 6) * pow(sum, 3);
    if (grade(bch_symmetrized(3), 3) != cubic) {
      pass = false;
      detail = "cubic display (1/12, 1/4, 1/6) is off";
    }
  }
  record(7, "BCH expansions equal Taylor(e^X e^Y) through degree 6; cubic "
            "display exact",
         pass, detail);
}

void criterion_8_classical() {
  const int N = 5;
  bool pass = true;
  std::string detail;
  const NCPoly a = gen_a(), b = gen_b();
  const auto zs = classical_zassenhaus_terms(N, N);
  const auto zts = classical_zassenhaus_transposed(N, N);
  if (zs[0] != Rational(-1, 2) * commutator(a, b)) {
    pass = false;
    detail = "Z_2";
  }
  if (pass && zs[1] != Rational(1, 3) * commutator(b, commutator(a, b)) +
                           Rational(1, 6) * commutator(a, commutator(a, b))) {
    pass = false;
    detail = "Z_3";
  }
  if (pass) {
    TSeries product =
        ts_exp(TSeries::term(a, 1, N)) * ts_exp(TSeries::term(b, 1, N));
    for (int n = 2; n <= N; ++n)
      product = product * ts_exp(TSeries::term(
                              zs[static_cast<std::size_t>(n - 2)], n, N));
    if (product != ts_exp(TSeries::term(a + b, 1, N))) {
      pass = false;
      detail = "right-ordered reconstruction through t^5";
    }
  }
  if (pass) {
    TSeries product = TSeries::one(N);
    for (int n = N; n >= 2; --n)
      product = product * ts_exp(TSeries::term(
                              zts[static_cast<std::size_t>(n - 2)], n, N));
    product = product * ts_exp(TSeries::term(b, 1, N)) *
              ts_exp(TSeries::term(a, 1, N));
    if (product != ts_exp(TSeries::term(a + b, 1, N))) {
      pass = false;
      detail = "transposed reconstruction through b^5";
    }
  }
  if (pass) {
    for (int n = 2; n <= N; ++n) {
      const NCPoly &z = zs[static_cast<std::size_t>(n - 2)];
      if (zts[static_cast<std::size_t>(n - 2)] != reversed(z)) {
        pass = false;
        detail = "transposed term at n = " + std::to_string(n);
        break;
      }
    }
  }
  record(8, "classical comparator: Z_2, Z_3, both reconstructions through "
            "degree 5",
         pass, detail);
}

// ---- criterion 9: numeric oracle -------------------------------------------

void criterion_9_numeric() {
  bool pass = true;
  std::string detail;

  DenseMatrix tri_a(2), tri_b(2);
  tri_a.at(0, 0) = 1.0;
  tri_a.at(1, 1) = 2.0;
  tri_b.at(0, 1) = 1.0;
  const Assignment tri(tri_a, tri_b);
  const DenseMatrix got = zassenhaus_apply(tri, {30, 1, Side::Right});
  const double tri_err = frobenius_distance(got, expm(tri.A + tri.B));
  if (tri_err > 1e-12) {
    pass = false;
    detail = "triangular error " + std::to_string(tri_err);
  }
  if (pass && std::abs(got.at(0, 1) - 4.670774270471604) > 1e-12) {
    pass = false;
    detail = "entry (1,2) is not e^2 - e";
  }

  if (pass) {
    const Assignment random(random_matrix(4, 1005, 0.25),
                            random_matrix(4, 1006, 0.25));
    const auto report = convergence_scan(random, {2, 4, 6, 8, 10, 12});
    for (std::size_t i = 1; i < report.rows.size() && pass; ++i)
      if (report.rows[i].frobenius_error >=
          report.rows[i - 1].frobenius_error) {
        pass = false;
        detail = "error not decreasing at N = " +
                 std::to_string(report.rows[i].degree);
      }
    if (pass && report.rows.back().frobenius_error > 1e-8) {
      pass = false;
      detail = "error at N = 12 is " +
               std::to_string(report.rows.back().frobenius_error);
    }
  }
  record(9, "numeric oracle: triangular N=30 cap 1 within 1e-12; random 4x4 "
            "monotone, <= 1e-8 at N=12",
         pass, detail);
}

// ---- criterion 10: CLI determinism ------------------------------------------

struct RunCapture {
  int code = -1;
  std::string out;
};

RunCapture run_binary(const std::string &args) {
  const std::string command =
      std::string("\"") + ZASSENHAUS_CLI_PATH + "\" " + args + " 2>/dev/null";
  RunCapture r;
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
    r.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status))
    r.code = WEXITSTATUS(status);
  return r;
}

void criterion_10_determinism() {
  bool pass = true;
  std::string detail;

  const auto fixture =
      std::filesystem::temp_directory_path() / "zassenhaus_acceptance.json";
  {
    std::ofstream f(fixture);
    f << R"({"A": {"dim": 2, "rows": [[1.0, 0.0], [0.0, 2.0]]},
             "B": {"dim": 2, "rows": [[0.0, 1.0], [0.0, 0.0]]}})";
  }

  const std::vector<std::string> commands = {
      "verify all",
      "expand --side right --degree 4 --format json",
      "expand --side left --degree 4 --format latex",
      "xmp 5 3 --format latex",
      "bch --degree 4 --family y --format json",
      "eval " + fixture.string() + " --degree 30 --factors 1 --format json",
  };
  for (const auto &cmd : commands) {
    const RunCapture first = run_binary(cmd);
    const RunCapture second = run_binary(cmd);
    if (first.code != 0 || second.code != 0) {
      pass = false;
      detail = "`" + cmd + "` exited " + std::to_string(first.code);
      break;
    }
    if (first.out.empty() || first.out != second.out) {
      pass = false;
      detail = "`" + cmd + "` is not byte-identical across runs";
      break;
    }
  }
  record(10, "CLI determinism: verify all exits 0; repeated runs are "
             "byte-identical",
         pass, detail);
}

} // namespace

int main() {
  criterion_1_golden_table();
  criterion_2_closed_equals_recursive();
  criterion_3_induction();
  criterion_4_binomial_reconstruction();
  criterion_5_right_form();
  criterion_6_left_form_and_duality();
  criterion_7_bch();
  criterion_8_classical();
  criterion_9_numeric();
  criterion_10_determinism();

  int failed = 0;
  for (const auto &r : g_results) {
    std::cout << "CRITERION " << r.id << (r.id < 10 ? "  " : " ")
              << (r.pass ? "PASS  " : "FAIL  ") << r.title;
    if (!r.pass) {
      std::cout << "  [" << r.detail << "]";
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present")
            << " (" << (g_results.size() - static_cast<std::size_t>(failed))
            << "/" << g_results.size() << ")\n";
  return failed == 0 ? 0 : 1;
}
