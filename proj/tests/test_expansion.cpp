#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zassenhaus/expansion.hpp"
#include "zassenhaus/tseries.hpp"

#include "test_support.hpp"

using namespace zassenhaus;
using namespace testsupport;

TEST_CASE("script_b_prime: nested commutator blocks") {
  CHECK(script_b_prime(1) == gen_b());
  CHECK(script_b_prime(2) == poly({{"AB", 1}, {"BA", -1}}));
  CHECK(script_b_prime(3) == ad_power(gen_a(), gen_b(), 2));
  CHECK_THROWS_AS(script_b_prime(0), std::invalid_argument);
  for (int m = 1; m <= 8; ++m) {
    const NCPoly block = script_b_prime(m);
    for (const auto &[w, c] : block.terms()) {
      CHECK(w.degree() == m);
      CHECK(w.bdeg() == 1);
    }
  }
}

TEST_CASE("script_b: 1/m! rescaling") {
  CHECK(script_b(1) == gen_b());
  CHECK(script_b(2) == Rational(1, 2) * poly({{"AB", 1}, {"BA", -1}}));
  CHECK(script_b(4) ==
        (Rational(1) / Rational::factorial(4)) * ad_power(gen_a(), gen_b(), 3));
  CHECK_THROWS_AS(script_b(0), std::invalid_argument);
}

TEST_CASE("golden table values, both routes (m <= 5)") {
  for (int m = 1; m <= 5; ++m)
    for (int p = 1; p <= m; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      const NCPoly want = golden_xmp(m, p);
      CHECK(xmp_recursive(m, p) == want);
      CHECK(xmp_closed(m, p) == want);
    }
  CHECK(xm(2) == pow(gen_b(), 2) + bp(2));
}

TEST_CASE("xmp range checks") {
  CHECK_THROWS_AS(xmp_recursive(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(xmp_recursive(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(xmp_closed(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(xmp_closed(2, 3), std::invalid_argument);
}

TEST_CASE("closed form equals the recursion for all m <= 8") {
  for (int m = 1; m <= 8; ++m)
    for (int p = 1; p <= m; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      CHECK(xmp_closed(m, p) == xmp_recursive(m, p));
    }
}

TEST_CASE("induction step [A, X_{m,p}] + B X_{m,p-1} = X_{m+1,p}") {
  for (int m = 2; m <= 7; ++m)
    for (int p = 2; p <= m; ++p) {
      CAPTURE(m);
      CAPTURE(p);
      const NCPoly lhs = commutator(gen_a(), xmp_recursive(m, p)) +
                         gen_b() * xmp_recursive(m, p - 1);
      CHECK(lhs == xmp_recursive(m + 1, p));
    }
}

TEST_CASE("every word of X_{m,p} has degree m and B-power p") {
  for (int m = 1; m <= 8; ++m)
    for (int p = 1; p <= m; ++p) {
      const NCPoly xmp = xmp_recursive(m, p);
      for (const auto &[w, c] : xmp.terms()) {
        CHECK(w.degree() == m);
        CHECK(w.bdeg() == p);
      }
    }
}

TEST_CASE("X_m examples") {
  CHECK(xm(0) == NCPoly::unit());
  CHECK(xm(1) == gen_b());
  CHECK(xm(2) == pow(gen_b(), 2) + poly({{"AB", 1}, {"BA", -1}}));
  CHECK_THROWS_AS(xm(-1), std::invalid_argument);
}

TEST_CASE("binomial reconstruction matches the direct power") {
  const NCPoly sum = gen_a() + gen_b();
  CHECK(reconstruct_power(0) == NCPoly::unit());
  CHECK(reconstruct_power(1) == sum);
  SUBCASE("n = 4: all 16 words with coefficient 1") {
    const NCPoly got = reconstruct_power(4);
    CHECK(got == pow(sum, 4));
    CHECK(got.term_count() == 16);
    for (const auto &[w, c] : got.terms())
      CHECK(c == Rational(1));
  }
  SUBCASE("n <= 8") {
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(reconstruct_power(n) == pow(sum, n));
    }
  }
}

TEST_CASE("composition coefficients") {
  SUBCASE("single-factor terms carry 1") {
    for (int m = 1; m <= 10; ++m)
      CHECK(composition_coefficient(Composition{m}, Side::Right) == Rational(1));
  }
  SUBCASE("worked pair (1,2)") {
    CHECK(composition_coefficient(Composition{1, 2}, Side::Right) ==
          Rational(1, 3));
    CHECK(composition_coefficient(Composition{1, 2}, Side::Left) ==
          Rational(-1, 3));
  }
  SUBCASE("all-ones composition gives the e^B subseries 1/p!") {
    for (int p = 1; p <= 8; ++p) {
      const Composition ones(std::vector<int>(static_cast<std::size_t>(p), 1));
      CHECK(composition_coefficient(ones, Side::Right) ==
            Rational(1) / Rational::factorial(p));
    }
  }
  SUBCASE("right coefficients lie in (0,1]") {
    for (const auto &c : enumerate_compositions(8, std::nullopt)) {
      const Rational r = composition_coefficient(c, Side::Right);
      CHECK(Rational(0) < r);
      CHECK(r <= Rational(1));
    }
  }
  SUBCASE("left sign is (-1)^{weight-p}") {
    for (const auto &c : enumerate_compositions(6, std::nullopt)) {
      const Rational right = composition_coefficient(c, Side::Right);
      const Rational left = composition_coefficient(c, Side::Left);
      const bool flip = (c.weight() - c.length()) % 2 != 0;
      CHECK(left == (flip ? -right : right));
    }
  }
}

TEST_CASE("composition enumeration is weight-major then lexicographic") {
  const auto comps = enumerate_compositions(3, std::nullopt);
  const std::vector<Composition> want = {
      Composition{1},       Composition{1, 1}, Composition{2},
      Composition{1, 1, 1}, Composition{1, 2}, Composition{2, 1},
      Composition{3}};
  CHECK(comps == want);

  const auto capped = enumerate_compositions(3, 1);
  CHECK(capped ==
        std::vector<Composition>{Composition{1}, Composition{2}, Composition{3}});

  CHECK_THROWS_AS(enumerate_compositions(-1, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_compositions(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Composition{0}, std::invalid_argument);
  CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("right expansion at small truncation") {
  CHECK(right_expansion({0, std::nullopt, Side::Right}) == NCPoly::unit());
  CHECK(right_expansion({1, std::nullopt, Side::Right}) ==
        NCPoly::unit() + gen_b());
  const NCPoly want = NCPoly::unit() + gen_b() + script_b(2) +
                      Rational(1, 2) * pow(gen_b(), 2);
  CHECK(right_expansion({2, std::nullopt, Side::Right}) == want);
  CHECK_THROWS_AS(right_expansion({2, std::nullopt, Side::Left}),
                  std::invalid_argument);
}

TEST_CASE("factor cap keeps only single-block terms") {
  NCPoly want = NCPoly::unit();
  for (int n = 1; n <= 4; ++n)
    want += script_b(n);
  CHECK(right_expansion({4, 1, Side::Right}) == want);
}

TEST_CASE("taylor_exponential") {
  const NCPoly a = gen_a();
  CHECK(taylor_exponential(a, 2) ==
        NCPoly::unit() + a + Rational(1, 2) * (a * a));
  CHECK(taylor_exponential(a, 0) == NCPoly::unit());
  CHECK(taylor_exponential(NCPoly(), 5) == NCPoly::unit());
}

TEST_CASE("main theorem, right form: resummation grade by grade (N=6)") {
  const int N = 6;
  const NCPoly lhs = right_expansion({N, std::nullopt, Side::Right}) *
                     taylor_exponential(gen_a(), N);
  const NCPoly rhs = taylor_exponential(gen_a() + gen_b(), N);
  for (int d = 0; d <= N; ++d) {
    CAPTURE(d);
    CHECK(grade(lhs, d) == grade(rhs, d));
  }
}

TEST_CASE("left expansion at small truncation") {
  CHECK(left_expansion({1, std::nullopt, Side::Left}) ==
        NCPoly::unit() + gen_b());
  const NCPoly want = NCPoly::unit() + gen_b() - script_b(2) +
                      Rational(1, 2) * pow(gen_b(), 2);
  CHECK(left_expansion({2, std::nullopt, Side::Left}) == want);
  CHECK_THROWS_AS(left_expansion({2, std::nullopt, Side::Right}),
                  std::invalid_argument);
}

TEST_CASE("main theorem, left form: resummation and duality (N=6)") {
  const int N = 6;
  const NCPoly lhs = taylor_exponential(gen_a(), N) *
                     left_expansion({N, std::nullopt, Side::Left});
  const NCPoly rhs = taylor_exponential(gen_a() + gen_b(), N);
  for (int d = 0; d <= N; ++d) {
    CAPTURE(d);
    CHECK(grade(lhs, d) == grade(rhs, d));
  }
  for (int n = 1; n <= N; ++n) {
    CAPTURE(n);
    CHECK(left_expansion({n, std::nullopt, Side::Left}) ==
          reversed(right_expansion({n, std::nullopt, Side::Right})));
  }
}

TEST_CASE("classical comparator: extracted terms") {
  const auto zs = classical_zassenhaus_terms(3, 5);
  REQUIRE(zs.size() == 2);
  SUBCASE("Z_2 = -(1/2)[A,B]") {
    CHECK(zs[0] == Rational(-1, 2) * commutator(gen_a(), gen_b()));
    CHECK(zs[0] == poly({{"AB", {-1, 2}}, {"BA", {1, 2}}}));
  }
  SUBCASE("Z_3 = (1/3)[B,[A,B]] + (1/6)[A,[A,B]]") {
    const NCPoly want =
        Rational(1, 3) * commutator(gen_b(), commutator(gen_a(), gen_b())) +
        Rational(1, 6) * commutator(gen_a(), commutator(gen_a(), gen_b()));
    CHECK(zs[1] == want);
    CHECK(zs[1] == poly({{"BAB", {2, 3}},
                         {"BBA", {-1, 3}},
                         {"ABB", {-1, 3}},
                         {"AAB", {1, 6}},
                         {"ABA", {-1, 3}},
                         {"BAA", {1, 6}}}));
  }
  SUBCASE("each Z_n is homogeneous of degree n") {
    const auto all = classical_zassenhaus_terms(5, 5);
    for (int n = 2; n <= 5; ++n)
      for (const auto &[w, c] : all[static_cast<std::size_t>(n - 2)].terms())
        CHECK(w.degree() == n);
  }
}

TEST_CASE("classical comparator: stripping leaves 1 + O(t^{n_max+1})") {
  const int N = 5;
  const auto zs = classical_zassenhaus_terms(N, N);
  TSeries residual = ts_exp(TSeries::term(-gen_b(), 1, N)) *
                     ts_exp(TSeries::term(-gen_a(), 1, N)) *
                     ts_exp(TSeries::term(gen_a() + gen_b(), 1, N));
  for (int n = 2; n <= N; ++n)
    residual =
        ts_exp(TSeries::term(-zs[static_cast<std::size_t>(n - 2)], n, N)) *
        residual;
  CHECK(residual.is_one()); // everything through t^5 cancels
}

TEST_CASE("classical comparator: product reconstructs e^{t(A+B)}") {
  const int N = 5;
  const auto zs = classical_zassenhaus_terms(N, N);
  TSeries product = ts_exp(TSeries::term(gen_a(), 1, N)) *
                    ts_exp(TSeries::term(gen_b(), 1, N));
  for (int n = 2; n <= N; ++n)
    product = product *
              ts_exp(TSeries::term(zs[static_cast<std::size_t>(n - 2)], n, N));
  CHECK(product == ts_exp(TSeries::term(gen_a() + gen_b(), 1, N)));
}

TEST_CASE("transposed comparator") {
  const int N = 5;
  const auto zs = classical_zassenhaus_terms(N, N);
  const auto zts = classical_zassenhaus_transposed(N, N);
  REQUIRE(zts.size() == 4);

  SUBCASE("Z'_2 = (1/2)[A,B]") {
    CHECK(zts[0] == Rational(1, 2) * commutator(gen_a(), gen_b()));
  }
  SUBCASE("smallest request returns a single term") {
    CHECK(classical_zassenhaus_transposed(2, 2).size() == 1);
  }
  SUBCASE("reversal relation Z'_n = reversed(Z_n) = (-1)^{n+1} Z_n") {
    for (int n = 2; n <= N; ++n) {
      CAPTURE(n);
      const NCPoly &z = zs[static_cast<std::size_t>(n - 2)];
      const NCPoly &zt = zts[static_cast<std::size_t>(n - 2)];
      CHECK(zt == reversed(z));
      CHECK(zt == ((n % 2 == 0) ? -z : z));
    }
  }
  SUBCASE("decreasing-order product reconstructs e^{b(A+B)}") {
    TSeries product = TSeries::one(N);
    for (int n = N; n >= 2; --n)
      product = product * ts_exp(TSeries::term(
                              zts[static_cast<std::size_t>(n - 2)], n, N));
    product = product * ts_exp(TSeries::term(gen_b(), 1, N)) *
              ts_exp(TSeries::term(gen_a(), 1, N));
    CHECK(product == ts_exp(TSeries::term(gen_a() + gen_b(), 1, N)));
  }
}

TEST_CASE("comparator range errors") {
  CHECK_THROWS_AS(classical_zassenhaus_terms(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(classical_zassenhaus_terms(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(classical_zassenhaus_transposed(6, 5), std::invalid_argument);
}
