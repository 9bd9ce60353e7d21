#include "doctest.h"

#include <cmath>
#include <random>

#include "zdisc/special_functions.hpp"

using namespace zdisc;
using doctest::Approx;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

// reference values computed with mpmath at 40 digits
TEST_CASE("log_gamma against high-precision references") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-15));
  CHECK(log_gamma(0.5) == Approx(std::log(std::sqrt(M_PI))).epsilon(1e-15));
  const std::pair<double, double> refs[] = {
      {0.5, 0.57236494292470008707}, {0.1, 2.2527126517342059599},  {2.5, 0.28468287047291915963},
      {7.25, 7.0521854507385394449}, {100.5, 361.43554046777762156}, {199.9, 857.40411336432821371},
      {1e-5, 11.512919692895825707}};
  for (auto [x, ref] : refs) CHECK(std::abs(log_gamma(x) - ref) <= 1e-14 * std::abs(ref));
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), Error);
  try {
    log_gamma(-2.5);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(1.0, 3) == 6.0);
  CHECK(pochhammer(7.3, 0) == 1.0);
  CHECK(pochhammer(cplx(-1.0, 2.0), 0) == cplx(1.0));
  CHECK(pochhammer(-3.0, 3) == -6.0);  // (-3)(-2)(-1), still nonzero
  CHECK(rel(pochhammer(cplx(0.5, 0.25), 4), cplx(5.22265625, 5.375)) < 1e-15);
  CHECK(pochhammer(2.7, 5) == Approx(1793.13507).epsilon(1e-14));

  SUBCASE("recurrence (a)_{k+1} = (a)_k (a+k)") {
    for (double a : {-4.0, -1.0, 2.0, 5.0})
      for (int k = 0; k < 12; ++k) CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + k));
    for (double a : {-0.5, 0.3, 1.7, 12.25})
      for (int k = 0; k < 30; ++k) CHECK(pochhammer(a, k + 1) == Approx(pochhammer(a, k) * (a + k)).epsilon(1e-14));
  }
}

TEST_CASE("termination") {
  CHECK(is_nonpositive_integer(0.0));
  CHECK(is_nonpositive_integer(-3.0));
  CHECK_FALSE(is_nonpositive_integer(-2.5));
  CHECK_FALSE(is_nonpositive_integer(1.0));
  CHECK(termination_length(-4.0) == 5);
  CHECK(termination_length(0.0) == 1);
  CHECK(termination_length(0.5) == -1);
}

TEST_CASE("gauss_2f1_terminating") {
  const cplx x(0.3, -0.7);
  CHECK(rel(gauss_2f1_terminating(-1, -1, 2, x), 1.0 + x / 2.0) < 1e-15);
  CHECK(rel(gauss_2f1_terminating(-1, -1, 1, 1.0), 2.0) < 1e-15);
  CHECK(gauss_2f1_terminating(-7, -3, 1.5, 0.0) == cplx(1.0));
  CHECK(rel(gauss_2f1_terminating(-4, 2.5, 1.5, x), cplx(-1.6921333333333333333, -1.8293333333333333333)) < 1e-14);
  CHECK(rel(gauss_2f1_terminating(-3, -5, 0.5, x), cplx(-35.248, -49.672)) < 1e-14);
  // symmetric in a and b
  CHECK(rel(gauss_2f1_terminating(2.5, -4, 1.5, x), gauss_2f1_terminating(-4, 2.5, 1.5, x)) < 1e-15);

  SUBCASE("non-terminating parameters and c <= 0 are rejected") {
    CHECK_THROWS_AS(gauss_2f1_terminating(0.5, 1.5, 2.0, x), Error);
    CHECK_THROWS_AS(gauss_2f1_terminating(-2, 1.5, 0.0, x), Error);
    CHECK_THROWS_AS(gauss_2f1_terminating(-2, 1.5, -1.0, x), Error);
  }

  SUBCASE("Horner on the coefficient list matches direct evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int n = 0; n <= 20; ++n) {
      for (double b : {-3.0, 0.5, 2.25}) {
        const auto t = gauss_2f1_coefficients(-n, b, 1.75);
        const cplx z(u(rng), u(rng));
        cplx h = 0.0;
        for (auto it = t.rbegin(); it != t.rend(); ++it) h = h * z + *it;
        const cplx direct = gauss_2f1_terminating(-n, b, 1.75, z);
        double scale = 0.0;
        for (size_t k = 0; k < t.size(); ++k) scale += std::abs(t[k]) * std::pow(std::abs(z), double(k));
        CHECK(std::abs(h - direct) <= 1e-13 * std::max(std::abs(direct), scale));
      }
    }
  }
}

TEST_CASE("appell_f1_terminating") {
  const cplx X(0.2, 0.1), Y(-0.3, 0.4);
  CHECK(appell_f1_terminating(-5, 0, 0, 2.5, X, Y) == cplx(1.0));
  CHECK(appell_f1_terminating(-3, -2, -1, 1.5, 0.0, 0.0) == cplx(1.0));
  CHECK(rel(appell_f1_terminating(-1, -1, -1, 2, X, Y), 1.0 + X / 2.0 + Y / 2.0) < 1e-15);
  CHECK(rel(appell_f1_terminating(-3, -2, 1.5, 2.5, X, Y), cplx(2.1287142857142857143, -0.91009523809523809524)) < 1e-14);
  CHECK(rel(appell_f1_terminating(-4, 0.5, -2, 1.25, X, Y), cplx(-1.1244500754147812971, 1.2889001508295625943)) < 1e-14);
  CHECK_THROWS_AS(appell_f1_terminating(0.5, -1, -1, 2, X, Y), Error);

  SUBCASE("y = 0 reduces to 2F1") {
    for (int n = 0; n <= 10; ++n)
      for (double b1 : {-2.0, 0.75, 3.0}) {
        const cplx a = appell_f1_terminating(-n, b1, -4.0, 1.5, X, 0.0);
        const cplx g = gauss_2f1_terminating(-n, b1, 1.5, X);
        CHECK(std::abs(a - g) <= 1e-13 * std::max(1.0, std::abs(g)));
      }
  }
}

TEST_CASE("series identities") {
  SUBCASE("bilinear 2F1 sum at beta = 0 collapses to (1-z)^{-alpha-1}") {
    for (double a : {-0.5, 0.0, 0.5, 2.0}) CHECK(bilinear_2f1_residual(a, 0, {0.3, 0.1}, {0.2, -0.1}, {-0.3, 0.2}, 400) <= 1e-12);
  }
  SUBCASE("bilinear 2F1 and Appell expansions for n > 0") {
    for (double a : {0.0, 0.5, 2.0})
      for (int n = 1; n <= 5; ++n) {
        CHECK(bilinear_2f1_residual(a, n, {0.3, 0.1}, {0.2, -0.1}, {-0.3, 0.2}, 400) <= 1e-10);
        CHECK(bilinear_appell_residual(a, n, {0.2, -0.1}, {0.1, 0.1}, {-0.15, 0.05}, 400) <= 1e-10);
      }
  }
  SUBCASE("Appell reduction with k = 0") {
    for (int n = 0; n <= 6; ++n) CHECK(appell_reduction_residual(n, 0, 0.5, {0.4, 0.1}, {-0.2, 0.3}) <= 1e-12);
  }
  SUBCASE("Appell reduction over the parameter grid") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(0.1, 0.7), t(0.0, 2 * M_PI);
    double worst = 0.0;
    for (double a : {0.0, 0.5, 2.0})
      for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k)
          for (int s = 0; s < 4; ++s) {
            const cplx z = std::polar(r(rng), t(rng)), w = std::polar(r(rng), t(rng));
            worst = std::max(worst, appell_reduction_residual(n, k, a, z, w));
          }
    CHECK(worst < 1e-10);
  }
  SUBCASE("Chu-Vandermonde") {
    CHECK(std::abs(gauss_2f1_terminating(-2, -1, 2, 1.0) - 2.0) < 1e-15);
    for (double a : {-0.5, 0.0, 1.0, 2.5})
      for (int k = 0; k <= 20; ++k) CHECK(chu_vandermonde_residual(k, a) <= 1e-13);
  }
  SUBCASE("bundled verifier reports every identity") {
    SeriesIdentityParams p;
    p.alpha = 0.5;
    p.n = 3;
    p.k = 2;
    const auto out = verify_series_identities(p);
    REQUIRE(out.size() == 4);
    for (const auto& r : out) CHECK_MESSAGE(r.residual <= 1e-10, r.id);
  }
}
