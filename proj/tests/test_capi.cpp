#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zdisc/zdisc.h"

namespace {

zd_complex c(double re, double im = 0.0) { return {re, im}; }

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(zd_status_name(ZD_OK)) == "ok");
  CHECK(std::string(zd_status_name(ZD_ERR_DOMAIN)) == "domain");
  zd_complex out;
  CHECK(zd_eval_poly(1, 1, 0.0, c(1.5), ZD_PATH_J_SUM, &out) == ZD_ERR_DOMAIN);
  CHECK(std::string(zd_last_error()).size() > 0);
  CHECK(zd_eval_poly(1, 1, 0.0, c(0.5), ZD_PATH_J_SUM, nullptr) == ZD_ERR_INVALID_ARGUMENT);
  CHECK(zd_normalization(0, 0, -1.0, nullptr) == ZD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("complex constants") {
  zd_complex z;
  REQUIRE(zd_parse_complex("0.3-0.4i", &z) == ZD_OK);
  CHECK(z.re == 0.3);
  CHECK(z.im == -0.4);
  REQUIRE(zd_parse_complex("1/2", &z) == ZD_OK);
  CHECK(z.re == 0.5);
  CHECK(zd_parse_complex("z", &z) != ZD_OK);
  CHECK(zd_parse_complex("0.3+", &z) == ZD_ERR_PARSE);
}

TEST_CASE("polynomials through handles") {
  zd_poly* p = nullptr;
  REQUIRE(zd_poly_build(1, 1, 0.0, &p) == ZD_OK);
  // P_{1,1}^0 = 2 z zbar - 1
  REQUIRE(zd_poly_term_count(p) == 2);
  double sum_coef = 0.0;
  for (size_t i = 0; i < 2; ++i) {
    int a, b;
    zd_complex k;
    REQUIRE(zd_poly_term(p, i, &a, &b, &k) == ZD_OK);
    CHECK(a == b);
    sum_coef += k.re;
  }
  CHECK(sum_coef == doctest::Approx(1.0));
  int a, b;
  zd_complex k;
  CHECK(zd_poly_term(p, 2, &a, &b, &k) == ZD_ERR_INVALID_ARGUMENT);
  zd_poly_free(p);
  zd_poly_free(nullptr);

  zd_complex v[3];
  for (int path = 0; path < 3; ++path) REQUIRE(zd_eval_poly(3, 2, 0.5, c(0.3, 0.2), zd_eval_path(path), &v[path]) == ZD_OK);
  CHECK(std::hypot(v[0].re - v[1].re, v[0].im - v[1].im) < 1e-13);
  CHECK(std::hypot(v[0].re - v[2].re, v[0].im - v[2].im) < 1e-13);
  double A;
  REQUIRE(zd_normalization(1, 1, 0.0, &A) == ZD_OK);
  CHECK(A == doctest::Approx(M_PI / 3.0));
}

TEST_CASE("kernels") {
  zd_complex v;
  zd_kernel_path path;
  REQUIRE(zd_kernel(0, 0.0, c(0.0), c(0.0), &v, &path) == ZD_OK);
  CHECK(path == ZD_KERNEL_DIAGONAL);
  CHECK(v.re == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
  REQUIRE(zd_kernel(2, 0.5, c(0.4), c(0.1, 0.2), &v, &path) == ZD_OK);
  CHECK(path == ZD_KERNEL_CLOSED);
  CHECK(std::string(zd_kernel_path_name(path)) == "closed");
  CHECK(zd_kernel(0, 0.0, c(1.0), c(0.0), &v, &path) == ZD_ERR_DOMAIN);
}

TEST_CASE("rules and observables") {
  zd_rule* r = nullptr;
  REQUIRE(zd_rule_create(3, 4, 0.0, &r) == ZD_OK);
  CHECK(zd_rule_size(r) == 12);
  CHECK(zd_rule_exact_degree(r) == 10);
  zd_observable* f = nullptr;
  size_t pos = 99;
  REQUIRE(zd_observable_parse("z*zbar", &f, &pos) == ZD_OK);
  CHECK(zd_observable_degree(f) == 2);
  zd_complex v;
  REQUIRE(zd_rule_integrate(r, f, &v) == ZD_OK);
  CHECK(v.re == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
  REQUIRE(zd_observable_eval(f, c(0.3, 0.4), &v) == ZD_OK);
  CHECK(v.re == 0.25);

  size_t need = 0;
  CHECK(zd_observable_to_string(f, nullptr, 0, &need) == ZD_ERR_INVALID_ARGUMENT);
  REQUIRE(need > 1);
  std::string buf(need, '\0');
  REQUIRE(zd_observable_to_string(f, buf.data(), buf.size(), &need) == ZD_OK);
  CHECK(std::string(buf.c_str()) == "z * zbar");
  zd_observable_free(f);
  zd_rule_free(r);

  zd_observable* bad = nullptr;
  CHECK(zd_observable_parse("z + (", &bad, &pos) == ZD_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(pos == 5);
  CHECK(zd_observable_parse("z^100", &bad, &pos) == ZD_ERR_OVERFLOW);
  CHECK(zd_rule_create(0, 4, 0.0, &r) == ZD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("operators") {
  zd_observable* f = nullptr;
  REQUIRE(zd_observable_parse("z", &f, nullptr) == ZD_OK);
  zd_operator* q = nullptr;
  REQUIRE(zd_quantize(f, 0, 0.0, 6, &q) == ZD_OK);
  CHECK(zd_operator_size(q) == 6);
  zd_complex e;
  REQUIRE(zd_operator_entry(q, 0, 1, &e) == ZD_OK);
  CHECK(e.re == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(zd_operator_entry(q, 6, 0, &e) == ZD_ERR_INVALID_ARGUMENT);
  CHECK(zd_operator_warning_count(q) == 0);

  zd_operator *az = nullptr, *azb = nullptr, *k = nullptr;
  REQUIRE(zd_ladder(0, 0.0, 6, &az, &azb) == ZD_OK);
  REQUIRE(zd_commutator(az, azb, &k) == ZD_OK);
  REQUIRE(zd_operator_entry(k, 2, 2, &e) == ZD_OK);
  CHECK(e.re == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  zd_operator *az1 = nullptr, *azb1 = nullptr, *bad = nullptr;
  REQUIRE(zd_ladder(1, 0.0, 6, &az1, &azb1) == ZD_OK);
  CHECK(zd_commutator(az, azb1, &bad) == ZD_ERR_METADATA_MISMATCH);

  zd_complex s;
  double tail = -1.0;
  REQUIRE(zd_lower_symbol(az, c(0.0), &s, &tail) == ZD_OK);
  CHECK(s.re == 0.0);
  CHECK(tail == 0.0);

  const std::string path = "capi_test_az.csv";
  REQUIRE(zd_operator_write_csv(q, path.c_str()) == ZD_OK);
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "# n=0 alpha=0 M=6 provenance=quadrature");
  int rows = 0;
  std::string first;
  while (std::getline(in, row)) {
    if (rows == 0) first = row;
    ++rows;
  }
  CHECK(rows == 6);
  std::stringstream ss(first);
  std::string cell;
  int cells = 0;
  double entry01 = 0.0;
  while (std::getline(ss, cell, ',')) {
    if (cells == 2) entry01 = std::stod(cell);
    ++cells;
  }
  CHECK(cells == 12);
  CHECK(entry01 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  std::remove(path.c_str());
  CHECK(zd_operator_write_csv(q, "/nonexistent/dir/x.csv") == ZD_ERR_IO);

  zd_complex b;
  double acc = -1.0;
  REQUIRE(zd_berezin(f, c(0.2, 0.1), 0, 0.0, &b, &acc) == ZD_OK);
  CHECK(acc >= 0.0);

  for (auto* o : {q, az, azb, k, az1, azb1}) zd_operator_free(o);
  zd_operator_free(nullptr);
  zd_observable_free(f);
}

TEST_CASE("reports") {
  zd_report* r = nullptr;
  REQUIRE(zd_verify("su11", 0.0, 10, 1, &r) == ZD_OK);
  CHECK(zd_report_pass(r) == 1);
  const auto j = nlohmann::json::parse(zd_report_json(r));
  CHECK(j["schema"] == "report_v1");
  CHECK(j["suite"] == "su11");
  zd_report_free(r);
  CHECK(zd_verify("bogus", 0.0, 10, 1, &r) == ZD_ERR_INVALID_ARGUMENT);

  REQUIRE(zd_compare_su11(1.0, 0, 0.0, 16, &r) == ZD_OK);
  const auto cmp = nlohmann::json::parse(zd_report_json(r));
  CHECK(cmp["comparison"]["verdict"] == "not related by parameter adjustment");
  CHECK(cmp["comparison"]["zernike_commutator_diagonal"].size() == 15);
  CHECK(zd_report_pass(r) == 1);
  CHECK(zd_report_write(r, "/nonexistent/dir/r.json") == ZD_ERR_IO);
  zd_report_free(r);
}
