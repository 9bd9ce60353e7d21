// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdisc/kernels.hpp"
#include "zdisc/quantization.hpp"
#include "zdisc/special_functions.hpp"
#include "zdisc/su11.hpp"
#include "zdisc/verify.hpp"

using namespace zdisc;

namespace {

using Clock = std::chrono::steady_clock;

const double kAlphaGrid[] = {-0.5, 0.0, 0.5, 2.0};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

cplx random_point(std::mt19937_64& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> r(rmin, rmax), t(0.0, 2.0 * M_PI);
  return std::polar(r(rng), t(rng));
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome orthonormality() {
  const auto t0 = Clock::now();
  std::vector<std::pair<int, int>> idx;
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 6; ++n) idx.emplace_back(m, n);
  double worst = 0.0;
  bool exact = true;
  for (double a : kAlphaGrid) {
    const auto g = gram_matrix(idx, a, disc_rule_for_degree(2 * 18, a, 18));
    worst = std::max(worst, g.max_deviation);
    exact = exact && g.exact;
  }
  const double dt = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |G-I| = %.3g, %.2f s", worst, dt);
  return {exact && worst <= 1e-10 && dt < 10.0, buf};
}

Outcome diagonal_series() {
  double worst = 0.0;
  for (double a : {0.0, 0.5, 2.0})
    for (int n = 0; n <= 5; ++n)
      for (double r : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6})
        for (double t : {0.0, 1.3, 2.9}) {
          const cplx z = std::polar(r, t);
          const double d = kernel_diagonal(n, a, z);
          worst = std::max(worst, std::abs(kernel_series(n, a, z, z, 400).value - d) / d);
        }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max relative error = %.3g", worst);
  return {worst <= 1e-10, buf};
}

Outcome closed_form() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int pairs = 0;
  while (pairs < 500) {
    const cplx z = random_point(rng, 0.05, 0.7), w = random_point(rng, 0.05, 0.7);
    if (std::abs(z - w) < kKernelCoincidence) continue;
    const int n = pairs % 6;
    const double a = (pairs / 6) % 3 == 0 ? 0.0 : (pairs / 6) % 3 == 1 ? 0.5 : 2.0;
    const auto c = kernel_closed(n, a, z, w);
    if (c.path != KernelPath::closed) return {false, "closed form not used"};
    worst = std::max(worst, rel(c.value, kernel_series(n, a, z, w, 400).value));
    ++pairs;
  }
  // diagonal limit: halving delta halves the error
  double order_dev = 0.0, first = 0.0;
  for (double a : {0.0, 0.5, 2.0})
    for (int n : {0, 2, 5}) {
      const cplx z(0.35, 0.3);
      const double d = kernel_diagonal(n, a, z);
      const double e1 = std::abs(kernel_closed(n, a, z, z * (1.0 + 1e-3)).value - d) / d;
      const double e2 = std::abs(kernel_closed(n, a, z, z * (1.0 + 5e-4)).value - d) / d;
      first = std::max(first, e1 / 1e-3);
      order_dev = std::max(order_dev, std::abs(e1 / e2 - 2.0));
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "500 pairs max rel = %.3g; diagonal limit |e1/e2-2| = %.3g, e1/delta <= %.3g", worst, order_dev,
                first);
  return {worst <= 1e-8 && order_dev <= 0.05 && first < 50.0, buf};
}

Outcome bergman() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_point(rng, 0.05, 0.9), w = random_point(rng, 0.05, 0.9);
    const cplx q = 1.0 - z * std::conj(w);
    worst = std::max(worst, rel(kernel_closed(0, 0.0, z, w).value, 1.0 / (M_PI * q * q)));
    for (double a : {-0.5, 0.5, 2.0})
      worst = std::max(worst, rel(kernel_closed(0, a, z, w).value, (a + 1.0) / (M_PI * std::pow(q, a + 2.0))));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max relative error = %.3g", worst);
  return {worst <= 1e-12, buf};
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Outcome quantization_closed_forms() {
  const auto z = ObservableExpr::parse("z"), zb = ObservableExpr::parse("zbar"), one = ObservableExpr::parse("1");
  double ladder = 0.0, identity = 0.0;
  for (double a : {0.0, 0.5, 2.0})
    for (int n = 0; n <= 3; ++n) {
      const auto l = ladder_matrices(n, a, 12);
      ladder = std::max(ladder, max_abs(quantize_observable(z, n, a, 12).entries - l.az.entries));
      ladder = std::max(ladder, max_abs(quantize_observable(zb, n, a, 12).entries - l.azbar.entries));
      identity = std::max(identity, max_abs(quantize_observable(one, n, a, 12).entries - Eigen::MatrixXcd::Identity(12, 12)));
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "ladder = %.3g, identity = %.3g", ladder, identity);
  return {ladder <= 1e-11 && identity <= 1e-12, buf};
}

double interior(const Eigen::MatrixXcd& d, int M) { return d.topLeftCorner(M - 1, M - 1).cwiseAbs().maxCoeff(); }

Outcome commutators() {
  const int M = 12;
  const auto l = ladder_matrices(0, 0.0, M);
  const auto c = commutator(l.az, l.azbar);
  double diag = 0.0;
  for (int m = 0; m < M - 1; ++m) diag = std::max(diag, std::abs(c.entries(m, m) - 1.0 / ((m + 1.0) * (m + 2.0))));
  double qp = 0.0, h = 0.0;
  for (double a : {0.0, 0.5, 2.0})
    for (int n = 0; n <= 3; ++n) {
      const auto ph = position_momentum_hamiltonian(n, a, M);
      const auto lad = ladder_matrices(n, a, M);
      const Eigen::MatrixXcd i_comm = cplx(0.0, 1.0) * commutator(lad.az, lad.azbar).entries;
      qp = std::max(qp, interior(commutator(ph.q, ph.p).entries - i_comm, M));
      const Eigen::MatrixXcd half = (ph.q.entries * ph.q.entries + ph.p.entries * ph.p.entries) / 2.0;
      h = std::max(h, interior(ph.h.entries - half, M));
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "diagonal = %.3g, [Q,P] = %.3g, H = %.3g", diag, qp, h);
  return {diag <= 1e-12 && qp <= 1e-12 && h <= 1e-12, buf};
}

Outcome resolution() {
  double worst = 0.0;
  bool exact = true;
  for (double a : kAlphaGrid)
    for (int n = 0; n <= 3; ++n)
      for (int M = 1; M <= 12; ++M) {
        const auto r = resolution_check(n, a, M, disc_rule_for_degree(2 * (M - 1 + n), a, M));
        worst = std::max(worst, r.max_deviation);
        exact = exact && r.exact;
      }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max deviation = %.3g over n <= 3, M <= 12", worst);
  return {exact && worst <= 1e-10, buf};
}

Outcome berezin() {
  std::mt19937_64 rng(99);
  const char* polys[] = {"z", "zbar^2", "z*zbar", "z^2*zbar - 2*zbar^3 + 1", "(z+zbar)^4", "r2^2 - z^3*zbar"};
  double lower = 0.0;
  const int n = 1;
  const double a = 0.5;
  for (const char* t : polys) {
    const auto f = ObservableExpr::parse(t);
    const auto A = quantize_observable(f, n, a, 60);
    for (int i = 0; i < 50; ++i) {
      const cplx z = random_point(rng, 0.0, 0.6);
      lower = std::max(lower, std::abs(berezin_transform(f, z, n, a).value - lower_symbol(A, z).value));
    }
  }
  double unit = 0.0;
  const auto one = ObservableExpr::parse("1");
  for (double al : {0.0, 0.5, 2.0})
    for (int nn : {0, 2}) unit = std::max(unit, std::abs(berezin_transform(one, cplx(0.4, -0.3), nn, al).value - 1.0));
  double forms = 0.0;
  const auto f = ObservableExpr::parse("z^2*zbar + r2 - 3*zbar");
  for (int i = 0; i < 10; ++i) {
    const cplx z = random_point(rng, 0.0, 0.6);
    for (double al : {0.0, 0.5, 2.0}) forms = std::max(forms, std::abs(berezin_transform(f, z, 0, al).value - berezin_bergman(f, z, al).value));
    forms = std::max(forms, std::abs(berezin_transform(f, z, 0, 0.0).value - berezin_standard(f, z).value));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "B vs lower symbol = %.3g, B[1] = %.3g, n=0 forms = %.3g", lower, unit, forms);
  return {lower <= 1e-7 && unit <= 1e-9 && forms <= 1e-8, buf};
}

Outcome ladders() {
  double coef = 0.0, point = 0.0, adj = 0.0;
  const cplx pts[] = {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(0.1, -0.65)};
  for (double a : kAlphaGrid)
    for (int m = 0; m <= 15; ++m)
      for (int n = 0; n <= 15; ++n) {
        const ZernikeIndex idx{m, n, a};
        coef = std::max({coef, lowering_residual(idx), raising_residual(idx)});
        if (n >= 1) coef = std::max(coef, check_recurrence(idx));
        for (cplx z : pts) {
          for (auto dir : {LadderDirection::raise, LadderDirection::lower}) {
            if (dir == LadderDirection::lower && m == 0) continue;
            const auto p = k_ladder_pointwise(idx, z, dir);
            point = std::max(point, std::abs(p.lhs - p.rhs) / std::max(1.0, p.scale));
          }
          const auto c = k_commutator_pointwise(idx, z);
          point = std::max(point, std::abs(c.lhs - c.rhs) / std::max(1.0, c.scale));
        }
      }
  for (double a : kAlphaGrid)
    for (int n = 0; n <= 3; ++n)
      for (int m = 1; m <= 8; ++m) {
        const auto e = ladder_adjoint_elements(m, n, a);
        adj = std::max({adj, std::abs(e.lowering - std::sqrt(m * (m + a))), std::abs(e.raising_conj - std::sqrt(m * (m + a)))});
      }
  char buf[128];
  std::snprintf(buf, sizeof buf, "coefficients = %.3g, pointwise = %.3g, adjoint = %.3g", coef, point, adj);
  return {coef <= 1e-12 && point <= 1e-11 && adj <= 1e-10, buf};
}

Outcome series_identities() {
  double b2f1 = 0.0, appell = 0.0, reduction = 0.0, chu = 0.0;
  const cplx zs[] = {cplx(0.3, 0.1), cplx(-0.2, 0.25)};
  for (double a : kAlphaGrid) {
    for (cplx z : zs) b2f1 = std::max(b2f1, bilinear_2f1_residual(a, 0, z, cplx(0.2, -0.1), cplx(-0.3, 0.2), 400));
    for (int n = 0; n <= 3; ++n) appell = std::max(appell, bilinear_appell_residual(a, n, cplx(0.3, 0.1), cplx(0.2, -0.1), cplx(-0.3, 0.2), 400));
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k) reduction = std::max(reduction, appell_reduction_residual(n, k, a, cplx(0.4, 0.1), cplx(-0.2, 0.3)));
    for (int k = 0; k <= 20; ++k) chu = std::max(chu, chu_vandermonde_residual(k, a));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "bilinear 2F1 = %.3g, bilinear Appell = %.3g, reduction = %.3g, Chu-Vandermonde = %.3g", b2f1, appell,
                reduction, chu);
  return {std::max({b2f1, appell, reduction, chu}) <= 1e-10, buf};
}

Outcome su11() {
  double ladder = 0.0, diag = 0.0;
  for (double eta : {0.75, 1.0, 2.0}) {
    for (int n = 0; n <= 15; ++n) {
      const auto r = su11_diffop_check(n, eta, cplx(0.3, -0.2));
      ladder = std::max({ladder, r.k_plus, r.k_minus, r.reconstruction});
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const cplx z = random_point(rng, 0.0, 0.95);
      diag = std::max(diag, std::abs(su11_kernel(z, z, eta) - 1.0));
    }
  }
  const auto c = compare_with_zernike(0, 0.0, 1.0, 16);
  bool structural = c.zernike_bounded_decaying && c.su11_linear && c.not_related_by_parameters;
  for (double a : {0.5, 2.0})
    for (int n : {1, 3}) structural = structural && compare_with_zernike(n, a, 1.0, 16).not_related_by_parameters;
  char buf[160];
  std::snprintf(buf, sizeof buf, "ladder forms = %.3g, kernel diagonal = %.3g, decaying vs linear = %s", ladder, diag,
                structural ? "yes" : "no");
  return {ladder <= 1e-12 && diag <= 1e-14 && structural, buf};
}

Outcome cli() {
  const std::string out = std::string(ZDISC_WORK_DIR) + "/acceptance_verify_all.json";
  const std::string cmd = std::string("\"") + ZDISC_CLI_PATH + "\" verify all --alpha 0 --max-m 10 --out \"" + out + "\" > /dev/null 2>&1";
  const auto t0 = Clock::now();
  const int status = std::system(cmd.c_str());
  const double dt = seconds_since(t0);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream got(out), want(std::string(ZDISC_GOLDEN_DIR) + "/verify_all_alpha0.json");
  if (!got || !want) return {false, "missing report"};
  const std::string diff = compare_reports(nlohmann::json::parse(want), nlohmann::json::parse(got));
  char buf[160];
  std::snprintf(buf, sizeof buf, "exit %d in %.2f s, golden %s", code, dt, diff.empty() ? "stable" : diff.c_str());
  return {code == 0 && dt < 60.0 && diff.empty(), buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"orthonormality", orthonormality},
      {"diagonal kernel", diagonal_series},
      {"closed-form kernel", closed_form},
      {"Bergman specializations", bergman},
      {"quantization closed forms", quantization_closed_forms},
      {"commutators", commutators},
      {"resolution of identity", resolution},
      {"Berezin consistency", berezin},
      {"ladder structure", ladders},
      {"series identities", series_identities},
      {"SU(1,1) reference", su11},
      {"CLI verify all", cli},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
