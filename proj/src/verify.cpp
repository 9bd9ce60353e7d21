#include "zdisc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "zdisc/coherent_states.hpp"
#include "zdisc/kernels.hpp"
#include "zdisc/quantization.hpp"
#include "zdisc/special_functions.hpp"
#include "zdisc/su11.hpp"

namespace zdisc {

using nlohmann::json;

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string id, json params, double residual, double threshold) {
  checks.push_back({std::move(id), std::move(params), residual, threshold, std::isfinite(residual) && residual <= threshold});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  environment[other.suite] = other.environment;
}

json Report::to_json() const {
  json out;
  out["schema"] = kReportSchema;
  out["suite"] = suite;
  out["pass"] = pass();
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"id", c.id}, {"params", c.params}, {"residual", c.residual}, {"threshold", c.threshold}, {"pass", c.pass}});
  out["checks"] = std::move(list);
  out["environment"] = environment;
  return out;
}

namespace {

using Rng = std::mt19937_64;

cplx random_point(Rng& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> r(rmin, rmax), t(0.0, 2.0 * M_PI);
  return std::polar(r(rng), t(rng));
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

Report polynomials(const VerifyOptions& o) {
  Report r;
  r.suite = "polynomials";
  const double a = o.alpha;
  const int top = o.max_m;
  Rng rng(o.seed);

  double lower = 0.0, raise = 0.0, recur = 0.0, parity = 0.0, conj_sym = 0.0;
  for (int m = 0; m <= top; ++m) {
    for (int n = 0; n <= top; ++n) {
      const ZernikeIndex idx{m, n, a};
      lower = std::max(lower, lowering_residual(idx));
      raise = std::max(raise, raising_residual(idx));
      if (n >= 1) recur = std::max(recur, check_recurrence(idx));
      const auto p = build_zernike(idx);
      const auto q = build_zernike({n, m, a});
      conj_sym = std::max(conj_sym, max_abs_difference(q, p.conjugate()) / std::max(1.0, p.max_abs_coefficient()));
      for (const auto& [key, c] : p.terms())
        if ((key.first + key.second - m - n) % 2 != 0) parity = std::max(parity, std::abs(c));
    }
  }
  const json grid = {{"alpha", a}, {"max_m", top}, {"max_n", top}};
  r.add("poly.lowering", grid, lower, 1e-12);
  r.add("poly.raising", grid, raise, 1e-12);
  r.add("poly.recurrence", grid, recur, 1e-12);
  r.add("poly.parity", grid, parity, 0.0);
  r.add("poly.conjugation", grid, conj_sym, 1e-15);

  const int path_top = std::min(top, 20);
  double paths = 0.0;
  for (int s = 0; s < 40; ++s) {
    const cplx z = random_point(rng, 1e-3, 0.95);
    for (int m = 0; m <= path_top; ++m)
      for (int n = 0; n <= path_top; ++n) {
        const ZernikeIndex idx{m, n, a};
        const cplx j = eval_zernike(idx, z, EvalPath::j_sum);
        const cplx k = eval_zernike(idx, z, EvalPath::k_sum);
        const cplx h = eval_zernike(idx, z, EvalPath::hypergeometric);
        const double scale = std::max({std::abs(j), zernike_term_scale(idx, z), 1e-300});
        paths = std::max({paths, std::abs(j - k) / scale, std::abs(j - h) / scale});
      }
  }
  r.add("poly.path_agreement", {{"alpha", a}, {"max_m", path_top}, {"points", 40}}, paths, 1e-10);

  double ladder = 0.0, comm = 0.0;
  for (int s = 0; s < 5; ++s) {
    const cplx z = random_point(rng, 0.0, 0.9);
    for (int m = 0; m <= std::min(top, 12); ++m)
      for (int n = 0; n <= 4; ++n) {
        const ZernikeIndex idx{m, n, a};
        for (auto dir : {LadderDirection::lower, LadderDirection::raise}) {
          const auto pp = k_ladder_pointwise(idx, z, dir);
          ladder = std::max(ladder, std::abs(pp.lhs - pp.rhs) / std::max(1.0, pp.scale));
        }
        const auto pc = k_commutator_pointwise(idx, z);
        comm = std::max(comm, std::abs(pc.lhs - pc.rhs) / std::max(1.0, pc.scale));
      }
  }
  r.add("poly.k_ladder", {{"alpha", a}, {"max_m", std::min(top, 12)}, {"max_n", 4}}, ladder, 1e-11);
  r.add("poly.k_commutator", {{"alpha", a}, {"max_m", std::min(top, 12)}, {"max_n", 4}}, comm, 1e-11);

  double series = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      SeriesIdentityParams p;
      p.alpha = a;
      p.n = n;
      p.k = k;
      for (const auto& id : verify_series_identities(p)) series = std::max(series, id.residual);
    }
  r.add("special.series_identities", {{"alpha", a}, {"max_n", 4}, {"max_k", 4}, {"terms", 400}}, series, 1e-10);
  r.environment = {{"path_points", 40}};
  return r;
}

Report kernels(const VerifyOptions& o) {
  Report r;
  r.suite = "kernels";
  const double a = o.alpha;
  Rng rng(o.seed + 1);

  double diag = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (int s = 0; s < 10; ++s) {
      const cplx z = random_point(rng, 0.0, 0.6);
      diag = std::max(diag, rel(kernel_series(n, a, z, z, 400).value, kernel_diagonal(n, a, z)));
    }
  r.add("kernel.diagonal_series", {{"alpha", a}, {"max_n", 5}, {"max_abs_z", 0.6}, {"terms", 400}}, diag, 1e-10);

  double closed = 0.0, herm = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (int s = 0; s < 20; ++s) {
      const cplx z = random_point(rng, 0.05, 0.7), w = random_point(rng, 0.05, 0.7);
      const cplx c = kernel_closed(n, a, z, w).value;
      closed = std::max(closed, rel(c, kernel_series(n, a, z, w, 400).value));
      herm = std::max(herm, rel(c, std::conj(kernel_closed(n, a, w, z).value)));
    }
  r.add("kernel.closed_vs_series", {{"alpha", a}, {"max_n", 5}, {"pairs_per_n", 20}}, closed, 1e-8);
  r.add("kernel.hermitian", {{"alpha", a}, {"max_n", 5}}, herm, 1e-10);

  double bergman = 0.0;
  for (int s = 0; s < 50; ++s) {
    const cplx z = random_point(rng, 0.0, 0.9), w = random_point(rng, 0.0, 0.9);
    const cplx expected = (a + 1.0) / (M_PI * std::pow(1.0 - z * std::conj(w), a + 2.0));
    bergman = std::max(bergman, rel(evaluate_kernel(0, a, z, w).value, expected));
  }
  r.add("kernel.bergman", {{"alpha", a}, {"pairs", 50}}, bergman, 1e-12);

  // first-order approach to the diagonal: halving delta halves the error
  double order = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const cplx z = random_point(rng, 0.3, 0.6);
    const double d0 = kernel_diagonal(n, a, z);
    const double e1 = std::abs(kernel_closed(n, a, z, z * (1.0 + 1e-3)).value - d0);
    const double e2 = std::abs(kernel_closed(n, a, z, z * (1.0 + 5e-4)).value - d0);
    order = std::max(order, std::abs(e1 / e2 - 2.0));
  }
  r.add("kernel.diagonal_limit_order", {{"alpha", a}, {"deltas", {1e-3, 5e-4}}}, order, 0.05);

  double psd = 0.0;
  for (int n = 0; n <= 3; ++n) {
    std::vector<cplx> pts;
    for (int s = 0; s < 8; ++s) pts.push_back(random_point(rng, 0.0, 0.8));
    Eigen::MatrixXcd g(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) g(i, j) = cs_overlap(pts[size_t(i)], pts[size_t(j)], n, a);
    g = (g + g.adjoint()).eval() / 2.0;
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(g).eigenvalues().minCoeff();
    psd = std::max(psd, -lmin);
  }
  r.add("kernel.positive_semidefinite", {{"alpha", a}, {"points", 8}, {"max_n", 3}}, psd, 1e-10);

  // projection: integral of E_n(z, wbar) P_{m,n'}(w) d mu(w) = delta_{n n'} P_{m,n}(z)
  const auto rule = disc_rule(40, 96, a);
  double proj = 0.0;
  const cplx z = random_point(rng, 0.1, 0.5);
  for (int n = 0; n <= 2; ++n) {
    std::vector<cplx> kern(rule.size());
    for (size_t q = 0; q < rule.size(); ++q) kern[q] = evaluate_kernel(n, a, z, rule.nodes[q]).value;
    for (int np = 0; np <= 2; ++np)
      for (int m = 0; m <= 3; ++m) {
        std::vector<cplx> terms(rule.size());
        for (size_t q = 0; q < rule.size(); ++q)
          terms[q] = rule.weights[q] * kern[q] * eval_zernike({m, np, a}, rule.nodes[q]);
        const cplx expected = n == np ? eval_zernike({m, n, a}, z) : cplx(0.0);
        proj = std::max(proj, std::abs(pairwise_sum(terms) - expected));
      }
  }
  r.add("kernel.projection", {{"alpha", a}, {"z", cjson(z)}, {"max_n", 2}, {"max_m", 3}}, proj, 1e-9);
  r.environment = {{"series_terms", 400}, {"projection_rule", {{"n_rad", rule.n_rad}, {"n_ang", rule.n_ang}}}};
  return r;
}

Report quadrature(const VerifyOptions& o) {
  Report r;
  r.suite = "quadrature";
  const double a = o.alpha;
  Rng rng(o.seed + 2);

  const auto unit = disc_rule(4, 8, a);
  const double area = integrate([](cplx) { return cplx(1.0); }, unit).real();
  r.add("quad.measure", {{"alpha", a}}, std::abs(area - M_PI / (a + 1.0)) / (M_PI / (a + 1.0)), 1e-12);

  // monomial moments: integral of z^p zbar^q = delta_{pq} pi B(p+1, alpha+1); vanishing
  // moments are measured against the moment of |z|^{p+q}
  const auto mono = disc_rule(8, 32, a);
  auto radial_moment = [&](double s) { return M_PI * std::exp(log_gamma(s + 1.0) + log_gamma(a + 1.0) - log_gamma(s + a + 2.0)); };
  double moments = 0.0;
  for (int p = 0; p <= 7; ++p)
    for (int q = 0; q <= 7; ++q) {
      const cplx v = integrate([&](cplx z) { return std::pow(z, p) * std::pow(std::conj(z), q); }, mono);
      const double exact = p == q ? radial_moment(p) : 0.0;
      moments = std::max(moments, std::abs(v - exact) / radial_moment((p + q) / 2.0));
    }
  r.add("quad.monomial_moments", {{"alpha", a}, {"max_degree", 14}}, moments, 1e-13);

  const int top = std::min(o.max_m, 12);
  std::vector<std::pair<int, int>> idx;
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= 4; ++n) idx.emplace_back(m, n);
  const int deg = 2 * (top + 4);
  const auto gram_rule = disc_rule_for_degree(deg, a, top + 4);
  const auto g = gram_matrix(idx, a, gram_rule);
  r.add("quad.gram", {{"alpha", a}, {"max_m", top}, {"max_n", 4}}, g.exact ? g.max_deviation : INFINITY, 1e-10);

  double res = 0.0;
  for (int n : {0, 2})
    for (int M : {1, 6, 12}) {
      const auto rule = disc_rule_for_degree(2 * (M - 1 + n), a, M - 1);
      const auto rc = resolution_check(n, a, M, rule);
      res = std::max(res, rc.exact ? rc.max_deviation : INFINITY);
    }
  r.add("cs.resolution_of_identity", {{"alpha", a}, {"n", {0, 2}}, {"M", {1, 6, 12}}}, res, 1e-10);

  double norm = 0.0, herm = 0.0, overlap = 0.0;
  for (int n = 0; n <= 2; ++n)
    for (int s = 0; s < 10; ++s) {
      const cplx z = random_point(rng, 0.0, 0.7), w = random_point(rng, 0.0, 0.7);
      norm = std::max(norm, std::abs(cs_overlap(z, z, n, a) - 1.0));
      herm = std::max(herm, std::abs(cs_overlap(z, w, n, a) - std::conj(cs_overlap(w, z, n, a))));
      // common cutoff: each state's tail is certified at its own cutoff only
      const int M = std::max(cs_vector(z, n, a).cutoff(), cs_vector(w, n, a).cutoff());
      const auto cz = cs_vector_truncated(z, n, a, M), cw = cs_vector_truncated(w, n, a, M);
      overlap = std::max(overlap, std::abs(cs_overlap(z, w, n, a) - cs_overlap_series(cz, cw)));
    }
  r.add("cs.normalized", {{"alpha", a}, {"max_n", 2}}, norm, 1e-10);
  r.add("cs.overlap_hermitian", {{"alpha", a}, {"max_n", 2}}, herm, 1e-10);
  r.add("cs.overlap_closed_vs_vector", {{"alpha", a}, {"max_n", 2}}, overlap, 1e-9);
  r.environment = {{"gram_rule", {{"n_rad", gram_rule.n_rad}, {"n_ang", gram_rule.n_ang}}}};
  return r;
}

Report quantization(const VerifyOptions& o) {
  Report r;
  r.suite = "quantization";
  const double a = o.alpha;
  Rng rng(o.seed + 3);
  const int M = 12;

  double ident = 0.0, az = 0.0, azb = 0.0, herm = 0.0;
  const auto one = ObservableExpr::parse("1");
  const auto fz = ObservableExpr::parse("z");
  const auto fzb = ObservableExpr::parse("zbar");
  const auto freal = ObservableExpr::parse("z*zbar + (z + zbar)/2 - 0.5*r2^2");
  for (int n = 0; n <= 3; ++n) {
    const auto I = quantize_observable(one, n, a, M);
    ident = std::max(ident, (I.entries - Eigen::MatrixXcd::Identity(M, M)).cwiseAbs().maxCoeff());
    const auto lad = ladder_matrices(n, a, M);
    az = std::max(az, (quantize_observable(fz, n, a, M).entries - lad.az.entries).cwiseAbs().maxCoeff());
    azb = std::max(azb, (quantize_observable(fzb, n, a, M).entries - lad.azbar.entries).cwiseAbs().maxCoeff());
    const auto h = quantize_observable(freal, n, a, M);
    herm = std::max(herm, (h.entries - h.entries.adjoint()).cwiseAbs().maxCoeff());
  }
  r.add("quant.identity", {{"alpha", a}, {"max_n", 3}, {"M", M}}, ident, 1e-12);
  r.add("quant.az_closed_form", {{"alpha", a}, {"max_n", 3}, {"M", M}}, az, 1e-11);
  r.add("quant.azbar_closed_form", {{"alpha", a}, {"max_n", 3}, {"M", M}}, azb, 1e-11);
  r.add("quant.hermitian_real_observable", {{"alpha", a}, {"max_n", 3}, {"M", M}}, herm, 1e-10);

  // commutator diagonal: C^2(m) - C^2(m-1), and 1/((m+1)(m+2)) at n = 0, alpha = 0
  double diag = 0.0, bergman_diag = 0.0, qp = 0.0, ham = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const auto lad = ladder_matrices(n, a, M);
    const auto c = commutator(lad.az, lad.azbar);
    for (int m = 0; m + 1 < M; ++m) {
      const double cm = ladder_coefficient(m, n, a);
      const double cp = m > 0 ? ladder_coefficient(m - 1, n, a) : 0.0;
      diag = std::max(diag, std::abs(c.entries(m, m) - (cm * cm - cp * cp)));
    }
    const auto ops = position_momentum_hamiltonian(n, a, M);
    const auto qpc = commutator(ops.q, ops.p);
    const Eigen::MatrixXcd lhs = qpc.entries.topLeftCorner(M - 1, M - 1);
    const Eigen::MatrixXcd rhs = (cplx(0.0, 1.0) * c.entries).topLeftCorner(M - 1, M - 1);
    qp = std::max(qp, (lhs - rhs).cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd h2 = (ops.q.entries * ops.q.entries + ops.p.entries * ops.p.entries) / 2.0;
    ham = std::max(ham, (ops.h.entries - h2).topLeftCorner(M - 1, M - 1).cwiseAbs().maxCoeff());
  }
  {
    const auto lad = ladder_matrices(0, 0.0, M);
    const auto c = commutator(lad.az, lad.azbar);
    for (int m = 0; m + 1 < M; ++m) bergman_diag = std::max(bergman_diag, std::abs(c.entries(m, m) - 1.0 / ((m + 1.0) * (m + 2.0))));
  }
  r.add("quant.commutator_diagonal", {{"alpha", a}, {"max_n", 3}, {"M", M}}, diag, 1e-12);
  r.add("quant.commutator_unweighted", {{"alpha", 0.0}, {"n", 0}, {"M", M}}, bergman_diag, 1e-12);
  r.add("quant.qp_commutator", {{"alpha", a}, {"max_n", 3}, {"M", M}}, qp, 1e-12);
  r.add("quant.hamiltonian", {{"alpha", a}, {"max_n", 3}, {"M", M}}, ham, 1e-12);

  // Berezin transform against the lower symbol of A_f
  const int Mls = 60;
  double berezin = 0.0, unit = 0.0, bergman = 0.0, standard = 0.0;
  const auto f = ObservableExpr::parse("z^2*zbar - 0.5*r2 + zbar^3*z + 1");
  for (int n = 0; n <= 1; ++n) {
    const auto af = quantize_observable(f, n, a, Mls);
    for (int s = 0; s < 3; ++s) {
      const cplx z = random_point(rng, 0.0, 0.6);
      const auto b = berezin_transform(f, z, n, a);
      berezin = std::max(berezin, std::abs(b.value - lower_symbol(af, z).value));
      unit = std::max(unit, std::abs(berezin_transform(one, z, n, a).value - 1.0));
      if (n == 0) {
        bergman = std::max(bergman, std::abs(b.value - berezin_bergman(f, z, a).value));
        if (a == 0.0) standard = std::max(standard, std::abs(b.value - berezin_standard(f, z).value));
      }
    }
  }
  r.add("berezin.lower_symbol", {{"alpha", a}, {"f", f.to_string()}, {"max_n", 1}, {"M", Mls}}, berezin, 1e-7);
  r.add("berezin.constant", {{"alpha", a}, {"max_n", 1}}, unit, 1e-9);
  r.add("berezin.weighted_bergman", {{"alpha", a}, {"n", 0}}, bergman, 1e-8);
  if (a == 0.0) r.add("berezin.standard_disc", {{"alpha", a}, {"n", 0}}, standard, 1e-8);

  double forms = 0.0, frozen = 0.0, adjoint = 0.0;
  std::vector<cplx> pts;
  for (int s = 0; s < 4; ++s) pts.push_back(random_point(rng, 0.0, 0.9));
  for (int m = 0; m <= std::min(o.max_m, 10); ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto d = diffop_upper_symbol_check(m, n, a, pts);
      forms = std::max({forms, d.az_form, d.azbar_form, d.k_minus_form, d.k_plus_form});
      frozen = std::max(frozen, d.frozen_commutator);
      if (m >= 1) {
        const auto e = ladder_adjoint_elements(m, n, a);
        adjoint = std::max({adjoint, std::abs(e.lowering - e.expected), std::abs(e.raising_conj - e.expected)});
      }
    }
  r.add("diffop.upper_symbols", {{"alpha", a}, {"max_m", std::min(o.max_m, 10)}, {"max_n", 3}}, forms, 1e-11);
  r.add("diffop.frozen_commutator", {{"alpha", a}, {"max_m", std::min(o.max_m, 10)}, {"max_n", 3}}, frozen, 1e-11);
  r.add("diffop.adjoint_elements", {{"alpha", a}, {"max_m", std::min(o.max_m, 10)}, {"max_n", 3}}, adjoint, 1e-10);
  const auto br = berezin_rule(a);
  r.environment = {{"berezin_rule", {{"n_rad", br.n_rad}, {"n_ang", br.n_ang}}}, {"lower_symbol_cutoff", Mls}};
  return r;
}

Report su11(const VerifyOptions& o) {
  Report r;
  r.suite = "su11";
  Rng rng(o.seed + 4);
  double diffop = 0.0, kdiag = 0.0, comm = 0.0, sums = 0.0;
  bool monotone = true, structural = true;
  for (double eta : {0.75, 1.0, 2.0}) {
    for (int n = 0; n <= 15; ++n) {
      const auto d = su11_diffop_check(n, eta, random_point(rng, 0.0, 0.9));
      diffop = std::max({diffop, d.k_plus, d.k_minus, d.reconstruction, d.pointwise});
    }
    for (int s = 0; s < 20; ++s) {
      const cplx z = random_point(rng, 0.0, 0.95);
      kdiag = std::max(kdiag, std::abs(su11_kernel(z, z, eta) - 1.0));
    }
    const int M = 16;
    const auto l = su11_ladder_matrices(eta, M);
    const Eigen::MatrixXd c = su11_commutator(l) + 2.0 * l.k0;
    comm = std::max(comm, c.topLeftCorner(M - 1, M - 1).cwiseAbs().maxCoeff());
    const cplx z = random_point(rng, 0.0, 0.7);
    const int cutoff = su11_cutoff(z, eta, 1e-12);
    const auto ps = su11_partial_sums(z, eta, cutoff);
    for (size_t k = 1; k < ps.size(); ++k) monotone = monotone && ps[k] >= ps[k - 1];
    sums = std::max(sums, std::abs(ps.back() - 1.0));
    const auto cmp = compare_with_zernike(0, o.alpha, eta, M);
    structural = structural && cmp.not_related_by_parameters;
  }
  r.add("su11.differential_forms", {{"eta", {0.75, 1.0, 2.0}}, {"max_n", 15}}, diffop, 1e-14);
  r.add("su11.kernel_diagonal", {{"eta", {0.75, 1.0, 2.0}}}, kdiag, 1e-14);
  r.add("su11.commutator", {{"eta", {0.75, 1.0, 2.0}}, {"M", 16}}, comm, 1e-12);
  r.add("su11.basis_partial_sums", {{"eta", {0.75, 1.0, 2.0}}, {"max_abs_z", 0.7}}, monotone ? sums : INFINITY, 1e-10);
  r.add("su11.structural_difference", {{"alpha", o.alpha}, {"n", 0}, {"M", 16}}, structural ? 0.0 : 1.0, 0.0);
  return r;
}

using SuiteFn = Report (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"polynomials", polynomials}, {"kernels", kernels}, {"quadrature", quadrature},
      {"quantization", quantization}, {"su11", su11}};
  return r;
}

json options_json(const VerifyOptions& o) {
  return {{"alpha", o.alpha}, {"max_m", o.max_m}, {"seed", o.seed}, {"threads", o.threads}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

Report run_suite(std::string_view suite, const VerifyOptions& options) {
  validate({0, 0, options.alpha});
  if (options.max_m < 0 || options.max_m > 60) fail(ErrorCode::invalid_argument, "verify: max-m must be in [0, 60]");
  if (suite != "all") {
    for (const auto& [name, fn] : registry()) {
      if (name != suite) continue;
      Report r = fn(options);
      r.environment["options"] = options_json(options);
      return r;
    }
    fail(ErrorCode::invalid_argument, "verify: unknown suite '" + std::string(suite) + "'");
  }
  // suites are independent; results are assembled in registry order
  const auto& reg = registry();
  std::vector<Report> parts(reg.size());
  const size_t workers = static_cast<size_t>(std::clamp(options.threads, 1, static_cast<int>(reg.size())));
  for (size_t start = 0; start < reg.size(); start += workers) {
    std::vector<std::future<Report>> running;
    for (size_t i = start; i < std::min(reg.size(), start + workers); ++i)
      running.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, reg[i].second, options));
    for (size_t i = 0; i < running.size(); ++i) parts[start + i] = running[i].get();
  }
  Report all;
  all.suite = "all";
  for (const auto& p : parts) all.append(p);
  all.environment["options"] = options_json(options);
  return all;
}

std::string compare_reports(const json& expected, const json& actual) {
  for (const char* key : {"schema", "suite", "pass"})
    if (expected.value(key, json()) != actual.value(key, json())) return std::string("field '") + key + "' differs";
  const auto& e = expected.at("checks");
  const auto& a = actual.at("checks");
  if (e.size() != a.size()) return "check count differs: " + std::to_string(e.size()) + " vs " + std::to_string(a.size());
  for (size_t i = 0; i < e.size(); ++i) {
    const std::string id = e[i].at("id").get<std::string>();
    for (const char* key : {"id", "params", "threshold", "pass"})
      if (e[i].at(key) != a[i].at(key)) return "check " + id + ": field '" + key + "' differs";
    if (!(a[i].at("residual").get<double>() <= a[i].at("threshold").get<double>())) return "check " + id + ": residual above threshold";
  }
  return {};
}

}  // namespace zdisc
