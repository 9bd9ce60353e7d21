#include "zdisc/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zdisc/kernels.hpp"

namespace zdisc {

namespace {

void check_basis(int n, double alpha, int M, const char* where) {
  validate({0, n, alpha});
  if (M < 1) fail(ErrorCode::invalid_argument, std::string(where) + ": cutoff M must be >= 1");
}

// Rows are nodes, columns are p_m / weight for m < M.
Eigen::MatrixXcd basis_table(int n, double alpha, int M, const DiscQuadratureRule& rule) {
  ZernikeFamily family(n, alpha, M);
  Eigen::MatrixXcd phi(static_cast<Eigen::Index>(rule.size()), M);
  std::vector<cplx> row(static_cast<size_t>(M));
  for (size_t q = 0; q < rule.size(); ++q) {
    family.evaluate_all(rule.nodes[q], row);
    for (int m = 0; m < M; ++m) phi(static_cast<Eigen::Index>(q), m) = row[static_cast<size_t>(m)] * family.inv_sqrt_norm(m);
  }
  return phi;
}

cplx eval_at_node(const ObservableExpr& f, cplx w) {
  try {
    return f.evaluate(w);
  } catch (const Error& e) {
    std::ostringstream os;
    os << e.what() << " (quadrature node " << w << ")";
    throw Error(e.code(), os.str());
  }
}

Eigen::MatrixXcd quadrature_matrix(const ObservableExpr& f, int n, double alpha, int M, const DiscQuadratureRule& rule) {
  if (rule.alpha != alpha) fail(ErrorCode::invalid_argument, "quantize_observable: rule weight differs from alpha");
  const Eigen::MatrixXcd phi = basis_table(n, alpha, M, rule);
  Eigen::VectorXcd wf(static_cast<Eigen::Index>(rule.size()));
  for (size_t q = 0; q < rule.size(); ++q) wf(static_cast<Eigen::Index>(q)) = rule.weights[q] * eval_at_node(f, rule.nodes[q]);
  return phi.transpose() * (wf.asDiagonal() * phi.conjugate());
}

OperatorMatrix blank(int n, double alpha, int M, Provenance prov) {
  OperatorMatrix out;
  out.entries = Eigen::MatrixXcd::Zero(M, M);
  out.n = n;
  out.alpha = alpha;
  out.M = M;
  out.provenance = prov;
  return out;
}

void require_disc(cplx z, const char* where) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << where << ": |z| must be < 1 (z = " << z << ")";
    fail(ErrorCode::domain, os.str());
  }
}

template <class Integrand>
BerezinValue saturated(const Integrand& integrand, const DiscQuadratureRule& rule) {
  auto run = [&](const DiscQuadratureRule& r) {
    std::vector<cplx> terms(r.size());
    for (size_t q = 0; q < r.size(); ++q) terms[q] = r.weights[q] * integrand(r.nodes[q]);
    return pairwise_sum(terms);
  };
  const cplx coarse = run(rule);
  const cplx fine = run(refined(rule));
  BerezinValue out;
  out.value = fine;
  out.accuracy_estimate = std::abs(fine - coarse);
  out.accuracy_warning = out.accuracy_estimate > kSaturationTolerance * std::max(1.0, std::abs(fine));
  return out;
}

}  // namespace

const char* to_string(Provenance p) { return p == Provenance::quadrature ? "quadrature" : "closed_form"; }

double ladder_coefficient(int m, int n, double alpha) {
  return std::sqrt((m + 1.0) * (m + alpha + 1.0) / ((m + n + alpha + 2.0) * (m + n + alpha + 1.0)));
}

OperatorMatrix quantize_observable(const ObservableExpr& f, int n, double alpha, int M,
                                   const std::optional<DiscQuadratureRule>& rule) {
  check_basis(n, alpha, M, "quantize_observable");
  OperatorMatrix out = blank(n, alpha, M, Provenance::quadrature);
  const int base_degree = 2 * (M - 1 + n);
  if (f.is_polynomial()) {
    const auto& poly = *f.polynomial();
    const int degree = base_degree + std::max(poly.total_degree(), 0);
    const int frequency = (M - 1) + std::max(poly.max_frequency(), 0);
    const DiscQuadratureRule r = rule ? *rule : disc_rule_for_degree(degree, alpha, frequency);
    if (!r.exact_for(degree, frequency)) {
      std::ostringstream os;
      os << "quadrature rule (n_rad=" << r.n_rad << ", n_ang=" << r.n_ang << ") is not exact for degree " << degree;
      out.warnings.push_back(os.str());
    }
    out.entries = quadrature_matrix(f, n, alpha, M, r);
    return out;
  }
  const DiscQuadratureRule r = rule ? *rule : disc_rule_for_degree(base_degree + 40, alpha);
  const Eigen::MatrixXcd coarse = quadrature_matrix(f, n, alpha, M, r);
  out.entries = quadrature_matrix(f, n, alpha, M, refined(r));
  out.accuracy_estimate = (out.entries - coarse).cwiseAbs().maxCoeff();
  if (out.accuracy_estimate > kSaturationTolerance) {
    std::ostringstream os;
    os << "non-polynomial observable: doubling the rule changed entries by " << out.accuracy_estimate;
    out.warnings.push_back(os.str());
  }
  return out;
}

LadderPair ladder_matrices(int n, double alpha, int M) {
  check_basis(n, alpha, M, "ladder_matrices");
  if (M < 2) fail(ErrorCode::invalid_argument, "ladder_matrices: cutoff M must be >= 2");
  LadderPair out{blank(n, alpha, M, Provenance::closed_form), blank(n, alpha, M, Provenance::closed_form)};
  for (int m = 0; m + 1 < M; ++m) {
    const double c = ladder_coefficient(m, n, alpha);
    out.az.entries(m, m + 1) = c;
    out.azbar.entries(m + 1, m) = c;
  }
  return out;
}

namespace {

void check_same_basis(const OperatorMatrix& a, const OperatorMatrix& b, const char* where) {
  if (a.n != b.n || a.alpha != b.alpha || a.M != b.M) {
    std::ostringstream os;
    os << where << ": basis mismatch (n=" << a.n << ", alpha=" << a.alpha << ", M=" << a.M << ") vs (n=" << b.n
       << ", alpha=" << b.alpha << ", M=" << b.M << ")";
    fail(ErrorCode::metadata_mismatch, os.str());
  }
}

Provenance combined(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.provenance == Provenance::closed_form && b.provenance == Provenance::closed_form ? Provenance::closed_form
                                                                                              : Provenance::quadrature;
}

}  // namespace

OperatorMatrix product(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_basis(a, b, "product");
  OperatorMatrix out = blank(a.n, a.alpha, a.M, combined(a, b));
  out.entries = a.entries * b.entries;
  return out;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  check_same_basis(a, b, "commutator");
  OperatorMatrix out = blank(a.n, a.alpha, a.M, combined(a, b));
  out.entries = a.entries * b.entries - b.entries * a.entries;
  return out;
}

PhaseSpaceOperators position_momentum_hamiltonian(int n, double alpha, int M) {
  const auto [az, azb] = ladder_matrices(n, alpha, M);
  PhaseSpaceOperators out{blank(n, alpha, M, Provenance::closed_form), blank(n, alpha, M, Provenance::closed_form),
                          blank(n, alpha, M, Provenance::closed_form)};
  const double r2 = std::sqrt(2.0);
  out.q.entries = (az.entries + azb.entries) / r2;
  out.p.entries = (az.entries - azb.entries) / cplx(0.0, r2);
  out.h.entries = (az.entries * azb.entries + azb.entries * az.entries) / 2.0;
  return out;
}

LowerSymbol lower_symbol(const OperatorMatrix& a, cplx z) {
  require_disc(z, "lower_symbol");
  const auto cs = cs_vector_truncated(z, a.n, a.alpha, a.M);
  const Eigen::Map<const Eigen::VectorXcd> c(cs.coefficients.data(), a.M);
  LowerSymbol out;
  out.value = c.dot(a.entries * c);  // Eigen's dot conjugates the left argument
  out.tail_mass = cs.tail_mass;
  out.tail_warning = cs.tail_mass > kLowerSymbolTail;
  return out;
}

DiscQuadratureRule berezin_rule(double alpha) { return disc_rule(40, 96, alpha); }

BerezinValue berezin_transform(const ObservableExpr& f, cplx z, int n, double alpha,
                               const std::optional<DiscQuadratureRule>& rule) {
  validate({0, n, alpha});
  require_disc(z, "berezin_transform");
  const DiscQuadratureRule r = rule ? *rule : berezin_rule(alpha);
  if (r.alpha != alpha) fail(ErrorCode::invalid_argument, "berezin_transform: rule weight differs from alpha");
  const double pref = M_PI * std::pow(1.0 - std::norm(z), alpha + 2.0) / (2.0 * n + alpha + 1.0);
  auto integrand = [&](cplx w) { return pref * std::norm(evaluate_kernel(n, alpha, w, z).value) * eval_at_node(f, w); };
  return saturated(integrand, r);
}

BerezinValue berezin_bergman(const ObservableExpr& f, cplx z, double alpha, const std::optional<DiscQuadratureRule>& rule) {
  validate({0, 0, alpha});
  require_disc(z, "berezin_bergman");
  const DiscQuadratureRule r = rule ? *rule : berezin_rule(alpha);
  if (r.alpha != alpha) fail(ErrorCode::invalid_argument, "berezin_bergman: rule weight differs from alpha");
  const double pref = (alpha + 1.0) / M_PI * std::pow(1.0 - std::norm(z), alpha + 2.0);
  auto integrand = [&](cplx w) {
    return pref / std::pow(std::abs(1.0 - w * std::conj(z)), 4.0 + 2.0 * alpha) * eval_at_node(f, w);
  };
  return saturated(integrand, r);
}

BerezinValue berezin_standard(const ObservableExpr& f, cplx z, const std::optional<DiscQuadratureRule>& rule) {
  require_disc(z, "berezin_standard");
  const DiscQuadratureRule r = rule ? *rule : berezin_rule(0.0);
  if (r.alpha != 0.0) fail(ErrorCode::invalid_argument, "berezin_standard: needs the unweighted rule");
  const double pref = std::pow(1.0 - std::norm(z), 2.0) / M_PI;
  auto integrand = [&](cplx w) { return pref * eval_at_node(f, w) / std::pow(std::norm(1.0 - std::conj(z) * w), 2.0); };
  return saturated(integrand, r);
}

DiffopReport diffop_upper_symbol_check(int m, int n, double alpha, const std::vector<cplx>& points) {
  validate({m, n, alpha});
  for (cplx z : points) require_disc(z, "diffop_upper_symbol_check");
  const double a = alpha;
  const auto p = normalized_basis({m, n, a});
  const auto s = one_minus_zzbar();
  const double denom = m + n + 1.0 + a;
  const WeightedPolynomial az_image{
      (p.poly.shifted(0, 1, double(m)) + s * wirtinger_derivative(p.poly, Wirtinger::z)) * cplx(1.0 / denom), a};
  const WeightedPolynomial azbar_image{
      (p.poly.shifted(1, 0, m + 1.0 + a) - s * wirtinger_derivative(p.poly, Wirtinger::zbar)) * cplx(1.0 / denom), a};
  const WeightedPolynomial lower = m > 0 ? normalized_basis({m - 1, n, a}) : WeightedPolynomial{{}, a};
  const WeightedPolynomial upper = normalized_basis({m + 1, n, a});
  const double c_down = m > 0 ? ladder_coefficient(m - 1, n, a) : 0.0;
  const double c_up = ladder_coefficient(m, n, a);

  DiffopReport r;
  r.frozen_applicable = m + n + a > 0.0;
  const double frozen_scale =
      r.frozen_applicable ? (m + n + a + 1.0) * std::sqrt((m + n + a) * (m + n + a + 2.0)) : 1.0;
  r.frozen_eigenvalue = r.frozen_applicable ? 2.0 * (m + (1.0 + a) / 2.0) / frozen_scale : 0.0;
  r.matrix_commutator = c_up * c_up - c_down * c_down;

  auto rel = [](cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); };
  for (cplx z : points) {
    const cplx down = c_down * lower(z);
    const cplx up = c_up * upper(z);
    r.az_form = std::max(r.az_form, rel(az_image(z), down));
    r.azbar_form = std::max(r.azbar_form, rel(azbar_image(z), up));
    const cplx km = m > 0 ? k_minus(m, n, p)(z) / std::sqrt((m + n + a + 1.0) * (m + n + a)) : cplx(0.0);
    r.k_minus_form = std::max(r.k_minus_form, rel(km, down));
    const cplx kp = k_plus(m, n, p)(z) / std::sqrt((m + n + a + 1.0) * (m + n + a + 2.0));
    r.k_plus_form = std::max(r.k_plus_form, rel(kp, up));
    if (r.frozen_applicable) {
      const auto pair = k_commutator_pointwise({m, n, a}, z);
      r.frozen_commutator = std::max(r.frozen_commutator, rel(pair.lhs / frozen_scale, pair.rhs / frozen_scale));
    }
  }
  return r;
}

AdjointElements ladder_adjoint_elements(int m, int n, double alpha) {
  if (m < 1) fail(ErrorCode::invalid_argument, "ladder_adjoint_elements: needs m >= 1");
  validate({m, n, alpha});
  const auto pm = normalized_basis({m, n, alpha});
  const auto pm1 = normalized_basis({m - 1, n, alpha});
  const auto down = k_minus(m, n, pm);
  const auto up = k_plus(m - 1, n, pm1);
  const auto rule = disc_rule_for_degree(2 * (m + n) + 2, alpha, 4);
  // the weights (1-s)^{alpha/2} of both factors make up the measure
  std::vector<cplx> lo(rule.size()), hi(rule.size());
  for (size_t q = 0; q < rule.size(); ++q) {
    const cplx w = rule.nodes[q];
    lo[q] = rule.weights[q] * std::conj(pm1.poly(w)) * down.poly(w);
    hi[q] = rule.weights[q] * std::conj(pm.poly(w)) * up.poly(w);
  }
  return {pairwise_sum(lo), std::conj(pairwise_sum(hi)), std::sqrt(m * (m + alpha))};
}

}  // namespace zdisc
