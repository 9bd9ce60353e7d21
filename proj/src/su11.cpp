#include "zdisc/su11.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zdisc/quantization.hpp"

namespace zdisc {

namespace {

using Coeffs = std::vector<double>;  // c[k] z^k

void require_disc(cplx z, const char* where) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << where << ": |z| must be < 1 (z = " << z << ")";
    fail(ErrorCode::domain, os.str());
  }
}

Coeffs basis_poly(int n, double eta) {
  Coeffs c(static_cast<size_t>(n) + 1, 0.0);
  c[static_cast<size_t>(n)] = su11_basis_coefficient(n, eta);
  return c;
}

Coeffs d_dz(const Coeffs& p) {
  if (p.size() <= 1) return {0.0};
  Coeffs out(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) out[k - 1] = static_cast<double>(k) * p[k];
  return out;
}

Coeffs apply_k_plus(const Coeffs& p, double eta) {
  Coeffs out(p.size() + 1, 0.0);
  const Coeffs d = d_dz(p);
  for (size_t k = 0; k < d.size(); ++k) out[k + 2] += d[k];
  for (size_t k = 0; k < p.size(); ++k) out[k + 1] += 2.0 * eta * p[k];
  return out;
}

Coeffs scaled(Coeffs p, double s) {
  for (double& c : p) c *= s;
  return p;
}

double residual(const Coeffs& a, const Coeffs& b) {
  const size_t len = std::max(a.size(), b.size());
  double diff = 0.0, scale = 1.0;
  for (size_t k = 0; k < len; ++k) {
    const double x = k < a.size() ? a[k] : 0.0;
    const double y = k < b.size() ? b[k] : 0.0;
    diff = std::max(diff, std::abs(x - y));
    scale = std::max(scale, std::abs(y));
  }
  return diff / scale;
}

cplx evaluate(const Coeffs& p, cplx z) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

void validate_eta(double eta) {
  if (!(eta > 0.5)) {
    std::ostringstream os;
    os << "eta must be > 1/2 (got " << eta << ")";
    fail(ErrorCode::invalid_argument, os.str());
  }
}

double su11_basis_coefficient(int n, double eta) {
  validate_eta(eta);
  if (n < 0) fail(ErrorCode::invalid_argument, "su11_basis_coefficient: negative index");
  double c2 = 1.0;
  for (int k = 0; k < n; ++k) c2 *= (2.0 * eta + k) / (k + 1.0);
  return std::sqrt(c2);
}

cplx su11_kernel(cplx z, cplx w, double eta) {
  validate_eta(eta);
  require_disc(z, "su11_kernel");
  require_disc(w, "su11_kernel");
  return std::pow(1.0 - std::norm(z), eta) * std::pow(1.0 - std::conj(w) * z, -2.0 * eta) *
         std::pow(1.0 - std::norm(w), eta);
}

std::vector<double> su11_partial_sums(cplx z, double eta, int count) {
  validate_eta(eta);
  require_disc(z, "su11_partial_sums");
  const double r2 = std::norm(z);
  std::vector<double> out;
  out.reserve(static_cast<size_t>(std::max(count, 0)));
  double term = std::pow(1.0 - r2, 2.0 * eta), sum = 0.0;
  for (int k = 0; k < count; ++k) {
    sum += term;
    out.push_back(sum);
    term *= (2.0 * eta + k) / (k + 1.0) * r2;
  }
  return out;
}

int su11_cutoff(cplx z, double eta, double epsilon, int max_terms) {
  validate_eta(eta);
  require_disc(z, "su11_cutoff");
  const double r2 = std::norm(z);
  // 1 - S_M = tail of the binomial series; track it directly to avoid cancellation
  double term = std::pow(1.0 - r2, 2.0 * eta), sum = 0.0;
  for (int k = 0; k < max_terms; ++k) {
    sum += term;
    // tail beyond k, bounded by the next term over (1 - ratio) once the ratio is below 1
    const double next = term * (2.0 * eta + k) / (k + 1.0) * r2;
    const double ratio = (2.0 * eta + k + 1.0) / (k + 2.0) * r2;
    if (ratio < 1.0 && next / (1.0 - ratio) <= epsilon) return k + 1;
    term = next;
  }
  std::ostringstream os;
  os << "su11_cutoff: more than " << max_terms << " terms needed at |z| = " << std::abs(z);
  fail(ErrorCode::cutoff, os.str());
}

Su11Ladders su11_ladder_matrices(double eta, int M) {
  validate_eta(eta);
  if (M < 2) fail(ErrorCode::invalid_argument, "su11_ladder_matrices: M must be >= 2");
  Su11Ladders l{Eigen::MatrixXd::Zero(M, M), Eigen::MatrixXd::Zero(M, M), Eigen::MatrixXd::Zero(M, M)};
  for (int k = 0; k < M; ++k) {
    l.k0(k, k) = eta + k;
    if (k + 1 < M) {
      l.k_plus(k + 1, k) = std::sqrt((k + 1.0) * (2.0 * eta + k));
      l.k_minus(k, k + 1) = std::sqrt((k + 1.0) * (2.0 * eta + k));
    }
  }
  return l;
}

Eigen::MatrixXd su11_commutator(const Su11Ladders& l) { return l.k_plus * l.k_minus - l.k_minus * l.k_plus; }

Su11DiffopResidual su11_diffop_check(int n, double eta, cplx z) {
  validate_eta(eta);
  require_disc(z, "su11_diffop_check");
  if (n < 0) fail(ErrorCode::invalid_argument, "su11_diffop_check: negative index");
  const Coeffs p = basis_poly(n, eta);
  Su11DiffopResidual r;

  const Coeffs up = apply_k_plus(p, eta);
  const Coeffs up_expected = scaled(basis_poly(n + 1, eta), std::sqrt((n + 1.0) * (2.0 * eta + n)));
  r.k_plus = residual(up, up_expected);

  const Coeffs down = d_dz(p);
  const Coeffs down_expected = n == 0 ? Coeffs{0.0} : scaled(basis_poly(n - 1, eta), std::sqrt(n * (2.0 * eta + n - 1.0)));
  r.k_minus = residual(down, down_expected);

  Coeffs rebuilt = basis_poly(0, eta);
  double gamma_ratio = 1.0;  // Gamma(2eta+n)/Gamma(2eta) = (2eta)_n
  double fact = 1.0;
  for (int k = 0; k < n; ++k) {
    rebuilt = apply_k_plus(rebuilt, eta);
    gamma_ratio *= 2.0 * eta + k;
    fact *= k + 1.0;
  }
  rebuilt = scaled(rebuilt, 1.0 / std::sqrt(gamma_ratio * fact));
  r.reconstruction = residual(rebuilt, p);

  auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  r.pointwise = std::max({rel(evaluate(up, z), evaluate(up_expected, z)), rel(evaluate(down, z), evaluate(down_expected, z)),
                          rel(evaluate(rebuilt, z), evaluate(p, z))});
  return r;
}

Su11Comparison compare_with_zernike(int n, double alpha, double eta, int M) {
  if (M < 4) fail(ErrorCode::invalid_argument, "compare_with_zernike: M must be >= 4");
  Su11Comparison c;
  c.n = n;
  c.alpha = alpha;
  c.eta = eta;
  const auto [az, azb] = ladder_matrices(n, alpha, M);
  const auto zc = commutator(az, azb);
  const Eigen::MatrixXd sc = su11_commutator(su11_ladder_matrices(eta, M));
  for (int m = 0; m + 1 < M; ++m) {
    c.zernike_diagonal.push_back(zc.entries(m, m).real());
    c.su11_diagonal.push_back(sc(m, m));
  }
  const size_t last = c.zernike_diagonal.size() - 1;

  double peak = 0.0;
  for (double d : c.zernike_diagonal) peak = std::max(peak, std::abs(d));
  c.zernike_bounded_decaying = peak <= 1.0 && std::abs(c.zernike_diagonal[last]) < 0.5 * peak;

  c.su11_slope = (c.su11_diagonal[last] - c.su11_diagonal[0]) / static_cast<double>(last);
  double dev = 0.0;
  for (size_t k = 0; k <= last; ++k)
    dev = std::max(dev, std::abs(c.su11_diagonal[k] - (c.su11_diagonal[0] + c.su11_slope * static_cast<double>(k))));
  c.su11_linear = dev <= 1e-10 * std::max(1.0, std::abs(c.su11_diagonal[last])) && std::abs(c.su11_slope) > 0.5;

  c.not_related_by_parameters = c.zernike_bounded_decaying && c.su11_linear;
  return c;
}

}  // namespace zdisc
