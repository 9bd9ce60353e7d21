#include "zdisc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zdisc/special_functions.hpp"

namespace zdisc {

namespace {

// (alpha+1)_m / m!
double rising_ratio(int m, double alpha) {
  double r = 1.0;
  for (int i = 1; i <= m; ++i) r *= (alpha + i) / i;
  return r;
}

void require_in_disc(cplx z, const char* who) {
  if (!(std::norm(z) < 1.0)) {
    std::ostringstream os;
    os << who << ": point " << z << " is outside the open unit disc";
    fail(ErrorCode::domain, os.str());
  }
}

}  // namespace

const char* to_string(KernelPath path) {
  switch (path) {
    case KernelPath::closed: return "closed";
    case KernelPath::series: return "series";
    case KernelPath::diagonal: return "diagonal";
  }
  return "unknown";
}

double normalization(int m, int n, double alpha) {
  validate({m, n, alpha});
  return std::numbers::pi / ((m + n + alpha + 1.0) * rising_ratio(m, alpha) * rising_ratio(n, alpha));
}

cplx normalized_basis_eval(int m, int n, double alpha, cplx z) {
  require_in_disc(z, "normalized_basis_eval");
  const double w = std::pow(1.0 - std::norm(z), alpha / 2.0);
  return w * eval_zernike({m, n, alpha}, z) / std::sqrt(normalization(m, n, alpha));
}

int kernel_series_terms(int n, double alpha, cplx z, cplx w, double tol, int max_terms) {
  const double rho = std::abs(z) * std::abs(w);
  if (rho == 0.0) return n + 1;
  if (rho >= 1.0) return max_terms;
  // terms behave like m^{2n+alpha+1} rho^m with a prefactor that grows with n
  const double p = 2.0 * n + alpha + 2.0;
  const double logk = (n + 2) * std::log(10.0);
  const double target = std::log(tol);
  for (int m = std::max(n + 2, 10); m < max_terms; ++m)
    if (p * std::log(m + 1.0) + m * std::log(rho) + logk < target) return m;
  return max_terms;
}

KernelValue kernel_series(int n, double alpha, cplx z, cplx w, int M) {
  validate({0, n, alpha});
  require_in_disc(z, "kernel_series");
  require_in_disc(w, "kernel_series");
  if (M < 1) fail(ErrorCode::invalid_argument, "kernel_series: truncation M must be >= 1");
  ZernikeFamily fam(n, alpha, M);
  std::vector<cplx> pz(static_cast<size_t>(M)), pw(static_cast<size_t>(M));
  fam.evaluate_all(z, pz);
  fam.evaluate_all(w, pw);
  cplx sum = 0.0;
  for (int m = 0; m < M; ++m) {
    const double s = fam.inv_sqrt_norm(m);
    sum += pz[m] * std::conj(pw[m]) * (s * s);
  }
  // tail: bound the last term through term magnitudes, continue geometrically
  const double rz = std::abs(z), rw = std::abs(w);
  const double rho = rz * rw * std::pow((M + 1.0) / M, 2.0 * n + alpha + 1.0);
  double tail = 0.0;
  if (rho > 0.0) {
    const int last = M - 1;
    const ZernikeIndex idx{last, n, alpha};
    const double s = fam.inv_sqrt_norm(last);
    const double bound = zernike_term_scale(idx, z) * zernike_term_scale(idx, w) * s * s;
    tail = rho < 1.0 ? bound * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  }
  return {sum, KernelPath::series, n, alpha, z, w, tail};
}

KernelParts kernel_closed_parts(int n, double alpha, cplx z, cplx w) {
  validate({0, n, alpha});
  const cplx zb = std::conj(z), wb = std::conj(w);
  const cplx a1 = 1.0 - wb / zb;
  const cplx a2 = 1.0 - z / w;
  const cplx nu = 1.0 - 1.0 / (z * zb);
  const cplx u = 1.0 - 1.0 / (w * wb);
  const cplx Z = z * wb;
  const double pi = std::numbers::pi;
  const double poch_ratio = rising_ratio(n, alpha);  // (alpha+1)_n / n!
  const cplx zbw_n = std::pow(zb * w, n);
  const double c = 1.0 + alpha;

  KernelParts parts{0.0, 0.0};
  if (n > 0) {
    const cplx pref1 = double(n) * poch_ratio / pi * zbw_n;
    const cplx s1 = std::pow(a1, n) * std::pow(a2, n) / std::pow(1.0 - Z, 2.0 * n + 1.0 + alpha) *
                    gauss_2f1_terminating(-n, -n, c, Z * u * nu / (a1 * a2));
    parts.gauss_part = pref1 * s1;
  }

  const cplx pref2 = (alpha + 1.0) * poch_ratio / (pi * std::pow(1.0 - Z, n + alpha + 2.0)) * zbw_n;
  const cplx x = nu / a1;
  const cplx y = nu * Z / a1;
  const cplx ratio = u * Z / (Z - 1.0);
  cplx sum = 0.0;
  cplx rk = 1.0;
  double coef = 1.0;  // (-n)_k (alpha+2)_k / (k! (alpha+1)_k)
  for (int k = 0; k <= n; ++k) {
    sum += coef * rk * appell_f1_terminating(-n, -k, -1.0, c, x, y);
    coef *= (-n + k) * (alpha + 2.0 + k) / ((k + 1.0) * (alpha + 1.0 + k));
    rk *= ratio;
  }
  parts.appell_part = pref2 * std::pow(a1, n) * sum;
  return parts;
}

KernelValue kernel_closed(int n, double alpha, cplx z, cplx w) {
  validate({0, n, alpha});
  require_in_disc(z, "kernel_closed");
  require_in_disc(w, "kernel_closed");
  if (std::abs(z) < kKernelPointCutoff || std::abs(w) < kKernelPointCutoff || std::abs(z - w) < kKernelCoincidence) {
    const int M = std::max(n + 2, kernel_series_terms(n, alpha, z, w));
    return kernel_series(n, alpha, z, w, M);
  }
  const auto parts = kernel_closed_parts(n, alpha, z, w);
  return {parts.gauss_part + parts.appell_part, KernelPath::closed, n, alpha, z, w, 0.0};
}

double kernel_diagonal(int n, double alpha, cplx z) {
  validate({0, n, alpha});
  require_in_disc(z, "kernel_diagonal");
  return (2.0 * n + alpha + 1.0) / (std::numbers::pi * std::pow(1.0 - std::norm(z), alpha + 2.0));
}

KernelValue evaluate_kernel(int n, double alpha, cplx z, cplx w) {
  if (z == w) return {kernel_diagonal(n, alpha, z), KernelPath::diagonal, n, alpha, z, w, 0.0};
  return kernel_closed(n, alpha, z, w);
}

}  // namespace zdisc
