#include "zdisc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zdisc {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << "log_gamma: argument must be positive and finite, got " << x;
    fail(ErrorCode::domain, os.str());
  }
  return std::lgamma(x);
}

double log_factorial(double x) { return log_gamma(x + 1.0); }

bool is_nonpositive_integer(double x) {
  return x <= 1e-12 && std::abs(x - std::round(x)) <= 1e-12;
}

int termination_length(double a) {
  if (!is_nonpositive_integer(a)) return -1;
  return static_cast<int>(std::lround(-a)) + 1;
}

double pochhammer(double a, int k) {
  if (k < 0) fail(ErrorCode::invalid_argument, "pochhammer: order must be non-negative");
  if (is_nonpositive_integer(a) && std::lround(-a) < k) return 0.0;
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

cplx pochhammer(cplx a, int k) {
  if (a.imag() == 0.0) return pochhammer(a.real(), k);
  if (k < 0) fail(ErrorCode::invalid_argument, "pochhammer: order must be non-negative");
  cplx p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + static_cast<double>(j);
  return p;
}

namespace {

int series_length(double a, double b, const char* who) {
  const int la = termination_length(a);
  const int lb = termination_length(b);
  if (la < 0 && lb < 0) {
    std::ostringstream os;
    os << who << ": non-terminating parameters a=" << a << ", b=" << b;
    fail(ErrorCode::invalid_argument, os.str());
  }
  if (la < 0) return lb;
  if (lb < 0) return la;
  return std::min(la, lb);
}

void require_positive_c(double c, const char* who) {
  if (!(c > 0.0)) {
    std::ostringstream os;
    os << who << ": denominator parameter must be positive, got " << c;
    fail(ErrorCode::invalid_argument, os.str());
  }
}

}  // namespace

std::vector<double> gauss_2f1_coefficients(double a, double b, double c) {
  require_positive_c(c, "gauss_2f1_coefficients");
  const int len = series_length(a, b, "gauss_2f1_coefficients");
  std::vector<double> coef(static_cast<size_t>(len));
  double t = 1.0;
  for (int k = 0; k < len; ++k) {
    coef[static_cast<size_t>(k)] = t;
    t *= (a + k) * (b + k) / ((c + k) * (k + 1));
  }
  return coef;
}

cplx gauss_2f1_terminating(double a, double b, double c, cplx x) {
  require_positive_c(c, "gauss_2f1_terminating");
  const int len = series_length(a, b, "gauss_2f1_terminating");
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int k = 0; k < len; ++k) {
    sum += term;
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
  }
  return sum;
}

cplx appell_f1_terminating(double a, double b1, double b2, double c, cplx x, cplx y) {
  require_positive_c(c, "appell_f1_terminating");
  const int len_a = termination_length(a);
  if (len_a < 0) {
    std::ostringstream os;
    os << "appell_f1_terminating: a must be a non-positive integer, got " << a;
    fail(ErrorCode::invalid_argument, os.str());
  }
  const int top = len_a - 1;  // p + q <= top
  const int len_b1 = termination_length(b1);
  const int len_b2 = termination_length(b2);
  const int pmax = len_b1 < 0 ? top : std::min(top, len_b1 - 1);
  const int qmax = len_b2 < 0 ? top : std::min(top, len_b2 - 1);

  // (a)_s / (c)_s for s = 0..top
  std::vector<double> ac(static_cast<size_t>(top) + 1);
  ac[0] = 1.0;
  for (int s = 0; s < top; ++s) ac[s + 1] = ac[s] * (a + s) / (c + s);

  std::vector<cplx> xs(static_cast<size_t>(pmax) + 1), ys(static_cast<size_t>(qmax) + 1);
  xs[0] = 1.0;
  for (int p = 0; p < pmax; ++p) xs[p + 1] = xs[p] * (b1 + p) / double(p + 1) * x;
  ys[0] = 1.0;
  for (int q = 0; q < qmax; ++q) ys[q + 1] = ys[q] * (b2 + q) / double(q + 1) * y;

  cplx sum = 0.0;
  for (int p = 0; p <= pmax; ++p) {
    cplx inner = 0.0;
    for (int q = 0; q <= std::min(qmax, top - p); ++q) inner += ac[p + q] * ys[q];
    sum += xs[p] * inner;
  }
  return sum;
}

namespace {

double scaled(cplx lhs, cplx rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

}  // namespace

double bilinear_2f1_residual(double alpha, int n, cplx z, cplx nu, cplx u, int M) {
  const double c = 1.0 + alpha;
  const double beta = -n;
  cplx lhs = 0.0;
  cplx pref = 1.0;  // (1+alpha)_m z^m / m!
  for (int m = 0; m < M; ++m) {
    lhs += pref * gauss_2f1_terminating(-m, beta, c, nu) * gauss_2f1_terminating(-m, beta, c, u);
    pref *= (c + m) / double(m + 1) * z;
  }
  const cplx one_z = 1.0 - z;
  const cplx dn = one_z + nu * z;
  const cplx du = one_z + u * z;
  const cplx rhs = std::pow(one_z, 2.0 * beta - alpha - 1.0) * std::pow(dn, -beta) * std::pow(du, -beta) *
                   gauss_2f1_terminating(beta, beta, c, z * nu * u / (dn * du));
  return scaled(lhs, rhs);
}

double bilinear_appell_residual(double alpha, int n, cplx z, cplx x, cplx y, int M) {
  const double lambda = alpha + 2.0;
  const double mu = -n;
  const double c = alpha + 1.0;
  cplx lhs = 0.0;
  cplx pref = 1.0;  // (lambda)_m z^m / m!
  for (int m = 0; m < M; ++m) {
    lhs += pref * gauss_2f1_terminating(-m, mu, c, x) * gauss_2f1_terminating(-m, mu, c, y);
    pref *= (lambda + m) / double(m + 1) * z;
  }
  const cplx one_z = 1.0 - z;
  const cplx dx = one_z + x * z;
  cplx sum = 0.0;
  const cplx ratio = y * z / (z - 1.0);
  cplx rp = 1.0;
  for (int m = 0; m <= n; ++m) {
    const double coef = pochhammer(lambda, m) * pochhammer(mu, m) /
                        (std::exp(log_factorial(m)) * pochhammer(c, m));
    sum += coef * rp * appell_f1_terminating(mu, -m, alpha - lambda + 1.0, c, x / dx, x * z / dx);
    rp *= ratio;
  }
  const cplx rhs = std::pow(one_z, mu - lambda) * std::pow(dx, -mu) * sum;
  return scaled(lhs, rhs);
}

double appell_reduction_residual(int n, int k, double alpha, cplx z, cplx w) {
  const cplx zb = std::conj(z), wb = std::conj(w);
  const cplx X = (1.0 - 1.0 / (z * zb)) / (1.0 - wb / zb);
  const cplx Y = X * z * wb;
  const double c = 1.0 + alpha;
  const cplx lhs = appell_f1_terminating(-n, -k, -1.0, c, X, Y);
  cplx rhs = gauss_2f1_terminating(-n, -k, c, X);
  if (n > 0) rhs += double(n) * Y / c * gauss_2f1_terminating(-n + 1.0, -k, c + 1.0, X);
  return scaled(lhs, rhs);
}

double chu_vandermonde_residual(int k, double alpha) {
  const cplx lhs = gauss_2f1_terminating(-k, -1.0, 1.0 + alpha, 1.0);
  const double rhs = pochhammer(2.0 + alpha, k) / pochhammer(1.0 + alpha, k);
  return scaled(lhs, rhs);
}

std::vector<IdentityResidual> verify_series_identities(const SeriesIdentityParams& p, int M) {
  std::vector<IdentityResidual> out;
  out.push_back({"bilinear_2f1", bilinear_2f1_residual(p.alpha, p.n, p.z, p.nu, p.u, M)});
  out.push_back({"bilinear_appell", bilinear_appell_residual(p.alpha, p.n, p.z, p.nu, p.u, M)});
  out.push_back({"appell_reduction", appell_reduction_residual(p.n, p.k, p.alpha, p.zp, p.wp)});
  out.push_back({"chu_vandermonde", chu_vandermonde_residual(p.k, p.alpha)});
  return out;
}

}  // namespace zdisc
