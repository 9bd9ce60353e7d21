#include "zdisc/zernike.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zdisc/kernels.hpp"
#include "zdisc/special_functions.hpp"

namespace zdisc {

void validate(const ZernikeIndex& idx) {
  if (idx.m < 0 || idx.n < 0) {
    std::ostringstream os;
    os << "Zernike index must be non-negative, got (" << idx.m << ", " << idx.n << ")";
    fail(ErrorCode::invalid_argument, os.str());
  }
  if (!(idx.alpha > -1.0) || !std::isfinite(idx.alpha)) {
    std::ostringstream os;
    os << "alpha must exceed -1, got " << idx.alpha;
    fail(ErrorCode::invalid_argument, os.str());
  }
}

namespace {

void require_in_disc(cplx z, const char* who) {
  if (!(std::norm(z) < 1.0)) {
    std::ostringstream os;
    os << who << ": point " << z << " is outside the open unit disc";
    fail(ErrorCode::domain, os.str());
  }
}

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  cplx b = z;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// j-sum coefficients c_0..c_l with l = min(m, n), k = max(m, n):
// c_0 = prod_{i=1..l} (k+alpha+i)/(alpha+i),
// c_{j+1} = -c_j (l-j)(k-j) / ((j+1)(k+alpha+l-j)).
std::vector<double> jsum_coefficients(int m, int n, double alpha) {
  const int l = std::min(m, n);
  const int k = std::max(m, n);
  std::vector<double> c(static_cast<size_t>(l) + 1);
  double c0 = 1.0;
  for (int i = 1; i <= l; ++i) c0 *= (k + alpha + i) / (alpha + i);
  c[0] = c0;
  for (int j = 0; j < l; ++j)
    c[j + 1] = -c[j] * double(l - j) * double(k - j) / (double(j + 1) * (k + alpha + l - j));
  return c;
}

}  // namespace

double zernike_coefficient(const ZernikeIndex& idx, int j) {
  validate(idx);
  if (j < 0 || j > std::min(idx.m, idx.n)) fail(ErrorCode::invalid_argument, "zernike_coefficient: j out of range");
  return jsum_coefficients(idx.m, idx.n, idx.alpha)[static_cast<size_t>(j)];
}

BivariatePolynomial build_zernike(const ZernikeIndex& idx) {
  validate(idx);
  if (idx.m + idx.n > kMaxZernikeDegree) {
    std::ostringstream os;
    os << "build_zernike: degree m+n = " << idx.m + idx.n << " exceeds the supported bound " << kMaxZernikeDegree;
    fail(ErrorCode::overflow, os.str());
  }
  const auto c = jsum_coefficients(idx.m, idx.n, idx.alpha);
  BivariatePolynomial p;
  for (size_t j = 0; j < c.size(); ++j) p.add_term(idx.m - int(j), idx.n - int(j), c[j]);
  return p;
}

cplx eval_zernike(const ZernikeIndex& idx, cplx z, EvalPath path) {
  validate(idx);
  require_in_disc(z, "eval_zernike");
  const int m = idx.m, n = idx.n, l = std::min(m, n);
  const cplx zb = std::conj(z);
  switch (path) {
    case EvalPath::j_sum: {
      const auto c = jsum_coefficients(m, n, idx.alpha);
      cplx s = 0.0;
      for (int j = 0; j <= l; ++j) s += c[j] * ipow(z, m - j) * ipow(zb, n - j);
      return s;
    }
    case EvalPath::k_sum: {
      const double w = 1.0 - std::norm(z);
      double d = 1.0;  // (-1)^k m! n! alpha! / (k! (m-k)! (n-k)! (k+alpha)!)
      double wk = 1.0;
      cplx s = 0.0;
      for (int k = 0; k <= l; ++k) {
        s += d * wk * ipow(z, m - k) * ipow(zb, n - k);
        d *= -double(m - k) * double(n - k) / (double(k + 1) * (k + idx.alpha + 1.0));
        wk *= w;
      }
      return s;
    }
    case EvalPath::hypergeometric: {
      if (std::abs(z) < kHypergeometricCutoff) {
        std::ostringstream os;
        os << "eval_zernike: hypergeometric path needs |z| >= " << kHypergeometricCutoff << ", got |z| = " << std::abs(z);
        fail(ErrorCode::path, os.str());
      }
      const cplx arg = 1.0 - 1.0 / (z * zb);
      return ipow(z, m) * ipow(zb, n) * gauss_2f1_terminating(-m, -n, idx.alpha + 1.0, arg);
    }
  }
  fail(ErrorCode::invalid_argument, "eval_zernike: unknown path");
}

double zernike_term_scale(const ZernikeIndex& idx, cplx z) {
  validate(idx);
  const auto c = jsum_coefficients(idx.m, idx.n, idx.alpha);
  const double r = std::abs(z);
  double s = 0.0;
  for (size_t j = 0; j < c.size(); ++j) s += std::abs(c[j]) * std::pow(r, idx.m + idx.n - 2 * int(j));
  return s;
}

BivariatePolynomial apply_lowering(const ZernikeIndex& idx, const BivariatePolynomial& p) {
  return p.shifted(0, 1, double(idx.m)) + one_minus_zzbar() * wirtinger_derivative(p, Wirtinger::z);
}

BivariatePolynomial apply_raising(const ZernikeIndex& idx, const BivariatePolynomial& p) {
  return p.shifted(1, 0, idx.m + 1.0 + idx.alpha) - one_minus_zzbar() * wirtinger_derivative(p, Wirtinger::zbar);
}

namespace {

double scaled_difference(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
  return max_abs_difference(lhs, rhs) / std::max(1.0, rhs.max_abs_coefficient());
}

}  // namespace

double lowering_residual(const ZernikeIndex& idx) {
  const auto p = build_zernike(idx);
  BivariatePolynomial rhs;
  if (idx.m > 0) rhs = build_zernike({idx.m - 1, idx.n, idx.alpha}) * cplx(idx.m);
  return scaled_difference(apply_lowering(idx, p), rhs);
}

double raising_residual(const ZernikeIndex& idx) {
  const auto p = build_zernike(idx);
  const auto rhs = build_zernike({idx.m + 1, idx.n, idx.alpha}) * cplx(idx.m + 1.0 + idx.alpha);
  return scaled_difference(apply_raising(idx, p), rhs);
}

double check_recurrence(const ZernikeIndex& idx) {
  validate(idx);
  if (idx.n < 1) fail(ErrorCode::invalid_argument, "check_recurrence: requires n >= 1");
  const double a = idx.alpha;
  const auto lhs = build_zernike(idx).shifted(1, 0, idx.m + idx.n + a + 1.0);
  const auto rhs = build_zernike({idx.m + 1, idx.n, a}) * cplx(idx.m + 1.0 + a) +
                   build_zernike({idx.m, idx.n - 1, a}) * cplx(idx.n);
  return scaled_difference(lhs, rhs);
}

cplx WeightedPolynomial::operator()(cplx z) const {
  if (poly.is_zero()) return 0.0;
  return std::pow(1.0 - std::norm(z), alpha / 2.0) * poly(z);
}

double WeightedPolynomial::magnitude(cplx z) const {
  const double r = std::abs(z);
  double sum = 0.0;
  for (const auto& [key, c] : poly.terms()) sum += std::abs(c) * std::pow(r, key.first + key.second);
  return std::pow(1.0 - r * r, alpha / 2.0) * sum;
}

WeightedPolynomial normalized_basis(const ZernikeIndex& idx) {
  return {build_zernike(idx) * cplx(1.0 / std::sqrt(normalization(idx.m, idx.n, idx.alpha))), idx.alpha};
}

// On (1 - s)^{alpha/2} Q the weight derivative cancels the alpha/2 shifts:
//   ((mu + alpha/2) zbar + (1-s) d/dz) [(1-s)^{alpha/2} Q] = (1-s)^{alpha/2} [mu zbar Q + (1-s) dQ/dz]
//   ((mu + alpha/2) z - d/dzbar (1-s)) [(1-s)^{alpha/2} Q] = (1-s)^{alpha/2} [(mu+1+alpha) z Q - (1-s) dQ/dzbar]
WeightedPolynomial k_minus(int mu, int n, const WeightedPolynomial& f) {
  if (f.poly.is_zero()) return f;
  const double a = f.alpha;
  const cplx pref = std::sqrt(cplx((mu + n + a) / (mu + n + 1.0 + a)));
  auto q = f.poly.shifted(0, 1, double(mu)) + one_minus_zzbar() * wirtinger_derivative(f.poly, Wirtinger::z);
  return {q * pref, a};
}

WeightedPolynomial k_plus(int mu, int n, const WeightedPolynomial& f) {
  if (f.poly.is_zero()) return f;
  const double a = f.alpha;
  const cplx pref = std::sqrt(cplx((mu + n + 2.0 + a) / (mu + n + 1.0 + a)));
  auto q = f.poly.shifted(1, 0, mu + 1.0 + a) - one_minus_zzbar() * wirtinger_derivative(f.poly, Wirtinger::zbar);
  return {q * pref, a};
}

PointPair k_ladder_pointwise(const ZernikeIndex& idx, cplx z, LadderDirection direction) {
  validate(idx);
  require_in_disc(z, "k_ladder_pointwise");
  const int m = idx.m, n = idx.n;
  const double a = idx.alpha;
  const auto p = normalized_basis(idx);
  if (direction == LadderDirection::lower) {
    const auto image = k_minus(m, n, p);
    if (m == 0) return {image(z), 0.0, image.magnitude(z)};
    const auto target = normalized_basis({m - 1, n, a});
    const double f = std::sqrt(m * (m + a));
    return {image(z), f * target(z), std::max(image.magnitude(z), f * target.magnitude(z))};
  }
  const auto image = k_plus(m, n, p);
  const auto target = normalized_basis({m + 1, n, a});
  const double f = std::sqrt((m + 1.0) * (m + 1.0 + a));
  return {image(z), f * target(z), std::max(image.magnitude(z), f * target.magnitude(z))};
}

PointPair k_commutator_pointwise(const ZernikeIndex& idx, cplx z) {
  validate(idx);
  require_in_disc(z, "k_commutator_pointwise");
  const int m = idx.m, n = idx.n;
  const auto p = normalized_basis(idx);
  const auto up_down = k_minus(m + 1, n, k_plus(m, n, p));
  cplx lhs = up_down(z);
  double scale = up_down.magnitude(z);
  if (m > 0) {
    const auto down_up = k_plus(m - 1, n, k_minus(m, n, p));
    lhs -= down_up(z);
    scale = std::max(scale, down_up.magnitude(z));
  }
  const double eig = 2.0 * (m + (1.0 + idx.alpha) / 2.0);
  return {lhs, eig * p(z), std::max(scale, eig * p.magnitude(z))};
}

ZernikeFamily::ZernikeFamily(int n, double alpha, int count) : n_(n), alpha_(alpha) {
  validate({0, n, alpha});
  if (count < 0) fail(ErrorCode::invalid_argument, "ZernikeFamily: negative count");
  coef_.reserve(static_cast<size_t>(count));
  inv_sqrt_norm_.reserve(static_cast<size_t>(count));
  for (int m = 0; m < count; ++m) {
    coef_.push_back(jsum_coefficients(m, n, alpha));
    inv_sqrt_norm_.push_back(1.0 / std::sqrt(normalization(m, n, alpha)));
  }
}

cplx ZernikeFamily::evaluate(int m, cplx z) const {
  const auto& c = coef_.at(static_cast<size_t>(m));
  const cplx zb = std::conj(z);
  cplx s = 0.0;
  for (size_t j = 0; j < c.size(); ++j) s += c[j] * ipow(z, m - int(j)) * ipow(zb, n_ - int(j));
  return s;
}

void ZernikeFamily::evaluate_all(cplx z, std::span<cplx> out) const {
  const size_t count = std::min(out.size(), coef_.size());
  if (count == 0) return;
  // z^k for k < count, zbar^k for k <= n
  std::vector<cplx> zp(count), wp(static_cast<size_t>(n_) + 1);
  zp[0] = wp[0] = 1.0;
  for (size_t k = 1; k < count; ++k) zp[k] = zp[k - 1] * z;
  const cplx zb = std::conj(z);
  for (size_t k = 1; k < wp.size(); ++k) wp[k] = wp[k - 1] * zb;
  for (size_t m = 0; m < count; ++m) {
    const auto& c = coef_[m];
    cplx s = 0.0;
    for (size_t j = 0; j < c.size(); ++j) s += c[j] * zp[m - j] * wp[static_cast<size_t>(n_) - j];
    out[m] = s;
  }
}

}  // namespace zdisc
