#include "zdisc/coherent_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zdisc/kernels.hpp"

namespace zdisc {

namespace {

void require_in_disc(cplx z, const char* who) {
  if (!(std::norm(z) < 1.0)) {
    std::ostringstream os;
    os << who << ": point " << z << " is outside the open unit disc";
    fail(ErrorCode::domain, os.str());
  }
}

void fill(CoherentStateVector& v, const ZernikeFamily& fam, int M) {
  v.coefficients.assign(static_cast<size_t>(M), 0.0);
  fam.evaluate_all(v.z, v.coefficients);
  const double scale = 1.0 / std::sqrt(kernel_diagonal(v.n, v.alpha, v.z));
  double mass = 0.0;
  for (int m = 0; m < M; ++m) {
    v.coefficients[m] *= fam.inv_sqrt_norm(m) * scale;
    mass += std::norm(v.coefficients[m]);
  }
  v.tail_mass = std::max(0.0, 1.0 - mass);
}

}  // namespace

CoherentStateVector cs_vector(cplx z, int n, double alpha, double epsilon, int max_cutoff) {
  require_in_disc(z, "cs_vector");
  validate({0, n, alpha});
  CoherentStateVector v{z, n, alpha, {}, 1.0};
  // grow the cutoff geometrically, then trim to the first M meeting epsilon
  int M = std::max(n + 8, 32);
  for (;;) {
    const int trial = std::min(M, max_cutoff);
    ZernikeFamily fam(n, alpha, trial);
    fill(v, fam, trial);
    if (v.tail_mass <= epsilon) {
      double mass = 0.0;
      for (int m = 0; m < trial; ++m) {
        mass += std::norm(v.coefficients[m]);
        if (1.0 - mass <= epsilon) {
          v.coefficients.resize(static_cast<size_t>(m) + 1);
          v.tail_mass = std::max(0.0, 1.0 - mass);
          break;
        }
      }
      return v;
    }
    if (trial == max_cutoff) {
      std::ostringstream os;
      os << "cs_vector: tail mass " << v.tail_mass << " still above " << epsilon << " at the hard cap M=" << max_cutoff
         << " (|z| = " << std::abs(z) << ")";
      fail(ErrorCode::cutoff, os.str());
    }
    M *= 2;
  }
}

CoherentStateVector cs_vector_truncated(cplx z, int n, double alpha, int M) {
  require_in_disc(z, "cs_vector_truncated");
  if (M < 1) fail(ErrorCode::invalid_argument, "cs_vector_truncated: M must be >= 1");
  CoherentStateVector v{z, n, alpha, {}, 1.0};
  fill(v, ZernikeFamily(n, alpha, M), M);
  return v;
}

cplx cs_overlap(cplx z, cplx w, int n, double alpha) {
  require_in_disc(z, "cs_overlap");
  require_in_disc(w, "cs_overlap");
  const double weight = std::pow((1.0 - std::norm(z)) * (1.0 - std::norm(w)), (alpha + 2.0) / 2.0);
  const auto e = evaluate_kernel(n, alpha, w, z);
  return std::numbers::pi / (2.0 * n + alpha + 1.0) * weight * e.value;
}

cplx cs_overlap_series(const CoherentStateVector& a, const CoherentStateVector& b) {
  const size_t M = std::min(a.coefficients.size(), b.coefficients.size());
  cplx s = 0.0;
  for (size_t m = 0; m < M; ++m) s += std::conj(a.coefficients[m]) * b.coefficients[m];
  return s;
}

ResolutionResult resolution_check(int n, double alpha, int M, const DiscQuadratureRule& rule) {
  if (M < 1) fail(ErrorCode::invalid_argument, "resolution_check: M must be >= 1");
  if (rule.alpha != alpha) fail(ErrorCode::invalid_argument, "resolution_check: rule weight differs from alpha");
  ResolutionResult out;
  const int degree = 2 * (M - 1 + n);
  out.exact = rule.exact_for(degree, M - 1);

  const ZernikeFamily fam(n, alpha, M);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(M, M);
  Eigen::VectorXcd c(M);
  for (size_t q = 0; q < rule.size(); ++q) {
    const auto v = [&] {
      CoherentStateVector s{rule.nodes[q], n, alpha, {}, 1.0};
      fill(s, fam, M);
      return s;
    }();
    const double N = kernel_diagonal(n, alpha, rule.nodes[q]);
    for (int m = 0; m < M; ++m) c(m) = v.coefficients[m];
    acc.noalias() += (rule.weights[q] * N) * (c * c.adjoint());
  }
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) out.max_deviation = std::max(out.max_deviation, std::abs(acc(i, j) - (i == j ? 1.0 : 0.0)));
  return out;
}

}  // namespace zdisc
