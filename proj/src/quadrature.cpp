#include "zdisc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zdisc/kernels.hpp"

namespace zdisc {

RadialRule gauss_jacobi_rule(int N, double alpha) {
  if (N < 1) fail(ErrorCode::invalid_argument, "gauss_jacobi_rule: N must be >= 1");
  if (!(alpha > -1.0)) fail(ErrorCode::invalid_argument, "gauss_jacobi_rule: alpha must exceed -1");

  // Jacobi matrix on [-1, 1] for (1-x)^alpha (1+x)^beta with beta = 0.
  const double a = alpha, b = 0.0;
  Eigen::VectorXd diag(N);
  Eigen::VectorXd sub(std::max(N - 1, 0));
  diag(0) = (b - a) / (a + b + 2.0);
  for (int k = 1; k < N; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    sub(k - 1) = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "gauss_jacobi_rule: eigen-solve failed for N=" << N << ", alpha=" << alpha;
    fail(ErrorCode::convergence, os.str());
  }

  // t = (x+1)/2; the zeroth moment on [0,1] is 1/(alpha+1).
  RadialRule rule;
  rule.alpha = alpha;
  rule.nodes.resize(static_cast<size_t>(N));
  rule.weights.resize(static_cast<size_t>(N));
  const double mu0 = 1.0 / (alpha + 1.0);
  for (int i = 0; i < N; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = (solver.eigenvalues()(i) + 1.0) / 2.0;
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

DiscQuadratureRule disc_rule(int n_rad, int n_ang, double alpha) {
  if (n_rad < 1) fail(ErrorCode::invalid_argument, "disc_rule: n_rad must be >= 1");
  if (n_ang < 2) fail(ErrorCode::invalid_argument, "disc_rule: n_ang must be >= 2");
  const auto radial = gauss_jacobi_rule(n_rad, alpha);
  DiscQuadratureRule rule;
  rule.alpha = alpha;
  rule.n_rad = n_rad;
  rule.n_ang = n_ang;
  rule.exact_degree = 2 * (2 * n_rad - 1);
  rule.nodes.reserve(static_cast<size_t>(n_rad) * n_ang);
  rule.weights.reserve(static_cast<size_t>(n_rad) * n_ang);
  // dA = r dr dtheta = (dt / 2) dtheta
  const double dtheta = 2.0 * std::numbers::pi / n_ang;
  for (int k = 0; k < n_rad; ++k) {
    const double r = std::sqrt(radial.nodes[k]);
    const double w = radial.weights[k] / 2.0 * dtheta;
    for (int j = 0; j < n_ang; ++j) {
      rule.nodes.push_back(std::polar(r, j * dtheta));
      rule.weights.push_back(w);
    }
  }
  return rule;
}

DiscQuadratureRule disc_rule_for_degree(int degree, double alpha, int frequency) {
  degree = std::max(degree, 0);
  const int n_rad = std::max(1, (degree + 2 + 3) / 4);
  const int n_ang = std::max({2, 2 * degree + 4, frequency + 1});
  return disc_rule(n_rad, n_ang, alpha);
}

DiscQuadratureRule refined(const DiscQuadratureRule& rule) {
  return disc_rule(2 * rule.n_rad, 2 * rule.n_ang, rule.alpha);
}

cplx pairwise_sum(std::span<const cplx> values) {
  if (values.size() <= 16) {
    cplx s = 0.0;
    for (const auto& v : values) s += v;
    return s;
  }
  const size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

cplx integrate(const DiscFunction& f, const DiscQuadratureRule& rule) {
  std::vector<cplx> terms(rule.size());
  for (size_t i = 0; i < rule.size(); ++i) {
    try {
      terms[i] = rule.weights[i] * f(rule.nodes[i]);
    } catch (const Error& e) {
      std::ostringstream os;
      os << e.what() << " (at quadrature node " << rule.nodes[i] << ")";
      throw Error(e.code(), os.str());
    }
  }
  return pairwise_sum(terms);
}

cplx inner_product(const DiscFunction& f, const DiscFunction& g, const DiscQuadratureRule& rule) {
  return integrate([&](cplx z) { return std::conj(f(z)) * g(z); }, rule);
}

GramResult gram_matrix(std::span<const std::pair<int, int>> indices, double alpha, const DiscQuadratureRule& rule) {
  if (std::abs(rule.alpha - alpha) > 0.0) fail(ErrorCode::invalid_argument, "gram_matrix: rule weight differs from alpha");
  const size_t count = indices.size();
  int max_degree = 0, max_freq = 0;
  std::vector<BivariatePolynomial> polys;
  polys.reserve(count);
  for (const auto& [m, n] : indices) {
    polys.push_back(build_zernike({m, n, alpha}) * cplx(1.0 / std::sqrt(normalization(m, n, alpha))));
    max_degree = std::max(max_degree, m + n);
    max_freq = std::max(max_freq, std::abs(m - n));
  }

  // values[i][node]
  Eigen::MatrixXcd values(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(rule.size()));
  for (size_t i = 0; i < count; ++i)
    for (size_t q = 0; q < rule.size(); ++q) values(Eigen::Index(i), Eigen::Index(q)) = polys[i](rule.nodes[q]);

  GramResult out;
  out.exact = rule.exact_for(2 * max_degree, 2 * max_freq);
  out.gram.resize(Eigen::Index(count), Eigen::Index(count));
  std::vector<cplx> terms(rule.size());
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      for (size_t q = 0; q < rule.size(); ++q)
        terms[q] = rule.weights[q] * std::conj(values(Eigen::Index(i), Eigen::Index(q))) * values(Eigen::Index(j), Eigen::Index(q));
      const cplx g = pairwise_sum(terms);
      out.gram(Eigen::Index(i), Eigen::Index(j)) = g;
      out.max_deviation = std::max(out.max_deviation, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return out;
}

}  // namespace zdisc
