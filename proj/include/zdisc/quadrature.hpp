#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "zdisc/zernike.hpp"

namespace zdisc {

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - t)^alpha.
struct RadialRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// N-point rule exact for polynomials of degree <= 2N-1, built from the
/// eigen-decomposition of the Jacobi matrix (Golub-Welsch).
RadialRule gauss_jacobi_rule(int N, double alpha);

/// Tensor rule for the disc measure (1 - |z|^2)^alpha dA: Gauss-Jacobi in
/// t = r^2 times an equispaced angular rule. Exact for z^a zbar^b whenever
/// a + b <= exact_degree and |a - b| < n_ang.
struct DiscQuadratureRule {
  double alpha = 0.0;
  int n_rad = 0;
  int n_ang = 0;
  int exact_degree = 0;
  std::vector<cplx> nodes;
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
  /// True when every monomial with total degree <= degree and angular
  /// frequency <= frequency is integrated exactly.
  bool exact_for(int degree, int frequency) const { return degree <= exact_degree && frequency < n_ang; }
};

DiscQuadratureRule disc_rule(int n_rad, int n_ang, double alpha);

/// Smallest radial order exact up to `degree`, with n_ang = max(2 degree + 4, frequency + 1).
DiscQuadratureRule disc_rule_for_degree(int degree, double alpha, int frequency = -1);

/// Same rule with both node counts doubled (saturation checks).
DiscQuadratureRule refined(const DiscQuadratureRule& rule);

using DiscFunction = std::function<cplx(cplx)>;

/// Pairwise summation in a fixed order.
cplx pairwise_sum(std::span<const cplx> values);

/// Integral of f against the rule's measure.
cplx integrate(const DiscFunction& f, const DiscQuadratureRule& rule);

/// <f|g> = integral of conj(f) g against the rule's measure.
cplx inner_product(const DiscFunction& f, const DiscFunction& g, const DiscQuadratureRule& rule);

struct GramResult {
  Eigen::MatrixXcd gram;
  double max_deviation = 0.0;  // max |G - I|
  bool exact = true;           // exactness precondition met
};

/// Gram matrix of the normalized basis p_{m,n}^alpha for the listed (m, n).
/// The rule's weight must equal alpha; the weights of the basis functions
/// are absorbed into the measure so the integrands are polynomial.
GramResult gram_matrix(std::span<const std::pair<int, int>> indices, double alpha, const DiscQuadratureRule& rule);

}  // namespace zdisc
