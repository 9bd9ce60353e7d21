#pragma once

#include <span>
#include <vector>

#include "zdisc/polynomial.hpp"

namespace zdisc {

/// Index (m, n, alpha) of P_{m,n}^alpha. alpha > -1 is a continuous weight.
struct ZernikeIndex {
  int m = 0;
  int n = 0;
  double alpha = 0.0;
};

void validate(const ZernikeIndex& idx);

inline constexpr int kMaxZernikeDegree = 120;
inline constexpr double kHypergeometricCutoff = 1e-3;

/// Coefficient of z^{m-j} zbar^{n-j} in P_{m,n}^alpha, 0 <= j <= min(m, n).
double zernike_coefficient(const ZernikeIndex& idx, int j);

/// Coefficient table of P_{m,n}^alpha. Throws ErrorCode::overflow when
/// m + n > kMaxZernikeDegree.
BivariatePolynomial build_zernike(const ZernikeIndex& idx);

enum class EvalPath { j_sum, k_sum, hypergeometric };

/// P_{m,n}^alpha(z, zbar) for |z| < 1 by one of the three series forms.
/// The hypergeometric form needs |z| >= kHypergeometricCutoff.
cplx eval_zernike(const ZernikeIndex& idx, cplx z, EvalPath path = EvalPath::j_sum);

/// Sum of |term| in the j-sum at z; the natural scale for comparing paths
/// near zeros of P.
double zernike_term_scale(const ZernikeIndex& idx, cplx z);

/// (m zbar + (1 - z zbar) d/dz) p; equals m P_{m-1,n} when p = P_{m,n}.
BivariatePolynomial apply_lowering(const ZernikeIndex& idx, const BivariatePolynomial& p);

/// ((m+1+alpha) z - (1 - z zbar) d/dzbar) p; equals (m+1+alpha) P_{m+1,n} when p = P_{m,n}.
BivariatePolynomial apply_raising(const ZernikeIndex& idx, const BivariatePolynomial& p);

// Coefficient-level residuals, scaled by max(1, largest coefficient of the
// right-hand side).
double lowering_residual(const ZernikeIndex& idx);
double raising_residual(const ZernikeIndex& idx);

/// (m+n+alpha+1) z P_{m,n} vs (m+1+alpha) P_{m+1,n} + n P_{m,n-1}. Requires n >= 1.
double check_recurrence(const ZernikeIndex& idx);

enum class LadderDirection { raise, lower };

struct PointPair {
  cplx lhs;
  cplx rhs;
  /// Largest weight(z) * sum |c_ab| |z|^{a+b} over the tables evaluated: the
  /// rounding scale of the monomial basis at z.
  double scale = 0.0;
};

/// Both sides of K_{-/+} p_{m,n} = sqrt(...) p_{m-/+1,n} at z, with the weight
/// (1 - z zbar)^{alpha/2} differentiated analytically.
PointPair k_ladder_pointwise(const ZernikeIndex& idx, cplx z, LadderDirection direction);

/// Both sides of [K_-, K_+] p_{m,n} = 2 (m + (1+alpha)/2) p_{m,n} at z.
PointPair k_commutator_pointwise(const ZernikeIndex& idx, cplx z);

/// A polynomial times the weight (1 - z zbar)^{alpha/2}: the form every
/// normalized basis function and every ladder image takes.
struct WeightedPolynomial {
  BivariatePolynomial poly;
  double alpha = 0.0;
  cplx operator()(cplx z) const;
  /// weight(z) * sum |c_ab| |z|^{a+b}.
  double magnitude(cplx z) const;
};

/// K_-(mu) and K_+(mu) as index-parameterized maps on weighted polynomials.
/// The n of the subspace enters the scalar prefactors.
WeightedPolynomial k_minus(int mu, int n, const WeightedPolynomial& f);
WeightedPolynomial k_plus(int mu, int n, const WeightedPolynomial& f);

/// Normalized basis function p_{m,n}^alpha as a weighted polynomial.
WeightedPolynomial normalized_basis(const ZernikeIndex& idx);

/// Precomputed j-sum coefficients of P_{m,n}^alpha for 0 <= m < count at
/// fixed (n, alpha). Used wherever a whole column of the basis is needed at
/// many points (quadrature, kernel series, coherent-state vectors).
class ZernikeFamily {
 public:
  ZernikeFamily(int n, double alpha, int count);

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  int count() const { return static_cast<int>(coef_.size()); }

  cplx evaluate(int m, cplx z) const;
  /// out[m] = P_{m,n}(z) for m < out.size() (at most count()).
  void evaluate_all(cplx z, std::span<cplx> out) const;
  /// 1 / sqrt(A_alpha(m, n)).
  double inv_sqrt_norm(int m) const { return inv_sqrt_norm_[static_cast<size_t>(m)]; }

 private:
  int n_;
  double alpha_;
  std::vector<std::vector<double>> coef_;
  std::vector<double> inv_sqrt_norm_;
};

}  // namespace zdisc
