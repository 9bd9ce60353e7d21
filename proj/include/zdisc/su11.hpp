#pragma once

#include <vector>

#include <Eigen/Dense>

#include "zdisc/error.hpp"

namespace zdisc {

void validate_eta(double eta);

/// sqrt((2 eta)_n / n!), the coefficient of z^n in the orthonormal monomial p_n.
double su11_basis_coefficient(int n, double eta);

/// (1-|z|^2)^eta (1 - conj(w) z)^{-2 eta} (1-|w|^2)^eta.
cplx su11_kernel(cplx z, cplx w, double eta);

/// Running sums S_M = sum_{k<M} |phi_k(z)|^2 for M = 1 .. count.
std::vector<double> su11_partial_sums(cplx z, double eta, int count);

/// Smallest M with 1 - S_M <= epsilon (capped at max_terms, cutoff error beyond).
int su11_cutoff(cplx z, double eta, double epsilon = 1e-10, int max_terms = 100000);

struct Su11Ladders {
  Eigen::MatrixXd k_plus;   // subdiagonal sqrt((k+1)(2eta+k))
  Eigen::MatrixXd k_minus;  // superdiagonal sqrt(k(2eta+k-1))
  Eigen::MatrixXd k0;       // diag(eta + k)
};

Su11Ladders su11_ladder_matrices(double eta, int M);

/// [K_+, K_-]; equals -2 K_0 except in the last row.
Eigen::MatrixXd su11_commutator(const Su11Ladders& l);

/// Coefficient-level residuals of the differential forms K_+ = z^2 d/dz + 2 eta z,
/// K_- = d/dz against the shift actions on p_n, and of the rebuild of p_n
/// from (K_+)^n p_0. Scaled by max(1, largest coefficient).
struct Su11DiffopResidual {
  double k_plus = 0.0;
  double k_minus = 0.0;
  double reconstruction = 0.0;
  double pointwise = 0.0;  // the same three relations evaluated at z
};

Su11DiffopResidual su11_diffop_check(int n, double eta, cplx z);

struct Su11Comparison {
  int n = 0;
  double alpha = 0.0;
  double eta = 0.0;
  std::vector<double> zernike_diagonal;  // interior diagonal of [A_z, A_zbar]
  std::vector<double> su11_diagonal;     // interior diagonal of [K_+, K_-]
  bool zernike_bounded_decaying = false;
  bool su11_linear = false;
  double su11_slope = 0.0;
  /// True when the two spectra differ structurally; no choice of (n, alpha)
  /// turns a decaying bounded diagonal into a linearly growing one.
  bool not_related_by_parameters = false;
};

Su11Comparison compare_with_zernike(int n, double alpha, double eta, int M);

}  // namespace zdisc
