#pragma once

#include <vector>

#include "zdisc/quadrature.hpp"

namespace zdisc {

inline constexpr double kDefaultTailEpsilon = 1e-12;
inline constexpr int kMaxCutoff = 5000;

/// |z, alpha, n> truncated to its first M Fock coefficients
/// c_m = P_{m,n}(z) / sqrt(A_alpha(m,n) N_n(z)). The missing mass
/// 1 - sum |c_m|^2 is certified against the exact diagonal kernel N_n.
struct CoherentStateVector {
  cplx z;
  int n = 0;
  double alpha = 0.0;
  std::vector<cplx> coefficients;
  double tail_mass = 0.0;

  int cutoff() const { return static_cast<int>(coefficients.size()); }
};

/// Coherent state with the cutoff chosen as the first M where tail_mass <= epsilon.
/// Throws ErrorCode::cutoff when M would exceed max_cutoff.
CoherentStateVector cs_vector(cplx z, int n, double alpha, double epsilon = kDefaultTailEpsilon, int max_cutoff = kMaxCutoff);

/// Coherent state truncated at exactly M coefficients.
CoherentStateVector cs_vector_truncated(cplx z, int n, double alpha, int M);

/// <z|w> from the closed-form kernel:
/// pi/(2n+alpha+1) [(1-|z|^2)(1-|w|^2)]^{(alpha+2)/2} E_n^alpha(w, zbar).
cplx cs_overlap(cplx z, cplx w, int n, double alpha);

/// sum_m conj(c_m(z)) c_m(w) over the common cutoff.
cplx cs_overlap_series(const CoherentStateVector& z, const CoherentStateVector& w);

struct ResolutionResult {
  double max_deviation = 0.0;  // max |entry - delta|
  bool exact = true;           // rule exact for the polynomial entries
};

/// Integral of N_n |z><z| d mu on the M x M truncation.
ResolutionResult resolution_check(int n, double alpha, int M, const DiscQuadratureRule& rule);

}  // namespace zdisc
