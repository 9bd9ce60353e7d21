#pragma once

#include "zdisc/zernike.hpp"

namespace zdisc {

/// A_alpha(m, n) = pi m! n! alpha!^2 / ((m+n+alpha+1) (m+alpha)! (n+alpha)!),
/// the squared norm of P_{m,n}^alpha against (1 - |z|^2)^alpha dA.
double normalization(int m, int n, double alpha);

/// p_{m,n}^alpha(z) = A^{-1/2} (1 - z zbar)^{alpha/2} P_{m,n}^alpha(z, zbar).
cplx normalized_basis_eval(int m, int n, double alpha, cplx z);

enum class KernelPath { closed, series, diagonal };

const char* to_string(KernelPath path);

/// E_n^alpha(z, wbar) = sum_m P_{m,n}(z) conj(P_{m,n}(w)) / A_alpha(m, n).
struct KernelValue {
  cplx value;
  KernelPath path;
  int n;
  double alpha;
  cplx z;
  cplx w;
  double tail_estimate = 0.0;  // series path only
};

inline constexpr int kDefaultKernelTerms = 400;
inline constexpr double kKernelPointCutoff = 1e-3;
inline constexpr double kKernelCoincidence = 1e-4;

/// Partial sum over m < M with a geometric tail estimate.
KernelValue kernel_series(int n, double alpha, cplx z, cplx w, int M = kDefaultKernelTerms);

/// Number of series terms needed so that the tail estimate at (z, w) falls
/// below tol (capped at max_terms).
int kernel_series_terms(int n, double alpha, cplx z, cplx w, double tol = 1e-17, int max_terms = 20000);

/// The two parts of the closed form: the 2F1 part (with its prefactor
/// n (alpha+1)_n (zbar w)^n / (pi n!)) and the Appell part (with its
/// prefactor). Their sum is E_n^alpha(z, wbar).
struct KernelParts {
  cplx gauss_part;
  cplx appell_part;
};
KernelParts kernel_closed_parts(int n, double alpha, cplx z, cplx w);

/// Closed form of E_n^alpha(z, wbar). Falls back to the series when |z| or
/// |w| is below kKernelPointCutoff or |z - w| < kKernelCoincidence.
KernelValue kernel_closed(int n, double alpha, cplx z, cplx w);

/// N_n(z) = E_n^alpha(z, zbar) = (2n+alpha+1) / (pi (1 - |z|^2)^{alpha+2}).
double kernel_diagonal(int n, double alpha, cplx z);

/// Dispatch used by front ends: diagonal when z == w exactly, closed form otherwise.
KernelValue evaluate_kernel(int n, double alpha, cplx z, cplx w);

}  // namespace zdisc
