#pragma once

#include <vector>

#include "zdisc/error.hpp"

namespace zdisc {

/// ln Γ(x) for x > 0. Throws ErrorCode::domain otherwise.
double log_gamma(double x);

/// ln Γ(x+1), the continuous extension of ln x! used for non-integer weights.
double log_factorial(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
/// Exact zero when a is a non-positive integer with |a| < k.
double pochhammer(double a, int k);
cplx pochhammer(cplx a, int k);

/// True when x is a non-positive integer (to within 1e-12).
bool is_nonpositive_integer(double x);

/// Number of terms of a terminating series with the given numerator parameter,
/// or -1 when the parameter does not terminate the series.
int termination_length(double a);

/// Coefficients t_k = (a)_k (b)_k / ((c)_k k!) of a terminating 2F1, k = 0..N.
std::vector<double> gauss_2f1_coefficients(double a, double b, double c);

/// Terminating Gauss series 2F1(a, b; c; x). Requires a or b to be a
/// non-positive integer and c > 0; evaluated by forward recurrence on the term ratio.
cplx gauss_2f1_terminating(double a, double b, double c, cplx x);

/// Terminating Appell series F1(a; b1, b2; c; x, y) with a a non-positive integer.
cplx appell_f1_terminating(double a, double b1, double b2, double c, cplx x, cplx y);

struct IdentityResidual {
  std::string id;
  double residual;
};

// Parameters for the series identity verifiers.
//
// The bilinear 2F1 sum uses beta = b = -n (n = 0 is the reduced case where
// both sides collapse to (1 - z)^{-alpha-1}); the bilinear Appell expansion
// uses lambda = alpha + 2, mu = nu = -n and beta = alpha, the instance that
// produces the Appell part of the kernel; the reduction uses (n, k, alpha) at
// the disc points (zp, wp); Chu-Vandermonde uses (k, alpha).
struct SeriesIdentityParams {
  double alpha = 0.0;
  int n = 0;
  int k = 0;
  cplx z{0.3, 0.1};    // series variable, |z| < 1
  cplx nu{0.2, -0.1};  // first 2F1 argument
  cplx u{-0.3, 0.2};   // second 2F1 argument
  cplx zp{0.4, 0.1};
  cplx wp{-0.2, 0.3};
};

/// sum_m (1+alpha)_m z^m/m! 2F1(-m,beta;1+alpha;nu) 2F1(-m,beta;1+alpha;u)
/// truncated at M terms, against its closed form.
double bilinear_2f1_residual(double alpha, int n, cplx z, cplx nu, cplx u, int M);
/// The same sum with (alpha+2)_m weights against its Appell F1 expansion.
double bilinear_appell_residual(double alpha, int n, cplx z, cplx x, cplx y, int M);
/// F1(-n,-k,-1;1+alpha;X,Y) against its two-term 2F1 reduction.
double appell_reduction_residual(int n, int k, double alpha, cplx z, cplx w);
/// |2F1(-k,-1;1+alpha;1) - (2+alpha)_k/(1+alpha)_k|.
double chu_vandermonde_residual(int k, double alpha);

std::vector<IdentityResidual> verify_series_identities(const SeriesIdentityParams& params, int M = 400);

}  // namespace zdisc
