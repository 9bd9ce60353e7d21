#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zdisc/coherent_states.hpp"
#include "zdisc/observable.hpp"

namespace zdisc {

enum class Provenance { quadrature, closed_form };

const char* to_string(Provenance p);

/// Truncated M x M matrix of an operator on the span of e_0 .. e_{M-1}.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  int n = 0;
  double alpha = 0.0;
  int M = 0;
  Provenance provenance = Provenance::quadrature;
  double accuracy_estimate = 0.0;  // saturation change, non-polynomial observables only
  std::vector<std::string> warnings;

  /// Products of shift matrices are wrong in the last row and column.
  bool interior(int i, int j) const { return i < M - 1 && j < M - 1; }
};

/// C(m, n, alpha) = sqrt((m+1)(m+alpha+1) / ((m+n+alpha+2)(m+n+alpha+1))).
double ladder_coefficient(int m, int n, double alpha);

/// A_f by quadrature. Without a rule, polynomial observables get the
/// smallest exact rule; other observables get a rule sized for degree
/// 2(M-1+n) + 40 and a saturation test against the doubled rule.
OperatorMatrix quantize_observable(const ObservableExpr& f, int n, double alpha, int M,
                                   const std::optional<DiscQuadratureRule>& rule = std::nullopt);

struct LadderPair {
  OperatorMatrix az;
  OperatorMatrix azbar;
};

LadderPair ladder_matrices(int n, double alpha, int M);

/// AB - BA. Throws ErrorCode::metadata_mismatch for different (n, alpha, M).
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix product(const OperatorMatrix& a, const OperatorMatrix& b);

struct PhaseSpaceOperators {
  OperatorMatrix q;
  OperatorMatrix p;
  OperatorMatrix h;
};

/// Q = (A_z + A_zbar)/sqrt2, P = (A_z - A_zbar)/(i sqrt2), H = (A_z A_zbar + A_zbar A_z)/2.
PhaseSpaceOperators position_momentum_hamiltonian(int n, double alpha, int M);

struct LowerSymbol {
  cplx value;
  double tail_mass = 0.0;
  bool tail_warning = false;  // tail_mass above kLowerSymbolTail
};

inline constexpr double kLowerSymbolTail = 1e-10;

/// <z,n,alpha| A |z,n,alpha> with the state truncated at A.M.
LowerSymbol lower_symbol(const OperatorMatrix& a, cplx z);

struct BerezinValue {
  cplx value;
  double accuracy_estimate = 0.0;  // change against the doubled rule
  bool accuracy_warning = false;
};

inline constexpr double kSaturationTolerance = 1e-9;

/// Default rule for kernel-squared integrands.
DiscQuadratureRule berezin_rule(double alpha);

/// pi (1-|z|^2)^{alpha+2} / (2n+alpha+1) * integral |E_n^alpha(w, zbar)|^2 f(w) d mu(w).
BerezinValue berezin_transform(const ObservableExpr& f, cplx z, int n, double alpha,
                               const std::optional<DiscQuadratureRule>& rule = std::nullopt);

/// Weighted Bergman form for n = 0:
/// (alpha+1)/pi * integral (1-|z|^2)^{alpha+2} / |1 - w zbar|^{4+2alpha} f(w) d mu(w).
BerezinValue berezin_bergman(const ObservableExpr& f, cplx z, double alpha,
                             const std::optional<DiscQuadratureRule>& rule = std::nullopt);

/// Standard disc form: (1-|z|^2)^2 / pi * integral f(w) / |1 - zbar w|^4 dA(w).
BerezinValue berezin_standard(const ObservableExpr& f, cplx z,
                              const std::optional<DiscQuadratureRule>& rule = std::nullopt);

/// Pointwise residuals of the differential-operator forms of A_z, A_zbar on
/// p_{m,n}^alpha; each residual is max |lhs - rhs| / max(1, |rhs|) over the points.
struct DiffopReport {
  double az_form = 0.0;           // (m zbar + (1-s) d/dz)/(m+n+1+alpha) vs C(m-1) p_{m-1}
  double azbar_form = 0.0;        // ((m+1+alpha) z - (1-s) d/dzbar)/(m+n+1+alpha) vs C(m) p_{m+1}
  double k_minus_form = 0.0;      // K_-/sqrt((m+n+alpha+1)(m+n+alpha)) vs C(m-1) p_{m-1}
  double k_plus_form = 0.0;       // K_+/sqrt((m+n+alpha+1)(m+n+alpha+2)) vs C(m) p_{m+1}
  double frozen_commutator = 0.0; // [K_-,K_+] scaled at fixed m vs 2K_0 with the same scale
  bool frozen_applicable = true;  // false when m+n+alpha <= 0
  double frozen_eigenvalue = 0.0; // 2(m+(1+alpha)/2) / ((m+n+alpha+1) sqrt((m+n+alpha)(m+n+alpha+2)))
  double matrix_commutator = 0.0; // C^2(m) - C^2(m-1), the diagonal of [A_z, A_zbar]
};

DiffopReport diffop_upper_symbol_check(int m, int n, double alpha, const std::vector<cplx>& points);

struct AdjointElements {
  cplx lowering;        // <p_{m-1}, K_- p_m>
  cplx raising_conj;    // conj(<p_m, K_+ p_{m-1}>)
  double expected = 0.0;  // sqrt(m(m+alpha))
};

/// Matrix elements of K_- and K_+ by exact quadrature. Requires m >= 1.
AdjointElements ladder_adjoint_elements(int m, int n, double alpha);

}  // namespace zdisc
