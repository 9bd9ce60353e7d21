#pragma once

#include <map>
#include <utility>

#include "zdisc/error.hpp"

namespace zdisc {

/// Finite table of complex coefficients c[a,b] of monomials z^a zbar^b.
/// z and zbar are treated as independent variables (Wirtinger calculus);
/// evaluation sets zbar = conj(z). Exact zeros are never stored.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, cplx>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(cplx c);
  static BivariatePolynomial monomial(int a, int b, cplx c = 1.0);

  void add_term(int a, int b, cplx c);
  cplx coefficient(int a, int b) const;
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Largest a+b over stored terms, -1 for the zero polynomial.
  int total_degree() const;
  int z_degree() const;
  int zbar_degree() const;
  /// Largest |a-b| over stored terms (angular frequency).
  int max_frequency() const;
  double max_abs_coefficient() const;

  cplx evaluate(cplx z, cplx zbar) const;
  cplx operator()(cplx z) const { return evaluate(z, std::conj(z)); }

  /// Entry-wise conjugate with the roles of z and zbar exchanged, so that
  /// conjugate()(z) == conj((*this)(z)).
  BivariatePolynomial conjugate() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(cplx s);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, cplx s) { return a *= s; }
  friend BivariatePolynomial operator*(cplx s, BivariatePolynomial a) { return a *= s; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

  /// Multiply by c z^a zbar^b.
  BivariatePolynomial shifted(int a, int b, cplx c = 1.0) const;

 private:
  Terms terms_;
};

/// max over monomials of |p[a,b] - q[a,b]|.
double max_abs_difference(const BivariatePolynomial& p, const BivariatePolynomial& q);

enum class Wirtinger { z, zbar };

/// Exact d/dz or d/dzbar on the coefficient table.
BivariatePolynomial wirtinger_derivative(const BivariatePolynomial& p, Wirtinger direction);

/// The polynomial 1 - z zbar.
BivariatePolynomial one_minus_zzbar();

}  // namespace zdisc
