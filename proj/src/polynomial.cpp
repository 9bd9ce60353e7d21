#include "zdisc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace zdisc {

BivariatePolynomial BivariatePolynomial::constant(cplx c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int a, int b, cplx c) {
  BivariatePolynomial p;
  p.add_term(a, b, c);
  return p;
}

void BivariatePolynomial::add_term(int a, int b, cplx c) {
  if (a < 0 || b < 0) fail(ErrorCode::invalid_argument, "BivariatePolynomial: negative exponent");
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

cplx BivariatePolynomial::coefficient(int a, int b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int BivariatePolynomial::z_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePolynomial::zbar_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BivariatePolynomial::max_frequency() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, std::abs(k.first - k.second));
  return d;
}

double BivariatePolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

cplx BivariatePolynomial::evaluate(cplx z, cplx zbar) const {
  if (terms_.empty()) return 0.0;
  std::vector<cplx> zp(static_cast<size_t>(std::max(z_degree(), 0)) + 1);
  std::vector<cplx> wp(static_cast<size_t>(std::max(zbar_degree(), 0)) + 1);
  zp[0] = wp[0] = 1.0;
  for (size_t i = 1; i < zp.size(); ++i) zp[i] = zp[i - 1] * z;
  for (size_t i = 1; i < wp.size(); ++i) wp[i] = wp[i - 1] * zbar;
  cplx s = 0.0;
  for (const auto& [k, c] : terms_) s += c * zp[k.first] * wp[k.second];
  return s;
}

BivariatePolynomial BivariatePolynomial::conjugate() const {
  BivariatePolynomial out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, std::conj(c));
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(cplx s) {
  if (s == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivariatePolynomial BivariatePolynomial::shifted(int a, int b, cplx c) const {
  BivariatePolynomial out;
  for (const auto& [k, v] : terms_) out.add_term(k.first + a, k.second + b, v * c);
  return out;
}

double max_abs_difference(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  double m = 0.0;
  for (const auto& [k, c] : p.terms()) m = std::max(m, std::abs(c - q.coefficient(k.first, k.second)));
  for (const auto& [k, c] : q.terms())
    if (p.coefficient(k.first, k.second) == cplx(0.0)) m = std::max(m, std::abs(c));
  return m;
}

BivariatePolynomial wirtinger_derivative(const BivariatePolynomial& p, Wirtinger direction) {
  BivariatePolynomial out;
  for (const auto& [k, c] : p.terms()) {
    if (direction == Wirtinger::z) {
      if (k.first > 0) out.add_term(k.first - 1, k.second, c * double(k.first));
    } else {
      if (k.second > 0) out.add_term(k.first, k.second - 1, c * double(k.second));
    }
  }
  return out;
}

BivariatePolynomial one_minus_zzbar() {
  BivariatePolynomial p = BivariatePolynomial::constant(1.0);
  p.add_term(1, 1, -1.0);
  return p;
}

}  // namespace zdisc
