#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "zdisc/polynomial.hpp"

namespace zdisc {

class ParseError : public Error {
 public:
  ParseError(size_t position, const std::string& what) : Error(ErrorCode::parse, what), position_(position) {}
  /// Zero-based character offset of the offending token.
  size_t position() const noexcept { return position_; }

 private:
  size_t position_;
};

inline constexpr int kMaxObservablePower = 64;

/// Classical observable f(z, zbar) parsed from text.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ('-' | '+') factor | atom ('^' int)?
///   atom   := 'z' | 'zbar' | 'r2' | 'i' | number ['i'] | '(' expr ')' | func '(' expr ')'
///   func   := 're' | 'im' | 'conj'
///
/// Expressions that expand to a finite table of monomials (division only by
/// constants) carry that table; quantization uses it to pick an exact rule.
class ObservableExpr {
 public:
  struct Node;

  static ObservableExpr parse(std::string_view text);

  cplx evaluate(cplx z) const;
  std::string to_string() const;

  bool is_polynomial() const { return polynomial_.has_value(); }
  /// Expanded coefficient table, when the expression is polynomial.
  const std::optional<BivariatePolynomial>& polynomial() const { return polynomial_; }
  /// Total (z, zbar)-degree of the expansion; -1 when not polynomial.
  int degree() const;
  /// True when the expansion is real on the disc (polynomial with
  /// p == conj(p) coefficient-wise). False when unknown.
  bool is_real_valued() const;

 private:
  explicit ObservableExpr(std::shared_ptr<const Node> root);
  std::shared_ptr<const Node> root_;
  std::optional<BivariatePolynomial> polynomial_;
};

}  // namespace zdisc
