#include "zdisc/observable.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace zdisc {

enum class NodeKind { constant, var_z, var_zbar, var_r2, add, sub, mul, div, neg, pow, fn_re, fn_im, fn_conj };

struct ObservableExpr::Node {
  NodeKind kind;
  cplx value{0.0};
  int exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ObservableExpr::Node>;

NodePtr make(NodeKind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<ObservableExpr::Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_const(cplx v) {
  auto n = std::make_shared<ObservableExpr::Node>();
  n->kind = NodeKind::constant;
  n->value = v;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream os;
    os << "syntax error at position " << pos_ << ": " << msg;
    throw ParseError(pos_, os.str());
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    auto left = term();
    for (;;) {
      if (accept('+')) left = make(NodeKind::add, left, term());
      else if (accept('-')) left = make(NodeKind::sub, left, term());
      else return left;
    }
  }

  NodePtr term() {
    auto left = factor();
    for (;;) {
      if (accept('*')) left = make(NodeKind::mul, left, factor());
      else if (accept('/')) left = make(NodeKind::div, left, factor());
      else return left;
    }
  }

  NodePtr factor() {
    if (accept('-')) return make(NodeKind::neg, factor());
    if (accept('+')) return factor();
    auto base = atom();
    if (accept('^')) {
      skip();
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected a non-negative integer exponent");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 6 || std::stoi(digits) > kMaxObservablePower) {
        std::ostringstream os;
        os << "exponent " << digits << " at position " << start << " exceeds the maximum power " << kMaxObservablePower;
        throw Error(ErrorCode::overflow, os.str());
      }
      auto n = std::make_shared<ObservableExpr::Node>();
      n->kind = NodeKind::pow;
      n->lhs = base;
      n->exponent = std::stoi(digits);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      if (id == "z") return make(NodeKind::var_z);
      if (id == "zbar") return make(NodeKind::var_zbar);
      if (id == "r2") return make(NodeKind::var_r2);
      if (id == "i") return make_const(cplx(0.0, 1.0));
      NodeKind fn;
      if (id == "re") fn = NodeKind::fn_re;
      else if (id == "im") fn = NodeKind::fn_im;
      else if (id == "conj") fn = NodeKind::fn_conj;
      else {
        pos_ = start;
        error("unknown identifier '" + std::string(id) + "'");
      }
      expect('(');
      auto arg = expr();
      expect(')');
      return make(fn, arg);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const size_t start = pos_;
    auto digits = [&] {
      const size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ - b;
    };
    size_t count = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) error("malformed number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      const size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;
    }
    const double v = std::strtod(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr);
    // imaginary suffix: 'i' not followed by another identifier character
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return make_const(cplx(0.0, v));
    }
    return make_const(v);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

cplx eval(const ObservableExpr::Node& n, cplx z) {
  switch (n.kind) {
    case NodeKind::constant: return n.value;
    case NodeKind::var_z: return z;
    case NodeKind::var_zbar: return std::conj(z);
    case NodeKind::var_r2: return std::norm(z);
    case NodeKind::add: return eval(*n.lhs, z) + eval(*n.rhs, z);
    case NodeKind::sub: return eval(*n.lhs, z) - eval(*n.rhs, z);
    case NodeKind::mul: return eval(*n.lhs, z) * eval(*n.rhs, z);
    case NodeKind::div: {
      const cplx d = eval(*n.rhs, z);
      if (d == cplx(0.0)) {
        std::ostringstream os;
        os << "observable: zero denominator at z = " << z;
        throw Error(ErrorCode::evaluation, os.str());
      }
      return eval(*n.lhs, z) / d;
    }
    case NodeKind::neg: return -eval(*n.lhs, z);
    case NodeKind::pow: return ipow(eval(*n.lhs, z), n.exponent);
    case NodeKind::fn_re: return eval(*n.lhs, z).real();
    case NodeKind::fn_im: return eval(*n.lhs, z).imag();
    case NodeKind::fn_conj: return std::conj(eval(*n.lhs, z));
  }
  return 0.0;
}

constexpr int kMaxExpansionDegree = 256;

std::optional<BivariatePolynomial> capped(BivariatePolynomial p) {
  if (p.total_degree() > kMaxExpansionDegree) return std::nullopt;
  return p;
}

std::optional<BivariatePolynomial> expand(const ObservableExpr::Node& n) {
  using P = BivariatePolynomial;
  switch (n.kind) {
    case NodeKind::constant: return P::constant(n.value);
    case NodeKind::var_z: return P::monomial(1, 0);
    case NodeKind::var_zbar: return P::monomial(0, 1);
    case NodeKind::var_r2: return P::monomial(1, 1);
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul: {
      auto a = expand(*n.lhs);
      if (!a) return std::nullopt;
      auto b = expand(*n.rhs);
      if (!b) return std::nullopt;
      if (n.kind == NodeKind::add) return *a + *b;
      if (n.kind == NodeKind::sub) return *a - *b;
      if (a->total_degree() + b->total_degree() > kMaxExpansionDegree) return std::nullopt;
      return *a * *b;
    }
    case NodeKind::div: {
      auto a = expand(*n.lhs);
      auto b = expand(*n.rhs);
      if (!a || !b || b->total_degree() != 0) return std::nullopt;
      return *a * (1.0 / b->coefficient(0, 0));
    }
    case NodeKind::neg: {
      auto a = expand(*n.lhs);
      if (!a) return std::nullopt;
      return *a * cplx(-1.0);
    }
    case NodeKind::pow: {
      auto base = expand(*n.lhs);
      if (!base) return std::nullopt;
      if (std::max(base->total_degree(), 0) * n.exponent > kMaxExpansionDegree) return std::nullopt;
      P r = P::constant(1.0);
      for (int k = 0; k < n.exponent; ++k) r = r * *base;
      return capped(r);
    }
    case NodeKind::fn_re: {
      auto a = expand(*n.lhs);
      if (!a) return std::nullopt;
      return (*a + a->conjugate()) * cplx(0.5);
    }
    case NodeKind::fn_im: {
      auto a = expand(*n.lhs);
      if (!a) return std::nullopt;
      return (*a - a->conjugate()) * cplx(0.0, -0.5);
    }
    case NodeKind::fn_conj: {
      auto a = expand(*n.lhs);
      if (!a) return std::nullopt;
      return a->conjugate();
    }
  }
  return std::nullopt;
}

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::pow: return 4;
    default: return 5;
  }
}

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string print(const ObservableExpr::Node& n);

std::string wrap(const ObservableExpr::Node& n, bool parens) { return parens ? "(" + print(n) + ")" : print(n); }

std::string print(const ObservableExpr::Node& n) {
  switch (n.kind) {
    case NodeKind::constant: {
      const double re = n.value.real(), im = n.value.imag();
      if (im == 0.0) return re < 0.0 ? "(" + number_text(re) + ")" : number_text(re);
      if (re == 0.0) return im < 0.0 ? "(-" + number_text(-im) + "i)" : number_text(im) + "i";
      return "(" + number_text(re) + (im < 0.0 ? " - " : " + ") + number_text(std::abs(im)) + "i)";
    }
    case NodeKind::var_z: return "z";
    case NodeKind::var_zbar: return "zbar";
    case NodeKind::var_r2: return "r2";
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div: {
      const int p = precedence(n.kind);
      const char* op = n.kind == NodeKind::add ? " + " : n.kind == NodeKind::sub ? " - " : n.kind == NodeKind::mul ? " * " : " / ";
      return wrap(*n.lhs, precedence(n.lhs->kind) < p) + op + wrap(*n.rhs, precedence(n.rhs->kind) <= p);
    }
    case NodeKind::neg: return "-" + wrap(*n.lhs, precedence(n.lhs->kind) < 3);
    case NodeKind::pow: return wrap(*n.lhs, precedence(n.lhs->kind) < 5) + "^" + std::to_string(n.exponent);
    case NodeKind::fn_re: return "re(" + print(*n.lhs) + ")";
    case NodeKind::fn_im: return "im(" + print(*n.lhs) + ")";
    case NodeKind::fn_conj: return "conj(" + print(*n.lhs) + ")";
  }
  return "?";
}

}  // namespace

ObservableExpr::ObservableExpr(std::shared_ptr<const Node> root) : root_(std::move(root)), polynomial_(expand(*root_)) {}

ObservableExpr ObservableExpr::parse(std::string_view text) { return ObservableExpr(Parser(text).parse()); }

cplx ObservableExpr::evaluate(cplx z) const { return eval(*root_, z); }

std::string ObservableExpr::to_string() const { return print(*root_); }

int ObservableExpr::degree() const {
  if (!polynomial_) return -1;
  return std::max(polynomial_->total_degree(), 0);
}

bool ObservableExpr::is_real_valued() const {
  if (!polynomial_) return false;
  const double scale = std::max(1.0, polynomial_->max_abs_coefficient());
  return max_abs_difference(*polynomial_, polynomial_->conjugate()) <= 1e-14 * scale;
}

}  // namespace zdisc
