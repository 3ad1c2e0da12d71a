#include "cspleth/pleth_expr.hpp"

#include <cassert>
#include <cctype>

#include "cspleth/errors.hpp"

namespace cspleth {

namespace {

ExprPtr make(ExprKind kind) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = kind;
  return node;
}

}  // namespace

ExprPtr expr_one() { return make(ExprKind::One); }

ExprPtr expr_int(long long value) {
  assert(value >= 0);
  if (value == 1) return expr_one();
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Int;
  node->value = value;
  return node;
}

ExprPtr expr_param(const std::string& name) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Param;
  node->name = name;
  return node;
}

ExprPtr expr_alpha(const std::string& name, int bound) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Alpha;
  node->name = name;
  node->bound = bound;
  return node;
}

ExprPtr expr_neg(ExprPtr child) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Neg;
  node->a = std::move(child);
  return node;
}

ExprPtr expr_eps(ExprPtr child) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Eps;
  node->a = std::move(child);
  return node;
}

ExprPtr expr_sum(ExprPtr left, ExprPtr right) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Sum;
  node->a = std::move(left);
  node->b = std::move(right);
  return node;
}

ExprPtr expr_prod(ExprPtr left, ExprPtr right) {
  auto node = std::make_shared<PlethExpr>();
  node->kind = ExprKind::Prod;
  node->a = std::move(left);
  node->b = std::move(right);
  return node;
}

bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::One: return true;
    case ExprKind::Int: return x->value == y->value;
    case ExprKind::Param: return x->name == y->name;
    case ExprKind::Alpha: return x->name == y->name && x->bound == y->bound;
    case ExprKind::Neg:
    case ExprKind::Eps: return expr_equal(x->a, y->a);
    case ExprKind::Sum:
    case ExprKind::Prod:
      return expr_equal(x->a, y->a) && expr_equal(x->b, y->b);
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ExprParseError("expression parse error at position " +
                         std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000LL) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      if (eat('+')) {
        left = expr_sum(std::move(left), term());
      } else if (eat('-')) {
        left = expr_sum(std::move(left), expr_neg(term()));
      } else {
        return left;
      }
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (eat('*')) left = expr_prod(std::move(left), factor());
    return left;
  }

  ExprPtr factor() {
    if (eat('-')) return expr_neg(factor());
    return primary();
  }

  ExprPtr primary() {
    char c = peek();
    if (c == '(') {
      eat('(');
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return expr_int(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      if (name == "eps") {
        if (!eat('(')) fail("expected '(' after eps");
        ExprPtr e = expr();
        if (!eat(')')) fail("expected ')'");
        return expr_eps(std::move(e));
      }
      if (name == "q") return expr_param(name);
      if (name == "t") fail("'t' is reserved for output coefficients");
      int bound = -1;
      if (eat('[')) {
        long long b = integer();
        if (b > 1000000) fail("alphabet bound too large");
        bound = static_cast<int>(b);
        if (!eat(']')) fail("expected ']'");
      }
      return expr_alpha(name, bound);
    }
    fail("expected expression");
  }
};

// Parenthesization that makes printing a left inverse of parsing.
std::string print(const ExprPtr& e);

std::string print_wrapped(const ExprPtr& e, bool wrap) {
  std::string s = print(e);
  return wrap ? "(" + s + ")" : s;
}

std::string print(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::One:
      return "1";
    case ExprKind::Int:
      return std::to_string(e->value);
    case ExprKind::Param:
      return e->name;
    case ExprKind::Alpha:
      return e->bound < 0 ? e->name
                          : e->name + "[" + std::to_string(e->bound) + "]";
    case ExprKind::Eps:
      return "eps(" + print(e->a) + ")";
    case ExprKind::Neg:
      // A sum or product child must keep its grouping under unary minus.
      return "-" + print_wrapped(e->a, e->a->kind == ExprKind::Sum ||
                                           e->a->kind == ExprKind::Prod);
    case ExprKind::Sum: {
      std::string left = print(e->a);
      if (e->b->kind == ExprKind::Neg) {
        // "x - y" re-parses as SUM(x, NEG(y)); a sum operand of the minus
        // still needs parentheses.
        const ExprPtr& operand = e->b->a;
        return left + " - " +
               print_wrapped(operand, operand->kind == ExprKind::Sum);
      }
      return left + " + " + print_wrapped(e->b, e->b->kind == ExprKind::Sum);
    }
    case ExprKind::Prod: {
      std::string left = print_wrapped(e->a, e->a->kind == ExprKind::Sum ||
                                                 e->a->kind == ExprKind::Neg);
      std::string right =
          print_wrapped(e->b, e->b->kind == ExprKind::Sum ||
                                  e->b->kind == ExprKind::Neg ||
                                  e->b->kind == ExprKind::Prod);
      return left + "*" + right;
    }
  }
  return "";
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) { return print(e); }

}  // namespace cspleth
