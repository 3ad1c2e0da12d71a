#pragma once

#include <memory>
#include <string>

namespace cspleth {

// Expression appearing inside plethystic brackets.  INT(1) is normalized to
// ONE at construction so parsing and printing round-trip exactly.
enum class ExprKind { One, Int, Param, Alpha, Neg, Eps, Sum, Prod };

struct PlethExpr;
using ExprPtr = std::shared_ptr<const PlethExpr>;

struct PlethExpr {
  ExprKind kind;
  long long value = 0;     // Int: >= 0 and != 1
  std::string name;        // Param / Alpha
  int bound = -1;          // Alpha: -1 means unbounded
  ExprPtr a, b;            // children (Neg/Eps use a only)
};

ExprPtr expr_one();
ExprPtr expr_int(long long value);  // value >= 0
ExprPtr expr_param(const std::string& name);
ExprPtr expr_alpha(const std::string& name, int bound = -1);
ExprPtr expr_neg(ExprPtr child);
ExprPtr expr_eps(ExprPtr child);
ExprPtr expr_sum(ExprPtr left, ExprPtr right);
ExprPtr expr_prod(ExprPtr left, ExprPtr right);

bool expr_equal(const ExprPtr& x, const ExprPtr& y);

// Grammar:  expr := term (('+'|'-') term)*
//           term := factor ('*' factor)*
//           factor := '-' factor | primary
//           primary := INT | 'eps' '(' expr ')' | IDENT ('[' INT ']')?
//                    | '(' expr ')'
// 'q' names the formal parameter; 't' is reserved for output coefficients
// and rejected; any other identifier names an alphabet.
ExprPtr parse_expr(const std::string& text);

// Canonical form; parse_expr(print_expr(e)) reproduces e node for node.
std::string print_expr(const ExprPtr& e);

}  // namespace cspleth
