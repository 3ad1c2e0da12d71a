#include "cspleth/rational.hpp"

#include <cctype>
#include <sstream>

namespace cspleth {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// The big-integer constructor rejects a leading '+'.
BigInt parse_big(const std::string& s) {
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw ExprParseError("invalid rational literal: '" + text + "'");
    }
    return Rational(parse_big(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || parse_big(den) == 0) {
    throw ExprParseError("invalid rational literal: '" + text + "'");
  }
  return Rational(parse_big(num), parse_big(den));
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace cspleth
