#include "cspleth/serialize.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "cspleth/errors.hpp"
#include "cspleth/rational.hpp"

namespace cspleth {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool valid_graph_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

int require_positive_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw GraphFormatError(what + " must be a positive integer");
  }
  long long v = j.get<long long>();
  if (v > 1000000) throw GraphFormatError(what + " is implausibly large");
  return static_cast<int>(v);
}

}  // namespace

Json graph_to_json(const WeightedGraph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    Json entry;
    entry["id"] = g.ids[static_cast<std::size_t>(v)];
    entry["weight"] = g.weights[static_cast<std::size_t>(v)];
    vertices.push_back(entry);
  }
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) {
    edges.push_back(Json::array({g.ids[static_cast<std::size_t>(u)],
                                 g.ids[static_cast<std::size_t>(v)]}));
  }
  Json out;
  out["vertices"] = vertices;
  out["edges"] = edges;
  return out;
}

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw GraphFormatError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw GraphFormatError("graph JSON needs a \"vertices\" array");
  }
  WeightedGraph g;
  for (const Json& entry : j["vertices"]) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string()) {
      throw GraphFormatError("each vertex needs a string \"id\"");
    }
    std::string id = entry["id"].get<std::string>();
    if (!valid_graph_id(id)) {
      throw GraphFormatError("vertex id '" + id +
                             "' may use only letters, digits, and '_'");
    }
    int weight = 1;
    if (entry.contains("weight")) {
      weight = require_positive_int(entry["weight"], "weight of '" + id + "'");
    }
    g.add_vertex(id, weight);
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      throw GraphFormatError("\"edges\" must be an array");
    }
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string()) {
        throw GraphFormatError("each edge must be a pair of vertex ids");
      }
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return g;
}

WeightedGraph graph_from_text(const std::string& text) {
  std::string body = trimmed(text);
  std::string vertex_part = body;
  std::string edge_part;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    vertex_part = body.substr(0, slash);
    edge_part = body.substr(slash + 1);
    if (edge_part.find('/') != std::string::npos) {
      throw GraphFormatError("graph text has more than one '/'");
    }
  }
  WeightedGraph g;
  for (const std::string& raw : split(vertex_part, ';')) {
    std::string spec = trimmed(raw);
    if (spec.empty()) {
      throw GraphFormatError("empty vertex entry in graph text");
    }
    std::string id = spec;
    int weight = 1;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
      id = trimmed(spec.substr(0, colon));
      std::string w = trimmed(spec.substr(colon + 1));
      try {
        std::size_t used = 0;
        weight = std::stoi(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw GraphFormatError("bad weight '" + w + "' for vertex '" + id +
                               "'");
      }
    }
    if (!valid_graph_id(id)) {
      throw GraphFormatError("vertex id '" + id +
                             "' may use only letters, digits, and '_'");
    }
    g.add_vertex(id, weight);
  }
  std::istringstream edges(edge_part);
  std::string token;
  while (edges >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == token.size() ||
        token.find('-', dash + 1) != std::string::npos) {
      throw GraphFormatError("bad edge token '" + token +
                             "'; expected 'a-b'");
    }
    g.add_edge(token.substr(0, dash), token.substr(dash + 1));
  }
  return g;
}

std::string graph_to_text(const WeightedGraph& g) {
  std::string out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v > 0) out += "; ";
    out += g.ids[static_cast<std::size_t>(v)];
    out += ':';
    out += std::to_string(g.weights[static_cast<std::size_t>(v)]);
  }
  if (!g.edges.empty()) {
    out += " /";
    for (const auto& [u, v] : g.edges) {
      out += ' ';
      out += g.ids[static_cast<std::size_t>(u)];
      out += '-';
      out += g.ids[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

WeightedGraph graph_from_string(const std::string& text) {
  std::string body = trimmed(text);
  if (!body.empty() && body.front() == '{') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& err) {
      throw GraphFormatError(std::string("bad graph JSON: ") + err.what());
    }
    return graph_from_json(j);
  }
  return graph_from_text(body);
}

Json coeff_to_json(const CoeffPoly& c) {
  if (c.is_constant()) return rational_to_string(c.constant_value());
  Json out = Json::array();
  for (const auto& [exp, value] : c.terms()) {
    Json term;
    if (exp.q != 0) term["q"] = exp.q;
    if (exp.t != 0) term["t"] = exp.t;
    term["value"] = rational_to_string(value);
    out.push_back(term);
  }
  return out;
}

CoeffPoly coeff_from_json(const Json& j) {
  try {
    if (j.is_string()) return CoeffPoly(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return CoeffPoly(j.get<long long>());
    if (j.is_array()) {
      CoeffPoly out;
      for (const Json& term : j) {
        if (!term.is_object() || !term.contains("value")) {
          throw ExprParseError(
              "coefficient monomial needs a \"value\" string");
        }
        ParamExp exp;
        if (term.contains("q")) exp.q = term["q"].get<int>();
        if (term.contains("t")) exp.t = term["t"].get<int>();
        if (exp.q < 0 || exp.t < 0) {
          throw ExprParseError("parameter exponents must be >= 0");
        }
        Rational value = term["value"].is_string()
                             ? parse_rational(term["value"].get<std::string>())
                             : Rational(term["value"].get<long long>());
        out += CoeffPoly::monomial(exp, value);
      }
      return out;
    }
  } catch (const Json::exception& err) {
    throw ExprParseError(std::string("bad coefficient JSON: ") + err.what());
  }
  throw ExprParseError("coefficient must be a rational string or a list of "
                       "{q, t, value} monomials");
}

Json symfunc_to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : f.terms()) {
    Json term;
    term["partition"] = Json::array();
    for (int part : index.parts()) term["partition"].push_back(part);
    term["coeff"] = coeff_to_json(coeff);
    terms.push_back(term);
  }
  Json out;
  out["basis"] = basis_name(f.basis());
  out["terms"] = terms;
  return out;
}

SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_string() ||
      !j.contains("terms") || !j["terms"].is_array()) {
    throw ExprParseError(
        "symmetric function JSON needs \"basis\" and \"terms\"");
  }
  SymFunc f(basis_from_name(j["basis"].get<std::string>()));
  for (const Json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("partition") ||
        !term["partition"].is_array() || !term.contains("coeff")) {
      throw ExprParseError("each term needs \"partition\" and \"coeff\"");
    }
    std::vector<int> parts;
    for (const Json& p : term["partition"]) {
      if (!p.is_number_integer() || p.get<long long>() < 1) {
        throw ExprParseError("partition parts must be positive integers");
      }
      parts.push_back(p.get<int>());
    }
    f.add_term(Partition(parts), coeff_from_json(term["coeff"]));
  }
  return f;
}

namespace {

// Term grammar: sign? rational? basis '[' parts? ']' | sign? rational.
struct SymFuncTextParser {
  std::string text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ExprParseError("bad symmetric function at position " +
                         std::to_string(pos) + ": " + why);
  }

  std::string lex_number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos < text.size() && text[pos] == '/') {
      std::size_t slash = pos;
      ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == slash + 1) fail("missing denominator");
    }
    return text.substr(start, pos - start);
  }

  SymFunc parse() {
    SymFunc result;
    bool have_basis = false;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_space();
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_space();
      if (pos == text.size()) fail("dangling sign");
      Rational coeff = 1;
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = parse_rational(lex_number());
        have_number = true;
      }
      skip_space();
      Partition index(std::vector<int>{});
      bool have_generator = false;
      if (pos < text.size() &&
          std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() &&
               std::isalpha(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        std::string name = text.substr(start, pos - start);
        Basis basis = basis_from_name(name);
        if (!have_basis) {
          result = SymFunc(basis);
          have_basis = true;
        } else if (basis != result.basis()) {
          fail("mixed bases '" + basis_name(result.basis()) + "' and '" +
               name + "'");
        }
        skip_space();
        if (pos == text.size() || text[pos] != '[') fail("expected '['");
        ++pos;
        std::vector<int> parts;
        skip_space();
        if (pos < text.size() && text[pos] != ']') {
          while (true) {
            std::string num = lex_number();
            if (num.empty() || num.size() > 6 ||
                num.find('/') != std::string::npos || std::stoi(num) < 1) {
              fail("partition parts must be positive integers");
            }
            parts.push_back(std::stoi(num));
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
              ++pos;
              continue;
            }
            break;
          }
        }
        if (pos == text.size() || text[pos] != ']') fail("expected ']'");
        ++pos;
        index = Partition(parts);
        have_generator = true;
      }
      if (!have_generator && !have_number) {
        fail("expected a coefficient or a basis term");
      }
      result.add_term(index, CoeffPoly(sign < 0 ? -coeff : coeff));
      first = false;
    }
    if (first) throw ExprParseError("empty symmetric function");
    return result;
  }
};

}  // namespace

SymFunc symfunc_from_text(const std::string& text) {
  SymFuncTextParser parser{text};
  return parser.parse();
}

Json trunc_to_json(const TruncPoly& p) {
  Json vars = Json::array();
  for (const VarId& v : p.vars()) {
    Json entry;
    entry["name"] = v.name;
    entry["index"] = v.index;
    vars.push_back(entry);
  }
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json term;
    term["exps"] = exps;
    term["coeff"] = coeff_to_json(coeff);
    terms.push_back(term);
  }
  Json out;
  out["vars"] = vars;
  out["terms"] = terms;
  return out;
}

TruncPoly trunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j["vars"].is_array() ||
      !j.contains("terms") || !j["terms"].is_array()) {
    throw ExprParseError("polynomial JSON needs \"vars\" and \"terms\"");
  }
  std::vector<VarId> universe;
  for (const Json& v : j["vars"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string() ||
        !v.contains("index") || !v["index"].is_number_integer()) {
      throw ExprParseError("each var needs a \"name\" and an \"index\"");
    }
    universe.push_back(
        VarId{v["name"].get<std::string>(), v["index"].get<int>()});
  }
  TruncPoly p(universe);
  for (const Json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("exps") ||
        !term["exps"].is_array() || term["exps"].size() != universe.size() ||
        !term.contains("coeff")) {
      throw ExprParseError(
          "each term needs \"exps\" matching vars and a \"coeff\"");
    }
    std::vector<int> exps;
    for (const Json& e : term["exps"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw ExprParseError("exponents must be >= 0");
      }
      exps.push_back(e.get<int>());
    }
    p.add_term(exps, coeff_from_json(term["coeff"]));
  }
  return p;
}

namespace {

std::string rational_to_latex(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  std::string sign = num < 0 ? "-" : "";
  BigInt mag = num < 0 ? BigInt(-num) : num;
  return sign + "\\frac{" + mag.str() + "}{" + den.str() + "}";
}

std::string param_monomial_latex(const ParamExp& exp) {
  std::string out;
  if (exp.q == 1) {
    out += "q";
  } else if (exp.q > 1) {
    out += "q^{" + std::to_string(exp.q) + "}";
  }
  if (exp.t == 1) {
    out += "t";
  } else if (exp.t > 1) {
    out += "t^{" + std::to_string(exp.t) + "}";
  }
  return out;
}

// Renders one term of a larger sum: magnitude into `out`, sign separately.
// A unit rational in front of a nonempty tail is dropped.
void append_signed(std::string& out, bool& first, const Rational& value,
                   const std::string& tail) {
  Rational mag = value < 0 ? Rational(-value) : value;
  bool negative = value < 0;
  if (first) {
    if (negative) out += "-";
    first = false;
  } else {
    out += negative ? " - " : " + ";
  }
  std::string mag_str = rational_to_latex(mag);
  if (tail.empty()) {
    out += mag_str;
  } else if (mag == 1) {
    out += tail;
  } else {
    out += mag_str + tail;
  }
}

}  // namespace

std::string coeff_to_latex(const CoeffPoly& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, value] : c.terms()) {
    append_signed(out, first, value, param_monomial_latex(exp));
  }
  return out;
}

std::string symfunc_to_latex(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string symbol;
  switch (f.basis()) {
    case Basis::P: symbol = "p"; break;
    case Basis::E: symbol = "e"; break;
    case Basis::H: symbol = "h"; break;
    case Basis::M: symbol = "m"; break;
    case Basis::MTilde: symbol = "\\widetilde{m}"; break;
  }
  std::string out;
  bool first = true;
  for (const auto& [index, coeff] : f.terms()) {
    std::string tail;
    if (!index.parts().empty()) {
      tail = symbol + "_{(";
      for (std::size_t i = 0; i < index.parts().size(); ++i) {
        if (i > 0) tail += ",";
        tail += std::to_string(index.parts()[i]);
      }
      tail += ")}";
    }
    if (coeff.is_constant()) {
      append_signed(out, first, coeff.constant_value(), tail);
    } else {
      if (!first) out += " + ";
      first = false;
      out += "\\left(" + coeff_to_latex(coeff) + "\\right)";
      out += tail.empty() ? "" : tail;
    }
  }
  return out;
}

std::string trunc_to_latex(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms()) {
    std::string tail;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      const VarId& v = p.vars()[i];
      tail += v.name + "_{" + std::to_string(v.index) + "}";
      if (exps[i] > 1) tail += "^{" + std::to_string(exps[i]) + "}";
    }
    if (coeff.is_constant()) {
      append_signed(out, first, coeff.constant_value(), tail);
    } else {
      if (!first) out += " + ";
      first = false;
      out += "\\left(" + coeff_to_latex(coeff) + "\\right)";
      out += tail.empty() ? "" : tail;
    }
  }
  return out;
}

}  // namespace cspleth
