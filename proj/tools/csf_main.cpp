#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cspleth/alphabet.hpp"
#include "cspleth/corpus.hpp"
#include "cspleth/csf.hpp"
#include "cspleth/errors.hpp"
#include "cspleth/pleth_expr.hpp"
#include "cspleth/plethysm.hpp"
#include "cspleth/rational.hpp"
#include "cspleth/serialize.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"
#include "cspleth/verify.hpp"
#include "cspleth/wgraph.hpp"

namespace {

using namespace cspleth;

// Flag misuse distinct from the library's domain errors; exits with the
// usage status.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A value that names an existing file is read from disk; anything else is
// taken as inline input.
std::string source_text(const std::string& value) {
  std::ifstream probe(value, std::ios::binary);
  if (probe.good()) {
    std::ostringstream buffer;
    buffer << probe.rdbuf();
    return buffer.str();
  }
  return value;
}

WeightedGraph load_graph(const std::string& value) {
  return graph_from_string(source_text(value));
}

SymFunc load_symfunc(const std::string& value) {
  std::string text = source_text(value);
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& err) {
      throw ExprParseError(std::string("bad symmetric function JSON: ") +
                           err.what());
    }
    return symfunc_from_json(j);
  }
  return symfunc_from_text(text);
}

// "3" sets the fallback; "x:3,y:2" sets per-alphabet bounds; both forms
// may be mixed, comma separated.
Bounds parse_bounds(const std::string& text) {
  Bounds bounds;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t begin = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw UsageError("empty entry in --bound");
    }
    item = item.substr(begin, end - begin + 1);
    std::string name;
    std::string number = item;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      name = item.substr(0, colon);
      number = item.substr(colon + 1);
    }
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(number, &used);
      if (used != number.size()) throw std::invalid_argument(number);
    } catch (const std::exception&) {
      throw UsageError("bad bound '" + item + "'");
    }
    if (value < 1) throw UsageError("bounds must be >= 1");
    if (name.empty()) {
      bounds.fallback = value;
    } else {
      bounds.per_name[name] = value;
    }
  }
  return bounds;
}

void collect_alpha_names(const ExprPtr& e, std::set<std::string>& names) {
  if (!e) return;
  if (e->kind == ExprKind::Alpha) names.insert(e->name);
  collect_alpha_names(e->a, names);
  collect_alpha_names(e->b, names);
}

// A per-alphabet bound for a name the expression never uses is a typo.
void check_bound_names(const ExprPtr& e, const Bounds& bounds) {
  std::set<std::string> names;
  collect_alpha_names(e, names);
  for (const auto& [name, value] : bounds.per_name) {
    if (names.count(name) == 0) {
      throw UnknownAlphabetError("--bound names alphabet '" + name +
                                 "', which the expression does not use");
    }
  }
}

std::vector<SignedVar> make_order(const VarSet& vs, const std::string& spec) {
  if (spec == "default") return default_order(vs);
  if (spec.rfind("seed:", 0) == 0) {
    std::string number = spec.substr(5);
    try {
      std::size_t used = 0;
      std::uint64_t seed = std::stoull(number, &used);
      if (used != number.size()) throw std::invalid_argument(number);
      return seeded_order(vs, seed);
    } catch (const std::exception&) {
      throw UsageError("bad seed in --order '" + spec + "'");
    }
  }
  throw UsageError("--order must be 'default' or 'seed:<k>'");
}

void emit_symfunc(const SymFunc& f, const std::string& format) {
  if (format == "json") {
    std::cout << symfunc_to_json(f).dump() << "\n";
  } else if (format == "latex") {
    std::cout << symfunc_to_latex(f) << "\n";
  } else {
    std::cout << f.to_string() << "\n";
  }
}

void emit_trunc(const TruncPoly& p, const std::string& format) {
  if (format == "json") {
    std::cout << trunc_to_json(p).dump() << "\n";
  } else if (format == "latex") {
    std::cout << trunc_to_latex(p) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

std::vector<CorpusInstance> load_corpus(const std::string& spec) {
  if (spec == "default") return {};
  Json j;
  try {
    j = Json::parse(read_file(spec));
  } catch (const Json::parse_error& err) {
    throw GraphFormatError(std::string("bad corpus JSON: ") + err.what());
  }
  if (!j.is_array()) {
    throw GraphFormatError("corpus file must be a JSON array");
  }
  std::vector<CorpusInstance> out;
  int counter = 0;
  for (const Json& entry : j) {
    if (entry.is_object() && entry.contains("graph")) {
      std::string id = entry.contains("id") && entry["id"].is_string()
                           ? entry["id"].get<std::string>()
                           : "g" + std::to_string(counter);
      out.push_back({id, graph_from_json(entry["graph"])});
    } else {
      out.push_back({"g" + std::to_string(counter), graph_from_json(entry)});
    }
    ++counter;
  }
  if (out.empty()) throw GraphFormatError("corpus file lists no graphs");
  return out;
}

int run_verify(const std::string& suite, const std::string& corpus_spec,
               int bound, std::uint64_t seed, int threads,
               const std::string& report_path) {
  if (!is_suite_name(suite)) {
    std::ostringstream names;
    for (const std::string& s : suite_names()) names << " " << s;
    throw UsageError("unknown suite '" + suite + "'; choices:" + names.str());
  }
  SuiteOptions opts;
  opts.bound = bound;
  opts.seed = seed;
  opts.threads = threads;
  opts.corpus = load_corpus(corpus_spec);
  std::vector<IdentityReport> reports = run_suite(suite, opts);

  std::map<std::string, std::pair<int, int>> tally;  // identity -> pass/total
  int failures = 0;
  for (const IdentityReport& r : reports) {
    auto& [passed, total] = tally[r.identity];
    ++total;
    if (r.pass) {
      ++passed;
    } else {
      ++failures;
    }
  }
  for (const auto& [identity, counts] : tally) {
    std::cout << identity << ": " << counts.first << "/" << counts.second
              << " passed\n";
  }
  for (const IdentityReport& r : reports) {
    if (!r.pass) {
      std::cout << "FAIL " << r.identity << " " << r.instance << ": "
                << r.witness << "\n";
    }
  }
  std::cout << "total: " << reports.size() << " checks, " << failures
            << " failures\n";

  if (!report_path.empty()) {
    Json out;
    out["suite"] = suite;
    out["bound"] = bound;
    out["seed"] = seed;
    out["failures"] = failures;
    out["checks"] = Json::array();
    for (const IdentityReport& r : reports) {
      Json item;
      item["identity"] = r.identity;
      item["instance"] = r.instance;
      item["pass"] = r.pass;
      item["witness"] = r.witness;
      out["checks"].push_back(item);
    }
    std::ofstream file(report_path, std::ios::binary);
    if (!file) throw UsageError("cannot write report to '" + report_path + "'");
    file << out.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

Json load_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
  }
  if (path.empty()) return Json::object();
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& err) {
    throw UsageError(std::string("bad config JSON: ") + err.what());
  }
  if (!j.is_object()) throw UsageError("config file must be a JSON object");
  return j;
}

int run_cli(int argc, char** argv) {
  Json config = load_config(argc, argv);
  auto config_string = [&](const char* key, std::string& target) {
    if (config.contains(key) && config[key].is_string()) {
      target = config[key].get<std::string>();
    }
  };
  auto config_int = [&](const char* key, auto& target) {
    if (config.contains(key) && config[key].is_number_integer()) {
      target = config[key].get<std::remove_reference_t<decltype(target)>>();
    }
  };

  std::string graph_value;
  std::string expr_text;
  std::string symfunc_value;
  std::string basis = "p";
  std::string format = "text";
  std::string bound_text;
  std::string order_spec = "default";
  std::string suite = "all";
  std::string corpus_spec = "default";
  std::string report_path;
  std::string config_path_sink;
  int degree = kDefaultDegreeBound;
  int vars = 3;
  int verify_bound = 3;
  std::uint64_t seed = 1;
  int threads = 0;
  std::vector<long long> eval_points;

  config_string("basis", basis);
  config_string("format", format);
  config_string("bound", bound_text);
  config_string("order", order_spec);
  config_string("suite", suite);
  config_string("corpus", corpus_spec);
  config_int("degree", degree);
  config_int("vars", vars);
  config_int("seed", seed);
  config_int("threads", threads);
  if (config.contains("bound") && config["bound"].is_number_integer()) {
    verify_bound = config["bound"].get<int>();
    bound_text = std::to_string(verify_bound);
  }

  CLI::App app{
      "Exact chromatic and Tutte symmetric functions of vertex-weighted "
      "graphs, with plethystic evaluation"};
  app.require_subcommand(1);
  app.add_option("--config", config_path_sink,
                 "JSON file of default flag values");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text, json, latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--config", config_path_sink,
                    "JSON file of default flag values");
  };

  CLI::App* compute = app.add_subcommand(
      "compute", "Chromatic symmetric function of a graph");
  compute->add_option("--graph", graph_value, "Graph file or inline text")
      ->required();
  compute->add_option("--basis", basis, "Output basis: p, e, h, m, mt")
      ->check(CLI::IsMember({"p", "e", "h", "m", "mt"}));
  compute->add_option("--degree", degree, "Degree cap for basis conversion");
  add_format(compute);

  CLI::App* xb =
      app.add_subcommand("xb", "Tutte symmetric function of a graph");
  xb->add_option("--graph", graph_value, "Graph file or inline text")
      ->required();
  xb->add_option("--basis", basis, "Output basis: p, e, h, m, mt")
      ->check(CLI::IsMember({"p", "e", "h", "m", "mt"}));
  xb->add_option("--degree", degree, "Degree cap for basis conversion");
  add_format(xb);

  CLI::App* pleth = app.add_subcommand(
      "pleth", "Plethysm of the chromatic symmetric function or of an "
               "explicit symmetric function");
  pleth->add_option("--graph", graph_value,
                    "Graph whose chromatic function is evaluated");
  pleth->add_option("--symfunc", symfunc_value,
                    "Symmetric function (JSON or text) to evaluate instead");
  pleth->add_option("--expr", expr_text, "Plethystic argument expression")
      ->required();
  pleth->add_option("--bound", bound_text,
                    "Alphabet bounds: N or name:N, comma separated")
      ->envname("CSF_DEFAULT_BOUND");
  pleth->add_option("--order", order_spec,
                    "Colour order: default or seed:<k>");
  add_format(pleth);

  CLI::App* xbpleth = app.add_subcommand(
      "xbpleth", "Plethysm of the Tutte symmetric function of a graph");
  xbpleth->add_option("--graph", graph_value, "Graph file or inline text")
      ->required();
  xbpleth->add_option("--expr", expr_text, "Plethystic argument expression")
      ->required();
  xbpleth->add_option("--bound", bound_text,
                      "Alphabet bounds: N or name:N, comma separated")
      ->envname("CSF_DEFAULT_BOUND");
  xbpleth->add_option("--order", order_spec,
                      "Colour order: default or seed:<k>");
  add_format(xbpleth);

  CLI::App* chromatic = app.add_subcommand(
      "chromatic", "Proper-colouring counts via plethystic evaluation");
  chromatic->add_option("--graph", graph_value, "Graph file or inline text")
      ->required();
  chromatic->add_option("--at", eval_points, "Colour counts to evaluate at")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Machine-check the identity suites on the corpus");
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--corpus", corpus_spec,
                     "'default' or a JSON file of graphs");
  verify->add_option("--bound", verify_bound, "Uniform alphabet bound")
      ->envname("CSF_DEFAULT_BOUND");
  verify->add_option("--seed", seed, "Base seed for seeded orders");
  verify->add_option("--threads", threads, "Worker threads; 0 = all cores");
  verify->add_option("--report", report_path, "Write a JSON report here");
  verify->add_option("--config", config_path_sink,
                     "JSON file of default flag values");

  CLI::App* expand = app.add_subcommand(
      "expand", "Expand a symmetric function into finitely many variables");
  expand->add_option("--symfunc", symfunc_value,
                     "Symmetric function (JSON or text)")
      ->required();
  expand->add_option("--vars", vars, "Number of variables")->required();
  expand->add_option("--degree", degree, "Degree cap for basis conversion");
  add_format(expand);

  CLI::App* convert = app.add_subcommand(
      "convert", "Rewrite a symmetric function in another basis");
  convert->add_option("--symfunc", symfunc_value,
                      "Symmetric function (JSON or text)")
      ->required();
  convert->add_option("--basis", basis, "Target basis: p, e, h, m, mt")
      ->required()
      ->check(CLI::IsMember({"p", "e", "h", "m", "mt"}));
  convert->add_option("--degree", degree, "Degree cap for basis conversion");
  add_format(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*compute) {
    WeightedGraph g = load_graph(graph_value);
    SymFunc x = x_via_subsets(g).to_basis(basis_from_name(basis), degree);
    emit_symfunc(x, format);
    return 0;
  }
  if (*xb) {
    WeightedGraph g = load_graph(graph_value);
    SymFunc f = xb_via_subsets(g).to_basis(basis_from_name(basis), degree);
    emit_symfunc(f, format);
    return 0;
  }
  if (*pleth) {
    if (graph_value.empty() == symfunc_value.empty()) {
      throw UsageError("pleth needs exactly one of --graph and --symfunc");
    }
    ExprPtr e = parse_expr(expr_text);
    Bounds bounds = parse_bounds(bound_text);
    check_bound_names(e, bounds);
    if (!symfunc_value.empty()) {
      SymFunc f = load_symfunc(symfunc_value);
      emit_trunc(cspleth::pleth(f, e, bounds), format);
      return 0;
    }
    WeightedGraph g = load_graph(graph_value);
    VarSet vs = var_set(e, bounds);
    emit_trunc(x_pleth_combinatorial(g, make_order(vs, order_spec)), format);
    return 0;
  }
  if (*xbpleth) {
    ExprPtr e = parse_expr(expr_text);
    Bounds bounds = parse_bounds(bound_text);
    check_bound_names(e, bounds);
    WeightedGraph g = load_graph(graph_value);
    VarSet vs = var_set(e, bounds);
    emit_trunc(xb_pleth_combinatorial(g, make_order(vs, order_spec)), format);
    return 0;
  }
  if (*chromatic) {
    WeightedGraph g = load_graph(graph_value);
    for (long long n : eval_points) {
      std::cout << rational_to_string(chromatic_polynomial(g, n)) << "\n";
    }
    return 0;
  }
  if (*verify) {
    return run_verify(suite, corpus_spec, verify_bound, seed, threads,
                      report_path);
  }
  if (*expand) {
    SymFunc f = load_symfunc(symfunc_value);
    emit_trunc(f.expand(vars, "x", degree), format);
    return 0;
  }
  if (*convert) {
    SymFunc f = load_symfunc(symfunc_value);
    emit_symfunc(f.to_basis(basis_from_name(basis), degree), format);
    return 0;
  }
  throw UsageError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const GraphFormatError& e) {
    std::cerr << "graph error: " << e.what() << "\n";
    return 3;
  } catch (const ExprParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const UnknownAlphabetError& e) {
    std::cerr << "alphabet error: " << e.what() << "\n";
    return 5;
  } catch (const UnboundedAlphabetError& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return 6;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 7;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
