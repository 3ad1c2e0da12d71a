#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cspleth/corpus.hpp"
#include "cspleth/csf.hpp"
#include "cspleth/verify.hpp"

using namespace cspleth;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

int g_failed_criteria = 0;

void report(int criterion, bool pass, const std::string& detail, double secs) {
  std::printf("criterion %d: %s (%s, %.1fs)\n", criterion,
              pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failed_criteria;
}

// Runs the named suites on the built-in corpus and folds their reports into
// one pass/fail with a check tally.
bool suites_pass(const std::vector<std::string>& names, std::string& detail) {
  SuiteOptions opts;
  int checks = 0;
  int failures = 0;
  for (const std::string& name : names) {
    for (const IdentityReport& r : run_suite(name, opts)) {
      ++checks;
      if (!r.pass) {
        ++failures;
        if (failures == 1) {
          std::printf("  first failure: %s %s: %s\n", r.identity.c_str(),
                      r.instance.c_str(), r.witness.c_str());
        }
      }
    }
  }
  detail = std::to_string(checks) + " checks";
  if (failures > 0) detail += ", " + std::to_string(failures) + " failed";
  return failures == 0;
}

void run_criterion(int criterion, const std::vector<std::string>& suites,
                   double limit_secs = 0.0) {
  Timer timer;
  std::string detail;
  bool pass = suites_pass(suites, detail);
  double secs = timer.seconds();
  if (limit_secs > 0.0 && secs >= limit_secs) {
    pass = false;
    detail += ", over " + std::to_string(static_cast<int>(limit_secs)) + "s limit";
  }
  report(criterion, pass, detail, secs);
}

void run_property_criterion(int argc, char** argv) {
  Timer timer;
  doctest::Context ctx(argc, argv);
  ctx.addFilter("test-suite", "properties");
  ctx.setOption("out", "acceptance_properties.log");
  bool pass = ctx.run() == 0;
  report(8, pass,
         pass ? "randomized property suite"
              : "see acceptance_properties.log",
         timer.seconds());
}

void run_timing_criterion() {
  Timer subsets_timer;
  SymFunc perf = x_via_subsets(performance_graph());
  double subsets_secs = subsets_timer.seconds();

  WeightedGraph k5 = complete_graph(5);
  Timer delcon_timer;
  SymFunc k5_delcon = x_via_delcon(k5);
  double delcon_secs = delcon_timer.seconds();

  bool pass = subsets_secs < 5.0 && delcon_secs < 1.0 && !perf.is_zero() &&
              k5_delcon.equals(x_via_subsets(k5));
  char detail[128];
  std::snprintf(detail, sizeof detail, "subsets %.2fs, delcon %.2fs",
                subsets_secs, delcon_secs);
  report(9, pass, detail, subsets_secs + delcon_secs);
}

}  // namespace

int main(int argc, char** argv) {
  run_criterion(1, {"three_way"}, 10.0);
  run_criterion(2, {"pleth_x"}, 120.0);
  run_criterion(3, {"pleth_xb"}, 300.0);
  run_criterion(4, {"worked_examples"});
  run_criterion(5,
                {"coproduct", "convolution", "omega_ascent", "superification",
                 "source", "two_x"},
                300.0);
  run_criterion(6, {"xb_coproduct", "xb_antipode"});
  run_criterion(7, {"ordering"});
  run_property_criterion(argc, argv);
  run_timing_criterion();
  std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failed_criteria);
  return g_failed_criteria;
}
