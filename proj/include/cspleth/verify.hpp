#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cspleth/corpus.hpp"
#include "cspleth/partition.hpp"
#include "cspleth/pleth_expr.hpp"

namespace cspleth {

// One identity checked on one instance.  The witness pins the first
// differing coefficient (merged-universe key order) so a failure names a
// concrete monomial rather than a pair of megabyte polynomials.
struct IdentityReport {
  std::string identity;
  std::string instance;
  bool pass = false;
  std::string witness;  // empty on pass
};

// The ten stock expressions the plethysm suites evaluate: constants, a
// negated constant, bounded and unbounded alphabets, negation, epsilon, a
// sum, a parameter multiple, an integer multiple, and a product.
std::vector<ExprPtr> stock_expressions();

// Chromatic symmetric function by three disjoint routes.
IdentityReport check_three_way(const CorpusInstance& inst);
// Tutte symmetric function by three disjoint routes.
IdentityReport check_xb_three_way(const CorpusInstance& inst);

// Orientation-colouring enumeration against the algebraic oracle
// pleth(X, e); all alphabets bounded by `bound`.
IdentityReport check_pleth_x(const CorpusInstance& inst, const ExprPtr& e,
                             int bound);
// Biorientation enumeration against pleth(XB, e), plus the t = -1
// specialization against the chromatic enumeration.
IdentityReport check_pleth_xb(const CorpusInstance& inst, const ExprPtr& e,
                              int bound);

// X[1] is an indicator for edgelessness, X[-1] counts acyclic orientations
// up to sign, and X[n] for n = 1..4 matches the classical chromatic
// polynomial by deletion-contraction.
IdentityReport check_worked_examples(const CorpusInstance& inst);

// X of the whole graph on f + h against the sum over vertex bipartitions
// of the product of induced-subgraph evaluations.
IdentityReport check_coproduct(const CorpusInstance& inst, const ExprPtr& f,
                               const ExprPtr& h, int bound);
IdentityReport check_xb_coproduct(const CorpusInstance& inst, const ExprPtr& f,
                                  const ExprPtr& h, int bound);

// e_n[f+h] four ways: algebraic sum, algebraic convolution, complete-graph
// enumeration, complete-graph convolution.
IdentityReport check_e_convolution(int n, const ExprPtr& f, const ExprPtr& h,
                                   int bound);
// h_n[f+h] likewise; the graph routes negate the arguments.
IdentityReport check_h_convolution(int n, const ExprPtr& f, const ExprPtr& h,
                                   int bound);
// Augmented-monomial convolution: the weighted complete graph on lambda
// against the sum over submultisets of lambda's parts.
IdentityReport check_mtilde_convolution(const Partition& lambda,
                                        const ExprPtr& f, const ExprPtr& h,
                                        int bound);

// Sign-adjusted omega image of X as a weak-ascent enumeration.
IdentityReport check_omega_ascent(const CorpusInstance& inst, int bound);
// X[x - eps(y)] as a signed enumeration over positive and negative colours.
IdentityReport check_superification(const CorpusInstance& inst, int bound);
// (-1)^(w(G)-|V|) omega(X) as a sum of power sums indexed by source
// components, under the given labeling and its reversal.
IdentityReport check_source_components(const CorpusInstance& inst);
// (-1)^(w(G)-|V|) omega(X)[x+y] as a zero-colour source-component
// enumeration, under the given labeling and its reversal.
IdentityReport check_source_pleth(const CorpusInstance& inst, int bound);
// X[x+x] against the bipartite-blocks expansion with component powers of 2.
IdentityReport check_two_x(const CorpusInstance& inst, int bound);
// XB[-x] against the edge-subset contraction sum with (1+t) weights.
IdentityReport check_xb_antipode(const CorpusInstance& inst, int bound);

// Both enumeration sums recomputed under `count` seeded colour orders.
IdentityReport check_ordering(const CorpusInstance& inst, const ExprPtr& e,
                              int bound, std::uint64_t seed, int count);

struct SuiteOptions {
  int bound = 3;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 picks the hardware concurrency
  // Replaces the built-in corpus for the graph-indexed suites when
  // nonempty; the convolution suite ignores it.
  std::vector<CorpusInstance> corpus;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite (or "all") as a parallel map over its instances; reports
// come back sorted by instance descriptor, so identical inputs give
// byte-identical report lists regardless of thread count.
std::vector<IdentityReport> run_suite(const std::string& name,
                                      const SuiteOptions& opts);

}  // namespace cspleth
