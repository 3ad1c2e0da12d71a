#pragma once

#include <string>
#include <vector>

#include "cspleth/partition.hpp"
#include "cspleth/wgraph.hpp"

namespace cspleth {

struct CorpusInstance {
  std::string id;
  WeightedGraph graph;
};

// Exhaustive and seeded test instances: every labeled simple graph on up
// to 4 vertices with unit weights, every weighted simple graph on up to 3
// vertices with weights in {1,2,3} less the all-unit duplicates, and 25
// pseudo-random 5-vertex graphs with weights in {1,2} and total weight at
// most 9.  Deterministic: same list every call.
std::vector<CorpusInstance> default_corpus();

// Hand-picked loop and multiedge instances, ids m1..m6.
std::vector<CorpusInstance> multigraph_instances();

// default_corpus plus multigraph_instances.
std::vector<CorpusInstance> extended_corpus();

WeightedGraph complete_graph(int n);
WeightedGraph weighted_complete_graph(const Partition& lambda);
WeightedGraph path_graph(int n);

// K6 plus a pendant vertex: 7 vertices, 16 edges.
WeightedGraph performance_graph();

}  // namespace cspleth
