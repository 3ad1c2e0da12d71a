#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cspleth/partition.hpp"

namespace cspleth {

// Vertex-weighted multigraph with loops.  Vertices keep insertion order;
// the label of vertex i is i + 1, which fixes source-component peeling.
// Edges are index pairs with first <= second, in a stable list order so
// multiedge copies stay distinguishable.
struct WeightedGraph {
  std::vector<std::string> ids;
  std::vector<int> weights;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(ids.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int total_weight() const;
  int index_of(const std::string& id) const;  // -1 when absent
  void add_vertex(const std::string& id, int weight);
  void add_edge(const std::string& a, const std::string& b);
  void add_edge_by_index(int a, int b);
  bool is_loop(int edge_index) const;
  bool has_loop() const;

  // Canonical memoization key: weights plus edge list over indices.
  std::string signature() const;
};

WeightedGraph delete_edge(const WeightedGraph& g, int edge_index);

// Merges the endpoints into the first one (its id and position survive),
// sums the weights, turns other parallel copies of the contracted edge
// into loops, and keeps every remaining edge in list order.  Contracting
// a loop deletes it and leaves weights alone.
WeightedGraph contract_edge(const WeightedGraph& g, int edge_index);

// Directed acyclicity over explicit arcs; a self-arc counts as a cycle.
bool arcs_acyclic(int n, const std::vector<std::pair<int, int>>& arcs);

// Per-edge entry: 0 keeps the stored direction, 1 reverses it.  A loop
// admits no acyclic direction either way.
using Orientation = std::vector<int>;

bool orientation_acyclic(const WeightedGraph& g, const Orientation& o);
std::vector<Orientation> acyclic_orientations(const WeightedGraph& g);

// Per-edge entry: 0 forward, 1 backward, 2 both directions.  Acyclic means
// no directed cycle using at least one singly directed edge; all-bidirected
// cycles are allowed, and a loop is admissible only as bidirected.
using Biorientation = std::vector<int>;
inline constexpr int kBothDirections = 2;

bool biorientation_acyclic(const WeightedGraph& g, const Biorientation& b);
std::vector<Biorientation> acyclic_biorientations(const WeightedGraph& g);

// Greedy peeling of an acyclic orientation: the next component is every
// remaining vertex reachable from the minimum remaining label.  lambda
// holds the component total weights, sorted.
struct SourceDecomposition {
  std::vector<std::vector<int>> components;
  Partition lambda;
};

SourceDecomposition source_components(const WeightedGraph& g,
                                      const Orientation& o);

// All set partitions of {0..n-1} as restricted-growth assignment vectors,
// in lexicographic order.
std::vector<std::vector<int>> set_partitions(int n);

int internal_edge_count(const WeightedGraph& g, const std::vector<int>& assign);
bool partition_stable(const WeightedGraph& g, const std::vector<int>& assign);
Partition partition_lambda(const WeightedGraph& g,
                           const std::vector<int>& assign);

// lambda(S): component total weights of the spanning subgraph keeping the
// flagged edges.
Partition components_lambda(const WeightedGraph& g,
                            const std::vector<bool>& edge_in);

std::vector<std::vector<int>> connected_components(const WeightedGraph& g);

// Subgraph on the given vertex indices (ascending), edges kept in order.
WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<int>& keep);

// Same graph with the vertex list (and so the labels) reversed.
WeightedGraph relabel_reversed(const WeightedGraph& g);

// Both operate on the subgraph induced by the given vertex set.  A loop
// makes the subgraph non-bipartite.
std::vector<std::vector<int>> induced_components(const WeightedGraph& g,
                                                 const std::vector<int>& block);
bool induced_bipartite(const WeightedGraph& g, const std::vector<int>& block);

}  // namespace cspleth
