#include "cspleth/corpus.hpp"

#include <random>

namespace cspleth {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

WeightedGraph from_mask(const std::vector<int>& weights, unsigned mask) {
  WeightedGraph g;
  int n = static_cast<int>(weights.size());
  for (int i = 0; i < n; ++i) {
    g.add_vertex("v" + std::to_string(i + 1), weights[static_cast<std::size_t>(i)]);
  }
  auto pairs = vertex_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1U) g.add_edge_by_index(pairs[k].first, pairs[k].second);
  }
  return g;
}

}  // namespace

std::vector<CorpusInstance> default_corpus() {
  std::vector<CorpusInstance> out;
  for (int n = 1; n <= 4; ++n) {
    unsigned mask_count = 1U << vertex_pairs(n).size();
    std::vector<int> weights(static_cast<std::size_t>(n), 1);
    for (unsigned mask = 0; mask < mask_count; ++mask) {
      out.push_back({"s" + std::to_string(n) + "_" + std::to_string(mask),
                     from_mask(weights, mask)});
    }
  }
  for (int n = 1; n <= 3; ++n) {
    unsigned mask_count = 1U << vertex_pairs(n).size();
    for (unsigned mask = 0; mask < mask_count; ++mask) {
      std::vector<int> weights(static_cast<std::size_t>(n), 1);
      while (true) {
        int i = n - 1;
        while (i >= 0 && weights[static_cast<std::size_t>(i)] == 3) {
          weights[static_cast<std::size_t>(i)] = 1;
          --i;
        }
        if (i < 0) break;
        ++weights[static_cast<std::size_t>(i)];
        std::string suffix;
        for (int w : weights) suffix += std::to_string(w);
        out.push_back({"w" + std::to_string(n) + "_" + std::to_string(mask) +
                           "_" + suffix,
                       from_mask(weights, mask)});
      }
    }
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int k = 0; k < 25; ++k) {
    std::vector<int> weights(5, 1);
    while (true) {
      int total = 0;
      for (auto& w : weights) {
        w = 1 + static_cast<int>(rng() % 2);
        total += w;
      }
      if (total <= 9) break;
    }
    unsigned mask = static_cast<unsigned>(rng() % 1024);
    out.push_back({"r5_" + std::to_string(k), from_mask(weights, mask)});
  }
  return out;
}

std::vector<CorpusInstance> multigraph_instances() {
  std::vector<CorpusInstance> out;
  {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_edge_by_index(0, 0);
    out.push_back({"m1", g});
  }
  {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 0);
    out.push_back({"m2", g});
  }
  {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 1);
    out.push_back({"m3", g});
  }
  {
    WeightedGraph g;
    g.add_vertex("v1", 2);
    g.add_vertex("v2", 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(1, 1);
    out.push_back({"m4", g});
  }
  {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 1);
    g.add_vertex("v3", 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 2);
    g.add_edge_by_index(1, 2);
    g.add_edge_by_index(1, 2);
    out.push_back({"m5", g});
  }
  {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 1);
    g.add_edge_by_index(0, 1);
    out.push_back({"m6", g});
  }
  return out;
}

std::vector<CorpusInstance> extended_corpus() {
  auto out = default_corpus();
  for (auto& inst : multigraph_instances()) out.push_back(std::move(inst));
  return out;
}

WeightedGraph complete_graph(int n) {
  std::vector<int> weights(static_cast<std::size_t>(n), 1);
  unsigned mask = (1U << vertex_pairs(n).size()) - 1U;
  return from_mask(weights, mask);
}

WeightedGraph weighted_complete_graph(const Partition& lambda) {
  unsigned mask =
      lambda.parts().empty()
          ? 0U
          : (1U << vertex_pairs(static_cast<int>(lambda.parts().size())).size()) -
                1U;
  return from_mask(lambda.parts(), mask);
}

WeightedGraph path_graph(int n) {
  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1), 1);
  for (int i = 0; i + 1 < n; ++i) g.add_edge_by_index(i, i + 1);
  return g;
}

WeightedGraph performance_graph() {
  WeightedGraph g = complete_graph(6);
  g.add_vertex("v7", 1);
  g.add_edge_by_index(0, 6);
  return g;
}

}  // namespace cspleth
