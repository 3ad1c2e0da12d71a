#include "cspleth/wgraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "cspleth/errors.hpp"

namespace cspleth {

int WeightedGraph::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0);
}

int WeightedGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<int>(i);
  }
  return -1;
}

void WeightedGraph::add_vertex(const std::string& id, int weight) {
  if (id.empty()) throw GraphFormatError("empty vertex id");
  if (weight < 1) {
    throw GraphFormatError("vertex '" + id + "' has weight " +
                           std::to_string(weight) + "; weights must be >= 1");
  }
  if (index_of(id) >= 0) throw GraphFormatError("duplicate vertex id '" + id + "'");
  ids.push_back(id);
  weights.push_back(weight);
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b) {
  int u = index_of(a);
  int v = index_of(b);
  if (u < 0) throw GraphFormatError("edge endpoint '" + a + "' is not a vertex");
  if (v < 0) throw GraphFormatError("edge endpoint '" + b + "' is not a vertex");
  add_edge_by_index(u, v);
}

void WeightedGraph::add_edge_by_index(int a, int b) {
  assert(a >= 0 && a < vertex_count() && b >= 0 && b < vertex_count());
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

bool WeightedGraph::is_loop(int edge_index) const {
  const auto& [u, v] = edges[static_cast<std::size_t>(edge_index)];
  return u == v;
}

bool WeightedGraph::has_loop() const {
  for (const auto& [u, v] : edges) {
    if (u == v) return true;
  }
  return false;
}

std::string WeightedGraph::signature() const {
  std::string s;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(weights[i]);
  }
  s += '|';
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(edges[i].first) + '-' + std::to_string(edges[i].second);
  }
  return s;
}

WeightedGraph delete_edge(const WeightedGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) {
    throw std::out_of_range("no edge at index " + std::to_string(edge_index));
  }
  WeightedGraph h = g;
  h.edges.erase(h.edges.begin() + edge_index);
  return h;
}

WeightedGraph contract_edge(const WeightedGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) {
    throw std::out_of_range("no edge at index " + std::to_string(edge_index));
  }
  if (g.is_loop(edge_index)) return delete_edge(g, edge_index);
  auto [u, v] = g.edges[static_cast<std::size_t>(edge_index)];
  WeightedGraph h;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i == v) continue;
    int w = g.weights[static_cast<std::size_t>(i)];
    if (i == u) w += g.weights[static_cast<std::size_t>(v)];
    h.ids.push_back(g.ids[static_cast<std::size_t>(i)]);
    h.weights.push_back(w);
  }
  auto remap = [&](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    const auto& [a, b] = g.edges[static_cast<std::size_t>(i)];
    h.add_edge_by_index(remap(a), remap(b));
  }
  return h;
}

// Iterative colouring DFS.
bool arcs_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : arcs) {
    if (a == b) return false;
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    colour[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[static_cast<std::size_t>(v)].size()) {
        int w = adj[static_cast<std::size_t>(v)][next++];
        if (colour[static_cast<std::size_t>(w)] == 1) return false;
        if (colour[static_cast<std::size_t>(w)] == 0) {
          colour[static_cast<std::size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

namespace {

std::vector<std::pair<int, int>> oriented_arcs(const WeightedGraph& g,
                                               const Orientation& o) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [u, v] = g.edges[i];
    if (o[i] == 0) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return arcs;
}

}  // namespace

bool orientation_acyclic(const WeightedGraph& g, const Orientation& o) {
  assert(static_cast<int>(o.size()) == g.edge_count());
  return arcs_acyclic(g.vertex_count(), oriented_arcs(g, o));
}

std::vector<Orientation> acyclic_orientations(const WeightedGraph& g) {
  std::vector<Orientation> out;
  if (g.has_loop()) return out;
  int m = g.edge_count();
  Orientation o(static_cast<std::size_t>(m), 0);
  while (true) {
    if (orientation_acyclic(g, o)) out.push_back(o);
    int i = 0;
    while (i < m && o[static_cast<std::size_t>(i)] == 1) {
      o[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == m) break;
    o[static_cast<std::size_t>(i)] = 1;
  }
  return out;
}

bool biorientation_acyclic(const WeightedGraph& g, const Biorientation& b) {
  assert(static_cast<int>(b.size()) == g.edge_count());
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> singles;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [u, v] = g.edges[i];
    if (b[i] == kBothDirections) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    } else if (b[i] == 0) {
      if (u == v) return false;
      adj[static_cast<std::size_t>(u)].push_back(v);
      singles.emplace_back(u, v);
    } else {
      if (u == v) return false;
      adj[static_cast<std::size_t>(v)].push_back(u);
      singles.emplace_back(v, u);
    }
  }
  // A cycle through a single arc u->v exists iff u is reachable from v.
  for (const auto& [u, v] : singles) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    bool found = false;
    while (!stack.empty() && !found) {
      int x = stack.back();
      stack.pop_back();
      if (x == u) {
        found = true;
        break;
      }
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    if (found) return false;
  }
  return true;
}

std::vector<Biorientation> acyclic_biorientations(const WeightedGraph& g) {
  std::vector<Biorientation> out;
  int m = g.edge_count();
  Biorientation b(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (g.is_loop(i)) b[static_cast<std::size_t>(i)] = kBothDirections;
  }
  while (true) {
    if (biorientation_acyclic(g, b)) out.push_back(b);
    int i = 0;
    while (i < m) {
      if (g.is_loop(i)) {
        ++i;
        continue;
      }
      if (b[static_cast<std::size_t>(i)] < kBothDirections) {
        ++b[static_cast<std::size_t>(i)];
        break;
      }
      b[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == m) break;
  }
  return out;
}

SourceDecomposition source_components(const WeightedGraph& g,
                                      const Orientation& o) {
  if (!orientation_acyclic(g, o)) {
    throw std::invalid_argument("source components need an acyclic orientation");
  }
  int n = g.vertex_count();
  auto arcs = oriented_arcs(g, o);
  SourceDecomposition out;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> lambda_parts;
  for (int start = 0; start < n; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<char> in_comp(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    in_comp[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : arcs) {
        if (a == v && !used[static_cast<std::size_t>(b)] &&
            !in_comp[static_cast<std::size_t>(b)]) {
          in_comp[static_cast<std::size_t>(b)] = 1;
          stack.push_back(b);
        }
      }
    }
    std::vector<int> comp;
    int weight = 0;
    for (int v = 0; v < n; ++v) {
      if (in_comp[static_cast<std::size_t>(v)]) {
        comp.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
        weight += g.weights[static_cast<std::size_t>(v)];
      }
    }
    out.components.push_back(std::move(comp));
    lambda_parts.push_back(weight);
  }
  out.lambda = Partition(lambda_parts);
  return out;
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(assign);
    int i = n - 1;
    while (i > 0) {
      int cap = 0;
      for (int j = 0; j < i; ++j) {
        cap = std::max(cap, assign[static_cast<std::size_t>(j)]);
      }
      if (assign[static_cast<std::size_t>(i)] <= cap) break;
      --i;
    }
    if (i == 0) break;
    ++assign[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) assign[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

int internal_edge_count(const WeightedGraph& g, const std::vector<int>& assign) {
  int count = 0;
  for (const auto& [u, v] : g.edges) {
    if (assign[static_cast<std::size_t>(u)] == assign[static_cast<std::size_t>(v)]) {
      ++count;
    }
  }
  return count;
}

bool partition_stable(const WeightedGraph& g, const std::vector<int>& assign) {
  return internal_edge_count(g, assign) == 0;
}

Partition partition_lambda(const WeightedGraph& g,
                           const std::vector<int>& assign) {
  int blocks = 0;
  for (int a : assign) blocks = std::max(blocks, a + 1);
  std::vector<int> totals(static_cast<std::size_t>(blocks), 0);
  for (std::size_t v = 0; v < assign.size(); ++v) {
    totals[static_cast<std::size_t>(assign[v])] += g.weights[v];
  }
  return Partition(totals);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Partition components_lambda(const WeightedGraph& g,
                            const std::vector<bool>& edge_in) {
  UnionFind uf(g.vertex_count());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (edge_in[i]) uf.unite(g.edges[i].first, g.edges[i].second);
  }
  std::map<int, int> totals;
  for (int v = 0; v < g.vertex_count(); ++v) {
    totals[uf.find(v)] += g.weights[static_cast<std::size_t>(v)];
  }
  std::vector<int> parts;
  parts.reserve(totals.size());
  for (const auto& [root, w] : totals) parts.push_back(w);
  return Partition(parts);
}

std::vector<std::vector<int>> connected_components(const WeightedGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return induced_components(g, all);
}

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<int>& keep) {
  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  WeightedGraph out;
  for (int v : keep) {
    remap[static_cast<std::size_t>(v)] = out.vertex_count();
    out.add_vertex(g.ids[static_cast<std::size_t>(v)],
                   g.weights[static_cast<std::size_t>(v)]);
  }
  for (const auto& [u, v] : g.edges) {
    int a = remap[static_cast<std::size_t>(u)];
    int b = remap[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) out.add_edge_by_index(a, b);
  }
  return out;
}

WeightedGraph relabel_reversed(const WeightedGraph& g) {
  int n = g.vertex_count();
  WeightedGraph out;
  for (int v = n - 1; v >= 0; --v) {
    out.add_vertex(g.ids[static_cast<std::size_t>(v)],
                   g.weights[static_cast<std::size_t>(v)]);
  }
  for (const auto& [u, v] : g.edges) {
    out.add_edge_by_index(n - 1 - u, n - 1 - v);
  }
  return out;
}

std::vector<std::vector<int>> induced_components(const WeightedGraph& g,
                                                 const std::vector<int>& block) {
  std::vector<char> in_block(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : block) in_block[static_cast<std::size_t>(v)] = 1;
  UnionFind uf(g.vertex_count());
  for (const auto& [u, v] : g.edges) {
    if (in_block[static_cast<std::size_t>(u)] &&
        in_block[static_cast<std::size_t>(v)]) {
      uf.unite(u, v);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int v : block) comps[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(comps.size());
  for (auto& [root, members] : comps) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool induced_bipartite(const WeightedGraph& g, const std::vector<int>& block) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> in_block(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : block) in_block[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [u, v] : g.edges) {
    if (!in_block[static_cast<std::size_t>(u)] ||
        !in_block[static_cast<std::size_t>(v)]) {
      continue;
    }
    if (u == v) return false;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int start : block) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (side[static_cast<std::size_t>(w)] == -1) {
          side[static_cast<std::size_t>(w)] =
              1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] ==
                   side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cspleth
