#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kconn/generators.hpp"
#include "kconn/graph.hpp"
#include "kconn/oracle.hpp"

namespace kconn::testing {

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// G(n, p) random simple graph.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Harary H_{k,n} plus `extra` random edges: λ >= k by construction.
inline Graph random_k_connected(std::size_t n, int k, std::size_t extra,
                                std::mt19937_64& rng) {
  Graph g = harary_graph(k, n);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  const std::size_t cap = n * (n - 1) / 2;
  for (std::size_t i = 0; i < extra && g.num_edges() < cap;) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++i;
  }
  // Relabel so the Harary ring structure is not aligned with vertex ids.
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph out(n);
  for (const Edge& e : g.sorted_edges()) out.add_edge(perm[e.a], perm[e.b]);
  return out;
}

inline Graph subgraph(std::size_t n, const std::vector<Edge>& edges) {
  return Graph(n, edges);
}

// Component label per vertex for an edge set, normalised to the smallest
// member id so partitions compare with ==.
inline std::vector<VertexId> component_labels(std::size_t n,
                                              const std::vector<Edge>& edges) {
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), VertexId{0});
  auto find = [&uf](VertexId v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const Edge& e : edges) {
    VertexId a = find(e.a);
    VertexId b = find(e.b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexId> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = find(v);
  return label;
}

inline bool is_forest(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), VertexId{0});
  auto find = [&uf](VertexId v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const Edge& e : edges) {
    VertexId a = find(e.a);
    VertexId b = find(e.b);
    if (a == b) return false;
    uf[a] = b;
  }
  return true;
}

inline std::vector<Edge> to_vector(const EdgeSet& set) {
  std::vector<Edge> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> certificate_union_edges(
    const std::vector<std::vector<Edge>>& levels, std::size_t upto) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < upto && i < levels.size(); ++i) {
    out.insert(out.end(), levels[i].begin(), levels[i].end());
  }
  return out;
}

// Explicit parent-pointer forest used as a reference for LctForest.
class NaiveForest {
 public:
  explicit NaiveForest(std::size_t n) : parent_(n, kNoVertex) {}

  VertexId find_root(VertexId v) const {
    while (parent_[v] != kNoVertex) v = parent_[v];
    return v;
  }
  std::optional<VertexId> parent(VertexId v) const {
    if (parent_[v] == kNoVertex) return std::nullopt;
    return parent_[v];
  }
  bool is_root(VertexId v) const { return parent_[v] == kNoVertex; }
  void link(VertexId v, VertexId w) { parent_[v] = w; }
  void cut(VertexId v) { parent_[v] = kNoVertex; }
  void make_root(VertexId v) {
    VertexId prev = kNoVertex;
    VertexId cur = v;
    while (cur != kNoVertex) {
      VertexId next = parent_[cur];
      parent_[cur] = prev;
      prev = cur;
      cur = next;
    }
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace kconn::testing
