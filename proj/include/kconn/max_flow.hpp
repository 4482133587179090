#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

// Residual view of a unit-capacity undirected flow. Each edge {a, b} is an
// arc pair a->b / b->a with capacity 1 each and skew-symmetric flow, so the
// residual capacity of an arc is 1 - flow in {0, 1, 2}: an idle edge leaves
// both directions at 1, a unit pushed a->b leaves only b->a, at 2.
class ResidualGraph {
 public:
  ResidualGraph() = default;

  std::size_t num_vertices() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  // c_f(u, v); 0 when no arc backs the ordered pair.
  int residual_capacity(VertexId u, VertexId v) const;
  // Net flow on the ordered pair: +1, 0 or -1.
  int flow(VertexId u, VertexId v) const;

  std::vector<VertexId> reachable_from(VertexId u) const;
  std::vector<VertexId> reaching(VertexId v) const;

  template <typename Fn>
  void for_each_arc(VertexId u, Fn&& fn) const {
    for (std::uint32_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
      fn(head_[a], 1 - flow_[a]);
    }
  }

 private:
  friend class FlowNetwork;

  std::vector<std::uint32_t> offsets_;  // CSR row starts, size n + 1
  std::vector<VertexId> head_;
  std::vector<std::uint32_t> twin_;     // index of the reverse arc
  std::vector<std::int8_t> flow_;
};

struct FlowStats {
  std::uint64_t phases = 0;
  std::uint64_t augmentations = 0;
};

struct FlowResult {
  int value = 0;
  ResidualGraph residual;
  FlowStats stats;
};

// Dinic's algorithm specialised to unit capacities: BFS level graph per
// phase, blocking flow by iterative DFS with current-arc pointers.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t n, std::span<const Edge> edges);
  explicit FlowNetwork(const Graph& g);

  // Stops as soon as `cap` units have been routed when a cap is given.
  // Consumes the network; the residual is moved into the result.
  FlowResult run(VertexId s, VertexId t, std::optional<int> cap) &&;

 private:
  bool build_levels(VertexId s, VertexId t);
  bool augment_once(VertexId s, VertexId t);

  ResidualGraph g_;
  std::vector<std::int32_t> level_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> path_;  // arcs of the DFS stack
};

FlowResult dinic_max_flow(const Graph& g, VertexId s, VertexId t,
                          std::optional<int> cap = std::nullopt);
FlowResult dinic_max_flow(std::size_t n, std::span<const Edge> edges,
                          VertexId s, VertexId t,
                          std::optional<int> cap = std::nullopt);

inline std::vector<VertexId> residual_reachable_from(const ResidualGraph& r,
                                                     VertexId u) {
  return r.reachable_from(u);
}
inline std::vector<VertexId> residual_reaching(const ResidualGraph& r,
                                               VertexId v) {
  return r.reaching(v);
}

}  // namespace kconn
