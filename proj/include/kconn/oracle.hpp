#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kconn/graph.hpp"

// Slow reference implementations for cross-checking. Nothing here shares
// code with the Dinic solver: connectivity is computed by breadth-first
// augmenting paths over a dense residual matrix.
namespace kconn::oracle {

struct CutReport {
  std::vector<VertexId> side;        // always contains vertex 0
  std::vector<VertexId> complement;
  int cardinality = 0;
};

// λ(u, v; g). With `cap`, stops once that many paths are found.
int local_connectivity(const Graph& g, VertexId u, VertexId v,
                       std::optional<int> cap = std::nullopt);

// λ(g) as the minimum over t of λ(0, t; g).
int global_connectivity(const Graph& g);

bool is_k_edge_connected(const Graph& g, int k);

// Every bipartition (S, V \ S) with 0 ∈ S and S ≠ V whose crossing edge
// count is below `bound`.
std::vector<CutReport> enumerate_cuts_below(const Graph& g, int bound,
                                            std::size_t limit_n = 15);

inline constexpr std::size_t kMaxDenseVertices = 2048;

}  // namespace kconn::oracle
