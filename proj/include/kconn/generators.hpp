#pragma once

#include <cstddef>
#include <cstdint>

#include "kconn/graph.hpp"
#include "kconn/maintainer.hpp"

namespace kconn {

// Harary graph H_{k,n}: the classical k-edge-connected graph on n vertices
// with ceil(k n / 2) edges (a path when k = 1). Requires n >= k + 1.
Graph harary_graph(int k, std::size_t n);

struct TraceOptions {
  std::size_t length = 200;
  double add_fraction = 0.5;
  std::uint64_t seed = 1;
  bool use_sparsifier = false;
};

// Random trace that is valid when replayed from (g, k): a shadow maintainer
// applies each command so later commands see the maintained state.
UpdateTrace random_trace(const Graph& g, int k, const TraceOptions& options);

}  // namespace kconn
