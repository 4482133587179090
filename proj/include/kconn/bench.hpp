#pragma once

#include <cstddef>
#include <cstdint>

#include "kconn/graph.hpp"

namespace kconn::bench {

struct AdditionCost {
  std::size_t n = 0;
  int k = 0;
  std::size_t additions = 0;
  double steps_per_addition = 0;       // splay rotations + path switches
  double operations_per_addition = 0;  // public link-cut calls
  double discard_fraction = 0;
  double seconds = 0;
};

// Random non-edge insertions into H_{k,n}, each cascaded through the
// certificate. Link-cut work is counted only for the insertions.
AdditionCost measure_additions(std::size_t n, int k, std::size_t additions,
                               std::uint64_t seed);

// H_{k,n} plus uniformly random extra edges until m = density * n.
Graph dense_k_connected(std::size_t n, int k, std::size_t density,
                        std::uint64_t seed);

struct DeletionCost {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 0;
  std::size_t deletions = 0;
  double seconds_plain = 0;      // mean handle_deletion wall time
  double seconds_sparsified = 0;
  double flow_seconds_plain = 0;  // mean time of the connectivity test only
  double flow_seconds_sparsified = 0;
};

DeletionCost measure_deletions(const Graph& g, int k, std::size_t deletions,
                               std::uint64_t seed);

}  // namespace kconn::bench
