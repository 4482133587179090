#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn::oracle {

struct VerifyFailure {
  int level = 0;  // 0 when the failure is not tied to a level
  std::string message;
};

// Full oracle suite for an exported certificate (levels[0] is F_1):
//  - the graph is k-edge-connected;
//  - every level is a forest of graph edges and levels are disjoint;
//  - total size is at most k(n - 1);
//  - for every level i and pair (x, y):
//      λ(x, y; F_1 ∪ ... ∪ F_i) >= min(λ(x, y; G), i).
// Pair checks are spread over `threads` workers (0 = hardware concurrency).
std::vector<VerifyFailure> verify_certificate(
    const Graph& g, int k, const std::vector<std::vector<Edge>>& levels,
    unsigned threads = 0);

}  // namespace kconn::oracle
