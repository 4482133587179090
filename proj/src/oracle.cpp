#include "kconn/oracle.hpp"

#include <cstdint>
#include <deque>
#include <limits>
#include <string>

#include "kconn/error.hpp"

namespace kconn::oracle {

namespace {

// residual[u * n + v] is the remaining capacity of u->v. An undirected unit
// edge starts as 1 in both directions.
std::vector<std::uint8_t> dense_residual(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxDenseVertices) {
    throw Error(ErrorCode::kTooLarge,
                "oracle limited to " + std::to_string(kMaxDenseVertices) +
                    " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint8_t> residual(n * n, 0);
  for (const Edge& e : g.edges()) {
    residual[e.a * n + e.b] = 1;
    residual[e.b * n + e.a] = 1;
  }
  return residual;
}

}  // namespace

int local_connectivity(const Graph& g, VertexId u, VertexId v,
                       std::optional<int> cap) {
  const std::size_t n = g.num_vertices();
  if (u >= n || v >= n) {
    throw Error(ErrorCode::kOutOfRange, "oracle vertex out of range");
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "local connectivity of a vertex with itself");
  }
  std::vector<std::uint8_t> residual = dense_residual(g);
  std::vector<std::int64_t> pred(n);
  int paths = 0;
  while (!cap || paths < *cap) {
    std::fill(pred.begin(), pred.end(), -1);
    pred[u] = u;
    std::deque<VertexId> queue{u};
    while (!queue.empty() && pred[v] < 0) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y = 0; y < n; ++y) {
        if (pred[y] < 0 && residual[x * n + y] > 0) {
          pred[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (pred[v] < 0) break;
    for (VertexId y = v; y != u;) {
      auto x = static_cast<VertexId>(pred[y]);
      --residual[x * n + y];
      ++residual[y * n + x];
      y = x;
    }
    ++paths;
  }
  return paths;
}

int global_connectivity(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "global connectivity needs at least 2 vertices");
  }
  int best = std::numeric_limits<int>::max();
  for (VertexId t = 1; t < n; ++t) {
    best = std::min(best, local_connectivity(g, 0, t));
    if (best == 0) break;
  }
  return best;
}

bool is_k_edge_connected(const Graph& g, int k) {
  const std::size_t n = g.num_vertices();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge connectivity needs at least 2 vertices");
  }
  if (k <= 0) return true;
  for (VertexId t = 1; t < n; ++t) {
    if (local_connectivity(g, 0, t, k) < k) return false;
  }
  return true;
}

std::vector<CutReport> enumerate_cuts_below(const Graph& g, int bound,
                                            std::size_t limit_n) {
  const std::size_t n = g.num_vertices();
  if (n > limit_n || n > 30) {
    throw Error(ErrorCode::kTooLarge,
                "cut enumeration limited to " + std::to_string(limit_n) +
                    " vertices, got " + std::to_string(n));
  }
  std::vector<CutReport> cuts;
  if (n < 2) return cuts;
  const std::vector<Edge> edges = g.sorted_edges();
  // Bit i of `mask` puts vertex i + 1 on vertex 0's side.
  const std::uint32_t full = (std::uint32_t{1} << (n - 1)) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const std::uint32_t side = (mask << 1) | 1u;
    int crossing = 0;
    for (const Edge& e : edges) {
      bool in_a = (side >> e.a) & 1u;
      bool in_b = (side >> e.b) & 1u;
      if (in_a != in_b) ++crossing;
    }
    if (crossing >= bound) continue;
    CutReport report;
    report.cardinality = crossing;
    for (VertexId v = 0; v < n; ++v) {
      ((side >> v) & 1u ? report.side : report.complement).push_back(v);
    }
    cuts.push_back(std::move(report));
  }
  return cuts;
}

}  // namespace kconn::oracle
