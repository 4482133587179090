#include "kconn/generators.hpp"

#include <random>
#include <string>

#include "kconn/error.hpp"

namespace kconn {

Graph harary_graph(int k, std::size_t n) {
  if (k < 1 || n < static_cast<std::size_t>(k) + 1) {
    throw Error(ErrorCode::kInfeasible,
                "Harary graph needs k >= 1 and n >= k + 1 (k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  Graph g(n);
  auto connect = [&g, n](std::size_t i, std::size_t j) {
    Edge e(static_cast<VertexId>(i % n), static_cast<VertexId>(j % n));
    if (!e.is_loop() && !g.has_edge(e)) g.add_edge(e);
  };
  if (k == 1) {
    for (std::size_t i = 0; i + 1 < n; ++i) connect(i, i + 1);
    return g;
  }
  const std::size_t half = static_cast<std::size_t>(k / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= half; ++j) connect(i, i + j);
  }
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (std::size_t i = 0; i < n / 2; ++i) connect(i, i + n / 2);
    } else {
      for (std::size_t i = 0; i <= (n - 1) / 2; ++i) connect(i, i + (n + 1) / 2);
    }
  }
  return g;
}

UpdateTrace random_trace(const Graph& g, int k, const TraceOptions& options) {
  MaintainerOptions shadow_options;
  shadow_options.use_sparsifier = options.use_sparsifier;
  // The caller is responsible for λ(g) >= k; skip the oracle precheck.
  shadow_options.precheck_limit = 0;
  Maintainer shadow(g, k, shadow_options);
  const std::size_t n = g.num_vertices();
  const std::size_t max_edges = n * (n - 1) / 2;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<VertexId> pick_vertex(
      0, static_cast<VertexId>(n - 1));
  std::bernoulli_distribution pick_add(options.add_fraction);

  UpdateTrace trace;
  trace.reserve(options.length);
  while (trace.size() < options.length) {
    const Graph& current = shadow.graph();
    const bool can_add = current.num_edges() < max_edges;
    const bool can_delete = current.num_edges() > 0;
    bool add = can_add && (!can_delete || pick_add(rng));
    Command cmd;
    if (add) {
      VertexId u = 0;
      VertexId v = 0;
      do {
        u = pick_vertex(rng);
        v = pick_vertex(rng);
      } while (u == v || current.has_edge(u, v));
      cmd = {Command::Op::kAdd, Edge(u, v)};
    } else {
      VertexId u = 0;
      do {
        u = pick_vertex(rng);
      } while (current.degree(u) == 0);
      auto nbrs = current.neighbors(u);
      std::uniform_int_distribution<std::size_t> pick_nbr(0, nbrs.size() - 1);
      cmd = {Command::Op::kDelete, Edge(u, nbrs[pick_nbr(rng)])};
    }
    shadow.apply(cmd);
    trace.push_back(cmd);
  }
  return trace;
}

}  // namespace kconn
