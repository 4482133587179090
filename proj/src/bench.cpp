#include "kconn/bench.hpp"

#include <chrono>
#include <random>

#include "kconn/certificate.hpp"
#include "kconn/generators.hpp"
#include "kconn/max_flow.hpp"
#include "kconn/restoration.hpp"

namespace kconn::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Edge random_non_edge(const Graph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(
      0, static_cast<VertexId>(g.num_vertices() - 1));
  for (;;) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u != v && !g.has_edge(u, v)) return Edge(u, v);
  }
}

}  // namespace

AdditionCost measure_additions(std::size_t n, int k, std::size_t additions,
                               std::uint64_t seed) {
  Graph g = harary_graph(k, n);
  SparseCertificate cert(g, k);
  cert.reset_lct_stats();
  std::mt19937_64 rng(seed);
  std::size_t discards = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < additions; ++i) {
    const Edge e = random_non_edge(g, rng);
    g.add_edge(e);
    if (cert.handle_addition(g, e).kind == AdditionOutcome::Kind::kDiscarded) {
      ++discards;
    }
  }
  AdditionCost cost;
  cost.seconds = seconds_since(start);
  cost.n = n;
  cost.k = k;
  cost.additions = additions;
  const LctStats stats = cert.lct_stats();
  const double count = additions == 0 ? 1.0 : static_cast<double>(additions);
  cost.steps_per_addition =
      static_cast<double>(stats.restructuring_steps()) / count;
  cost.operations_per_addition = static_cast<double>(stats.operations) / count;
  cost.discard_fraction = static_cast<double>(discards) / count;
  return cost;
}

Graph dense_k_connected(std::size_t n, int k, std::size_t density,
                        std::uint64_t seed) {
  Graph g = harary_graph(k, n);
  std::mt19937_64 rng(seed);
  const std::size_t target = std::min(density * n, n * (n - 1) / 2);
  while (g.num_edges() < target) g.add_edge(random_non_edge(g, rng));
  return g;
}

DeletionCost measure_deletions(const Graph& g, int k, std::size_t deletions,
                               std::uint64_t seed) {
  DeletionCost cost;
  cost.n = g.num_vertices();
  cost.m = g.num_edges();
  cost.k = k;
  cost.deletions = deletions;
  if (deletions == 0 || g.num_edges() == 0) return cost;

  const std::vector<Edge> edges = g.sorted_edges();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const SparseCertificate base(g, k);
  for (std::size_t i = 0; i < deletions; ++i) {
    const Edge e = edges[pick(rng)];
    for (bool sparsify : {false, true}) {
      Graph work = g;
      SparseCertificate cert = base;
      const auto start = Clock::now();
      handle_deletion(work, cert, e, sparsify);
      (sparsify ? cost.seconds_sparsified : cost.seconds_plain) +=
          seconds_since(start);
    }
    Graph without = g;
    without.remove_edge(e);
    auto start = Clock::now();
    dinic_max_flow(without, e.a, e.b, k);
    cost.flow_seconds_plain += seconds_since(start);
    start = Clock::now();
    ForestPartition partition = build_partition(without);
    std::vector<Edge> sparse;
    for (std::size_t level = 0;
         level < partition.num_levels() && level < static_cast<std::size_t>(k);
         ++level) {
      sparse.insert(sparse.end(), partition.levels[level].begin(),
                    partition.levels[level].end());
    }
    dinic_max_flow(without.num_vertices(), sparse, e.a, e.b, k);
    cost.flow_seconds_sparsified += seconds_since(start);
  }
  const auto count = static_cast<double>(deletions);
  cost.seconds_plain /= count;
  cost.seconds_sparsified /= count;
  cost.flow_seconds_plain /= count;
  cost.flow_seconds_sparsified /= count;
  return cost;
}

}  // namespace kconn::bench
