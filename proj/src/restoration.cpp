#include "kconn/restoration.hpp"

#include <algorithm>
#include <string>

#include "kconn/error.hpp"
#include "kconn/max_flow.hpp"

namespace kconn {

namespace {

std::vector<Edge> first_levels(const Graph& g, int k) {
  ForestPartition partition = build_partition(g);
  std::vector<Edge> sparse;
  const std::size_t levels =
      std::min<std::size_t>(partition.num_levels(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < levels; ++i) {
    sparse.insert(sparse.end(), partition.levels[i].begin(),
                  partition.levels[i].end());
  }
  return sparse;
}

std::vector<Edge> certificate_union(const SparseCertificate& cert) {
  std::vector<Edge> sparse;
  for (const auto& level : cert.export_levels()) {
    sparse.insert(sparse.end(), level.begin(), level.end());
  }
  return sparse;
}

bool contains_sorted(std::span<const VertexId> sorted, VertexId x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

std::optional<Edge> select_augmenting_pair(std::span<const VertexId> s_side,
                                           std::span<const VertexId> t_side,
                                           const Graph& g, Edge forbidden) {
  for (VertexId a : s_side) {
    for (VertexId b : t_side) {
      if (a == b) continue;
      const Edge candidate(a, b);
      if (candidate == forbidden || g.has_edge(candidate)) continue;
      return candidate;
    }
  }
  return std::nullopt;
}

VertexId select_intermediate(std::span<const VertexId> s_side,
                             std::span<const VertexId> t_side, const Graph& g,
                             VertexId u, VertexId v) {
  const std::size_t n = g.num_vertices();
  if (n < 3) {
    throw Error(ErrorCode::kInfeasible,
                "no intermediate vertex exists when n = " + std::to_string(n));
  }
  VertexId best = kNoVertex;
  int best_present = 3;
  for (VertexId w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    if (contains_sorted(s_side, w) || contains_sorted(t_side, w)) continue;
    const int present = int{g.has_edge(u, w)} + int{g.has_edge(w, v)};
    if (present < best_present) {
      best = w;
      best_present = present;
      if (present == 0) break;
    }
  }
  if (best == kNoVertex || best_present == 2) {
    throw Error(ErrorCode::kNoAugmentingPair,
                "no intermediate vertex can bypass the cut between " +
                    std::to_string(u) + " and " + std::to_string(v));
  }
  return best;
}

DeletionOutcome handle_deletion(Graph& g, SparseCertificate& cert, Edge e,
                                bool use_sparsifier) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kMissingEdge,
                "handle_deletion: " + to_string(e) + " not in graph");
  }
  const int k = cert.k();
  const VertexId u = e.a;
  const VertexId v = e.b;
  g.remove_edge(e);
  cert.remove_from_certificate(g, e);

  DeletionOutcome out;
  for (;;) {
    // The first k partition levels keep every local connectivity up to k.
    // On the first round the just-rebuilt certificate is exactly those
    // levels; later rounds partition the repaired graph afresh.
    FlowResult flow =
        !use_sparsifier
            ? dinic_max_flow(g, u, v, k)
            : dinic_max_flow(g.num_vertices(),
                             out.rounds == 0 ? certificate_union(cert)
                                             : first_levels(g, k),
                             u, v, k);
    ++out.flow_runs;
    out.flow_phases += flow.stats.phases;
    if (flow.value >= k) break;
    if (flow.value < k - 1) {
      throw Error(ErrorCode::kInsufficientConnectivity,
                  "flow between " + std::to_string(u) + " and " +
                      std::to_string(v) + " is " + std::to_string(flow.value) +
                      " after deleting " + to_string(e) +
                      "; graph was not " + std::to_string(k) +
                      "-edge-connected");
    }
    ++out.rounds;
    const std::vector<VertexId> s_side = flow.residual.reachable_from(u);
    const std::vector<VertexId> t_side = flow.residual.reaching(v);
    const bool singleton = s_side.size() == 1 && t_side.size() == 1;

    std::vector<Edge> batch;
    // A fresh crossing edge, or a detour whose two edges are both fresh,
    // raises every deficient cut by one; anything else needs a re-check.
    bool restores = false;
    if (!singleton) {
      if (auto pair = select_augmenting_pair(s_side, t_side, g, e)) {
        batch.push_back(*pair);
        restores = true;
      }
    }
    if (batch.empty()) {
      out.via_intermediate = true;
      const VertexId w = select_intermediate(s_side, t_side, g, u, v);
      const Edge uw(u, w);
      const Edge wv(w, v);
      restores = !g.has_edge(uw) && !g.has_edge(wv);
      if (!g.has_edge(uw)) batch.push_back(uw);
      if (!g.has_edge(wv)) batch.push_back(wv);
    }
    for (const Edge& add : batch) {
      g.add_edge(add);
      out.edges_added.push_back(add);
      AdditionOutcome absorbed = cert.handle_addition(g, add);
      if (absorbed.kind == AdditionOutcome::Kind::kDiscarded) {
        out.edges_discarded.push_back(absorbed.discarded);
      }
    }
    if (restores) break;
  }
  out.kind = out.edges_added.empty() ? DeletionOutcome::Kind::kStillConnected
                                     : DeletionOutcome::Kind::kAugmented;
  return out;
}

}  // namespace kconn
