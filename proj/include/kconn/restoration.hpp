#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kconn/certificate.hpp"
#include "kconn/graph.hpp"

namespace kconn {

struct DeletionOutcome {
  enum class Kind { kStillConnected, kAugmented };

  Kind kind = Kind::kStillConnected;
  // Edges inserted to restore connectivity, in insertion order. Never
  // contains the deleted edge.
  std::vector<Edge> edges_added;
  // Edges the certificate cascade pruned while absorbing edges_added.
  std::vector<Edge> edges_discarded;
  // True when the intermediate-vertex branch was taken (S = {u}, T = {v},
  // or every S x T pair was unusable).
  bool via_intermediate = false;
  // Augmentation rounds; more than 1 only when an intermediate vertex
  // already had one of its two edges.
  int rounds = 0;
  std::uint64_t flow_runs = 0;
  std::uint64_t flow_phases = 0;
};

// Lowest-id (u', v') in S x T such that {u', v'} is neither `forbidden` nor
// already an edge of g. nullopt when every pair is unusable. S and T must be
// sorted.
std::optional<Edge> select_augmenting_pair(std::span<const VertexId> s_side,
                                           std::span<const VertexId> t_side,
                                           const Graph& g, Edge forbidden);

// Lowest-id w outside S ∪ T for a u-w-v detour, preferring w with neither
// {u,w} nor {w,v} present, then w with one of them present. Throws when
// n < 3 or when every candidate already has both edges.
VertexId select_intermediate(std::span<const VertexId> s_side,
                             std::span<const VertexId> t_side, const Graph& g,
                             VertexId u, VertexId v);

// Removes e from g and restores λ(g) >= k. Requires λ(g) >= k beforehand.
// The certificate is rebuilt for g \ e and every augmenting edge is fed
// through its addition cascade. With `use_sparsifier` the connectivity test
// runs on the first k partition levels of g \ e instead of all of g \ e.
DeletionOutcome handle_deletion(Graph& g, SparseCertificate& cert, Edge e,
                                bool use_sparsifier);

}  // namespace kconn
