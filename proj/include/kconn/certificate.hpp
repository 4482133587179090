#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/link_cut_tree.hpp"

namespace kconn {

// Edge partition E_1, E_2, ... produced by the scan-order forest
// decomposition. levels[0] is E_1. Trailing empty levels are omitted.
struct ForestPartition {
  std::vector<std::vector<Edge>> levels;

  std::size_t num_levels() const { return levels.size(); }
};

struct PartitionStats {
  std::uint64_t vertex_selections = 0;
  std::uint64_t edge_scans = 0;
  std::uint64_t rank_updates = 0;
  std::uint64_t bucket_pointer_moves = 0;

  std::uint64_t total() const {
    return vertex_selections + edge_scans + rank_updates +
           bucket_pointer_moves;
  }
};

// Single-pass decomposition of E into forests where each E_i is a maximal
// spanning forest of G minus E_1..E_{i-1}. Always scans an unscanned vertex
// of largest rank; neighbors are scanned in ascending id order. Runs in
// O(n + m).
ForestPartition build_partition(const Graph& g, PartitionStats* stats = nullptr);

struct AdditionOutcome {
  enum class Kind { kAbsorbed, kDiscarded };

  Kind kind = Kind::kAbsorbed;
  // 1-based level that absorbed the cascade; k when discarded.
  int level = 0;
  // Only meaningful for kDiscarded.
  Edge discarded;

  static AdditionOutcome absorbed(int level) {
    return {Kind::kAbsorbed, level, Edge{}};
  }
  static AdditionOutcome discarded_edge(int level, Edge e) {
    return {Kind::kDiscarded, level, e};
  }
};

// k edge-disjoint forests F_1..F_k of G. Each forest is held twice: as a
// link-cut forest for connectivity queries, and as an explicit edge set.
// Every forest edge is a genuine edge of G.
class SparseCertificate {
 public:
  SparseCertificate(const Graph& g, int k);

  int k() const { return static_cast<int>(levels_.size()); }
  std::size_t num_vertices() const { return n_; }
  // Total edge count over all levels.
  std::size_t size() const;

  const EdgeSet& level_edges(int level) const;
  std::optional<int> level_of(Edge e) const;
  bool connected(int level, VertexId u, VertexId v);

  // Offers edge {u, v} to one forest. If u and v are already connected
  // there, the first edge on the tree path from u towards v is swapped out
  // and returned; the forest's component partition does not change.
  std::optional<Edge> try_add(int level, VertexId u, VertexId v);

  // Cascades a newly inserted graph edge through levels 1..k. An edge pushed
  // out of level k is redundant and is removed from g as well.
  AdditionOutcome handle_addition(Graph& g, Edge e);

  // Resynchronizes after e was removed from g. Rebuilds all levels.
  void remove_from_certificate(const Graph& g, Edge e);

  // Sorted edge lists per level, level 1 first.
  std::vector<std::vector<Edge>> export_levels() const;

  // Structural self-check against g: disjointness, subgraph, acyclicity,
  // link-cut/explicit agreement and the k(n-1) size bound. Returns one
  // message per violation; empty means healthy.
  std::vector<std::string> check_invariants(const Graph& g);

  LctStats lct_stats() const;
  void reset_lct_stats();

 private:
  struct Level {
    LctForest forest;
    EdgeSet edges;
  };

  void rebuild(const Graph& g);
  Level& level_at(int level);
  const Level& level_at(int level) const;

  std::size_t n_ = 0;
  std::vector<Level> levels_;
};

}  // namespace kconn
