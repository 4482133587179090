#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

// Work counters. `rotations` and `path_switches` together are the internal
// restructuring steps whose amortized count is O(log n) per operation.
struct LctStats {
  std::uint64_t operations = 0;
  std::uint64_t rotations = 0;
  std::uint64_t path_switches = 0;

  std::uint64_t restructuring_steps() const { return rotations + path_switches; }
  LctStats& operator+=(const LctStats& other);
};

// Dynamic rooted forest over vertices [0, n) using splay trees over preferred
// paths. Every query splays, so even const-looking reads mutate internal state.
//
// Represented-tree semantics: parent(v) is the parent of v in the rooted tree
// the structure models, not the auxiliary splay parent. make_root(v) reverses
// the root path of v and leaves the undirected edge set untouched.
class LctForest {
 public:
  LctForest() = default;
  // Vertices start uninitialized; call make_tree on each before use.
  explicit LctForest(std::size_t n);

  std::size_t size() const { return nodes_.size(); }
  bool initialized(VertexId v) const;

  void make_tree(VertexId v);
  VertexId find_root(VertexId v);
  // Hangs the tree rooted at v below w.
  void link(VertexId v, VertexId w);
  // Removes the edge between v and its parent.
  void cut(VertexId v);
  std::optional<VertexId> parent(VertexId v);
  void make_root(VertexId v);
  bool connected(VertexId u, VertexId v);

  const LctStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

 private:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    std::int32_t child[2] = {kNil, kNil};
    // Splay parent, or path-parent when this node is a splay root.
    std::int32_t parent = kNil;
    bool flip = false;
    bool live = false;
  };

  void check(VertexId v) const;
  bool is_splay_root(std::int32_t x) const;
  void push(std::int32_t x);
  void rotate(std::int32_t x);
  void splay(std::int32_t x);
  void access(std::int32_t x);
  // Leftmost node of x's splay tree, splayed to the top.
  std::int32_t leftmost(std::int32_t x);

  std::vector<Node> nodes_;
  std::vector<std::int32_t> scratch_;
  LctStats stats_;
};

}  // namespace kconn
