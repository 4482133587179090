#include "kconn/link_cut_tree.hpp"

#include <string>
#include <utility>

#include "kconn/error.hpp"

namespace kconn {

LctStats& LctStats::operator+=(const LctStats& other) {
  operations += other.operations;
  rotations += other.rotations;
  path_switches += other.path_switches;
  return *this;
}

LctForest::LctForest(std::size_t n) : nodes_(n) {}

bool LctForest::initialized(VertexId v) const {
  return v < nodes_.size() && nodes_[v].live;
}

void LctForest::check(VertexId v) const {
  if (v >= nodes_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "lct vertex " + std::to_string(v) + " out of range");
  }
  if (!nodes_[v].live) {
    throw Error(ErrorCode::kUninitialized,
                "lct vertex " + std::to_string(v) + " not initialized");
  }
}

bool LctForest::is_splay_root(std::int32_t x) const {
  std::int32_t p = nodes_[x].parent;
  return p == kNil || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void LctForest::push(std::int32_t x) {
  Node& node = nodes_[x];
  if (!node.flip) return;
  std::swap(node.child[0], node.child[1]);
  for (std::int32_t c : node.child) {
    if (c != kNil) nodes_[c].flip = !nodes_[c].flip;
  }
  node.flip = false;
}

void LctForest::rotate(std::int32_t x) {
  std::int32_t y = nodes_[x].parent;
  std::int32_t z = nodes_[y].parent;
  int dir = nodes_[y].child[1] == x ? 1 : 0;
  if (!is_splay_root(y)) {
    nodes_[z].child[nodes_[z].child[1] == y ? 1 : 0] = x;
  }
  nodes_[x].parent = z;
  std::int32_t moved = nodes_[x].child[dir ^ 1];
  nodes_[y].child[dir] = moved;
  if (moved != kNil) nodes_[moved].parent = y;
  nodes_[x].child[dir ^ 1] = y;
  nodes_[y].parent = x;
  ++stats_.rotations;
}

void LctForest::splay(std::int32_t x) {
  // Flips must be resolved top-down before any rotation touches the path.
  scratch_.clear();
  for (std::int32_t y = x;; y = nodes_[y].parent) {
    scratch_.push_back(y);
    if (is_splay_root(y)) break;
  }
  for (auto it = scratch_.rbegin(); it != scratch_.rend(); ++it) push(*it);

  while (!is_splay_root(x)) {
    std::int32_t y = nodes_[x].parent;
    if (!is_splay_root(y)) {
      std::int32_t z = nodes_[y].parent;
      bool zig_zig = (nodes_[y].child[0] == x) == (nodes_[z].child[0] == y);
      rotate(zig_zig ? y : x);
    }
    rotate(x);
  }
}

void LctForest::access(std::int32_t x) {
  std::int32_t last = kNil;
  for (std::int32_t y = x; y != kNil; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].child[1] = last;
    last = y;
    ++stats_.path_switches;
  }
  splay(x);
}

std::int32_t LctForest::leftmost(std::int32_t x) {
  push(x);
  while (nodes_[x].child[0] != kNil) {
    x = nodes_[x].child[0];
    push(x);
  }
  splay(x);
  return x;
}

void LctForest::make_tree(VertexId v) {
  if (v >= nodes_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "lct vertex " + std::to_string(v) + " out of range");
  }
  if (nodes_[v].live) {
    throw Error(ErrorCode::kAlreadyInitialized,
                "lct vertex " + std::to_string(v) + " already initialized");
  }
  ++stats_.operations;
  nodes_[v] = Node{};
  nodes_[v].live = true;
}

VertexId LctForest::find_root(VertexId v) {
  check(v);
  ++stats_.operations;
  auto x = static_cast<std::int32_t>(v);
  access(x);
  return static_cast<VertexId>(leftmost(x));
}

void LctForest::link(VertexId v, VertexId w) {
  check(v);
  check(w);
  ++stats_.operations;
  auto x = static_cast<std::int32_t>(v);
  access(x);
  // After access, v's splay tree holds exactly its root path; v is the
  // represented root iff nothing lies to its left.
  push(x);
  if (nodes_[x].child[0] != kNil) {
    throw Error(ErrorCode::kNotRoot,
                "link: vertex " + std::to_string(v) + " is not a root");
  }
  auto y = static_cast<std::int32_t>(w);
  access(y);
  if (static_cast<VertexId>(leftmost(y)) == v) {
    throw Error(ErrorCode::kSameTree, "link: vertices " + std::to_string(v) +
                                          " and " + std::to_string(w) +
                                          " are already connected");
  }
  access(x);
  nodes_[x].parent = y;
}

void LctForest::cut(VertexId v) {
  check(v);
  ++stats_.operations;
  auto x = static_cast<std::int32_t>(v);
  access(x);
  push(x);
  std::int32_t left = nodes_[x].child[0];
  if (left == kNil) {
    throw Error(ErrorCode::kCutRoot,
                "cut: vertex " + std::to_string(v) + " is a root");
  }
  nodes_[left].parent = kNil;
  nodes_[x].child[0] = kNil;
}

std::optional<VertexId> LctForest::parent(VertexId v) {
  check(v);
  ++stats_.operations;
  auto x = static_cast<std::int32_t>(v);
  access(x);
  push(x);
  std::int32_t y = nodes_[x].child[0];
  if (y == kNil) return std::nullopt;
  // Predecessor of v on its root path.
  push(y);
  while (nodes_[y].child[1] != kNil) {
    y = nodes_[y].child[1];
    push(y);
  }
  splay(y);
  return static_cast<VertexId>(y);
}

void LctForest::make_root(VertexId v) {
  check(v);
  ++stats_.operations;
  auto x = static_cast<std::int32_t>(v);
  access(x);
  nodes_[x].flip = !nodes_[x].flip;
}

bool LctForest::connected(VertexId u, VertexId v) {
  if (u == v) {
    check(u);
    return true;
  }
  return find_root(u) == find_root(v);
}

}  // namespace kconn
