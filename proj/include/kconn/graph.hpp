#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace kconn {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Unordered vertex pair stored as (min, max), so {u,v} and {v,u} are the same
// value. A self-loop can be represented but is rejected by Graph.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId u, VertexId v)
      : a(u < v ? u : v), b(u < v ? v : u) {}

  constexpr bool is_loop() const { return a == b; }
  constexpr VertexId other(VertexId x) const { return x == a ? b : a; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t key = (static_cast<std::uint64_t>(e.a) << 32) | e.b;
    // splitmix64 finalizer
    key ^= key >> 30;
    key *= 0xbf58476d1ce4e5b9ULL;
    key ^= key >> 27;
    key *= 0x94d049bb133111ebULL;
    key ^= key >> 31;
    return static_cast<std::size_t>(key);
  }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

std::string to_string(const Edge& e);
std::ostream& operator<<(std::ostream& os, const Edge& e);

// Undirected simple graph on a fixed vertex set [0, n). Adjacency lists are
// kept sorted by neighbor id; mutations validate and throw kconn::Error.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  void add_edge(Edge e);
  void add_edge(VertexId u, VertexId v) { add_edge(Edge(u, v)); }
  void remove_edge(Edge e);
  void remove_edge(VertexId u, VertexId v) { remove_edge(Edge(u, v)); }

  bool has_edge(Edge e) const;
  bool has_edge(VertexId u, VertexId v) const { return has_edge(Edge(u, v)); }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  const EdgeSet& edges() const { return edges_; }
  // Edges in canonical (a, b) lexicographic order.
  std::vector<Edge> sorted_edges() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  EdgeSet edges_;
};

}  // namespace kconn
