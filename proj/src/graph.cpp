#include "kconn/graph.hpp"

#include <algorithm>
#include <ostream>

#include "kconn/error.hpp"

namespace kconn {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << to_string(e);
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e);
}

void Graph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(adjacency_.size()) + ")");
  }
}

void Graph::add_edge(Edge e) {
  check_vertex(e.a);
  check_vertex(e.b);
  if (e.is_loop()) {
    throw Error(ErrorCode::kSelfLoop, "self-loop " + to_string(e));
  }
  if (!edges_.insert(e).second) {
    throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + to_string(e));
  }
  auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[e.a], e.b);
  insert_sorted(adjacency_[e.b], e.a);
}

void Graph::remove_edge(Edge e) {
  check_vertex(e.a);
  check_vertex(e.b);
  if (edges_.erase(e) == 0) {
    throw Error(ErrorCode::kMissingEdge, "missing edge " + to_string(e));
  }
  auto erase_sorted = [](std::vector<VertexId>& list, VertexId x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  erase_sorted(adjacency_[e.a], e.b);
  erase_sorted(adjacency_[e.b], e.a);
}

bool Graph::has_edge(Edge e) const {
  check_vertex(e.a);
  check_vertex(e.b);
  return edges_.contains(e);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return adjacency_.size() == other.adjacency_.size() &&
         edges_ == other.edges_;
}

}  // namespace kconn
