#include "kconn/max_flow.hpp"

#include <algorithm>
#include <string>

#include "kconn/error.hpp"

namespace kconn {

int ResidualGraph::residual_capacity(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return 0;
  for (std::uint32_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
    if (head_[a] == v) return 1 - flow_[a];
  }
  return 0;
}

int ResidualGraph::flow(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return 0;
  for (std::uint32_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
    if (head_[a] == v) return flow_[a];
  }
  return 0;
}

std::vector<VertexId> ResidualGraph::reachable_from(VertexId u) const {
  const std::size_t n = num_vertices();
  if (u >= n) throw Error(ErrorCode::kOutOfRange, "residual source out of range");
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order{u};
  seen[u] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId x = order[i];
    for (std::uint32_t a = offsets_[x]; a < offsets_[x + 1]; ++a) {
      VertexId y = head_[a];
      if (!seen[y] && flow_[a] < 1) {
        seen[y] = true;
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<VertexId> ResidualGraph::reaching(VertexId v) const {
  const std::size_t n = num_vertices();
  if (v >= n) throw Error(ErrorCode::kOutOfRange, "residual sink out of range");
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order{v};
  seen[v] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId x = order[i];
    // Walk arcs y->x backwards: each arc out of x has its twin y->x.
    for (std::uint32_t a = offsets_[x]; a < offsets_[x + 1]; ++a) {
      VertexId y = head_[a];
      if (!seen[y] && flow_[twin_[a]] < 1) {
        seen[y] = true;
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

FlowNetwork::FlowNetwork(std::size_t n, std::span<const Edge> edges) {
  g_.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw Error(ErrorCode::kOutOfRange, "flow edge " + to_string(e) +
                                              " out of range");
    }
    ++g_.offsets_[e.a + 1];
    ++g_.offsets_[e.b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g_.offsets_[v + 1] += g_.offsets_[v];
  const std::size_t arcs = 2 * edges.size();
  g_.head_.resize(arcs);
  g_.twin_.resize(arcs);
  g_.flow_.assign(arcs, 0);
  std::vector<std::uint32_t> fill(g_.offsets_.begin(), g_.offsets_.end() - 1);
  for (const Edge& e : edges) {
    std::uint32_t ab = fill[e.a]++;
    std::uint32_t ba = fill[e.b]++;
    g_.head_[ab] = e.b;
    g_.head_[ba] = e.a;
    g_.twin_[ab] = ba;
    g_.twin_[ba] = ab;
  }
  level_.resize(n);
  current_.resize(n);
}

FlowNetwork::FlowNetwork(const Graph& g)
    : FlowNetwork(g.num_vertices(), g.sorted_edges()) {}

bool FlowNetwork::build_levels(VertexId s, VertexId t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::vector<VertexId> queue{s};
  level_[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId x = queue[i];
    for (std::uint32_t a = g_.offsets_[x]; a < g_.offsets_[x + 1]; ++a) {
      VertexId y = g_.head_[a];
      if (level_[y] < 0 && g_.flow_[a] < 1) {
        level_[y] = level_[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return level_[t] >= 0;
}

bool FlowNetwork::augment_once(VertexId s, VertexId t) {
  path_.clear();
  VertexId x = s;
  while (x != t) {
    std::uint32_t& a = current_[x];
    bool advanced = false;
    for (; a < g_.offsets_[x + 1]; ++a) {
      VertexId y = g_.head_[a];
      if (g_.flow_[a] < 1 && level_[y] == level_[x] + 1) {
        path_.push_back(a);
        x = y;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    // Dead end: prune x from the level graph and retreat one arc.
    level_[x] = -1;
    if (path_.empty()) return false;
    std::uint32_t back = path_.back();
    path_.pop_back();
    x = g_.head_[g_.twin_[back]];
    ++current_[x];
  }
  for (std::uint32_t a : path_) {
    ++g_.flow_[a];
    --g_.flow_[g_.twin_[a]];
  }
  return true;
}

FlowResult FlowNetwork::run(VertexId s, VertexId t, std::optional<int> cap) && {
  const std::size_t n = g_.num_vertices();
  if (s >= n || t >= n) {
    throw Error(ErrorCode::kOutOfRange, "flow terminal out of range");
  }
  if (s == t) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow source and sink coincide at " + std::to_string(s));
  }
  if (cap && *cap < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative flow cap");
  }
  FlowResult result;
  auto capped = [&] { return cap && result.value >= *cap; };
  while (!capped() && build_levels(s, t)) {
    ++result.stats.phases;
    std::copy(g_.offsets_.begin(), g_.offsets_.end() - 1, current_.begin());
    while (!capped() && augment_once(s, t)) {
      ++result.value;
      ++result.stats.augmentations;
    }
  }
  result.residual = std::move(g_);
  return result;
}

FlowResult dinic_max_flow(const Graph& g, VertexId s, VertexId t,
                          std::optional<int> cap) {
  return FlowNetwork(g).run(s, t, cap);
}

FlowResult dinic_max_flow(std::size_t n, std::span<const Edge> edges,
                          VertexId s, VertexId t, std::optional<int> cap) {
  return FlowNetwork(n, edges).run(s, t, cap);
}

}  // namespace kconn
