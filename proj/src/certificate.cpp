#include "kconn/certificate.hpp"

#include <algorithm>
#include <numeric>

#include "kconn/error.hpp"

namespace kconn {

namespace {

constexpr VertexId kNone = kNoVertex;

// Vertices bucketed by rank as intrusive doubly linked lists. Insertion and
// removal happen at the head, so ties within a rank resolve last-in-first.
class RankBuckets {
 public:
  explicit RankBuckets(std::size_t n)
      : head_(std::max<std::size_t>(n, 1), kNone),
        next_(n, kNone),
        prev_(n, kNone),
        rank_(n, 0) {
    // Pushed in descending order so vertex 0 heads rank 0.
    for (std::size_t v = n; v-- > 0;) push(static_cast<VertexId>(v));
    top_ = 0;
  }

  std::uint32_t rank(VertexId v) const { return rank_[v]; }

  void erase(VertexId v) {
    std::uint32_t r = rank_[v];
    if (prev_[v] != kNone) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[r] = next_[v];
    }
    if (next_[v] != kNone) prev_[next_[v]] = prev_[v];
    next_[v] = prev_[v] = kNone;
  }

  void promote(VertexId v) {
    erase(v);
    ++rank_[v];
    push(v);
    top_ = std::max<std::size_t>(top_, rank_[v]);
  }

  // Removes and returns a vertex of maximal rank. `moves` counts how far the
  // top pointer had to slide down; the total over a run is O(n + m).
  VertexId pop_max(std::uint64_t& moves) {
    while (head_[top_] == kNone) {
      if (top_ == 0) return kNone;
      --top_;
      ++moves;
    }
    VertexId v = head_[top_];
    erase(v);
    return v;
  }

 private:
  void push(VertexId v) {
    std::uint32_t r = rank_[v];
    next_[v] = head_[r];
    prev_[v] = kNone;
    if (head_[r] != kNone) prev_[head_[r]] = v;
    head_[r] = v;
  }

  std::vector<VertexId> head_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<std::uint32_t> rank_;
  std::size_t top_ = 0;
};

}  // namespace

ForestPartition build_partition(const Graph& g, PartitionStats* stats) {
  const std::size_t n = g.num_vertices();
  ForestPartition partition;
  PartitionStats local;
  RankBuckets buckets(n);
  std::vector<bool> scanned(n, false);
  // rank of the vertex currently being scanned; it has left the buckets.
  std::uint32_t x_rank = 0;

  for (;;) {
    VertexId x = buckets.pop_max(local.bucket_pointer_moves);
    if (x == kNone) break;
    ++local.vertex_selections;
    x_rank = buckets.rank(x);
    for (VertexId y : g.neighbors(x)) {
      // An edge is unscanned exactly while both endpoints are unscanned.
      if (scanned[y]) continue;
      ++local.edge_scans;
      std::uint32_t y_rank = buckets.rank(y);
      if (partition.levels.size() <= y_rank) partition.levels.resize(y_rank + 1);
      partition.levels[y_rank].push_back(Edge(x, y));
      if (x_rank == y_rank) ++x_rank;
      buckets.promote(y);
      local.rank_updates += 1;
    }
    scanned[x] = true;
  }
  if (stats != nullptr) *stats = local;
  return partition;
}

SparseCertificate::SparseCertificate(const Graph& g, int k)
    : n_(g.num_vertices()) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "certificate requires k >= 1, got " + std::to_string(k));
  }
  levels_.resize(static_cast<std::size_t>(k));
  rebuild(g);
}

void SparseCertificate::rebuild(const Graph& g) {
  n_ = g.num_vertices();
  ForestPartition partition = build_partition(g);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    Level& level = levels_[i];
    level.forest = LctForest(n_);
    level.edges.clear();
    for (VertexId v = 0; v < n_; ++v) level.forest.make_tree(v);
    if (i >= partition.levels.size()) continue;
    level.edges.reserve(partition.levels[i].size());
    for (const Edge& e : partition.levels[i]) {
      level.forest.make_root(e.a);
      level.forest.link(e.a, e.b);
      level.edges.insert(e);
    }
  }
}

SparseCertificate::Level& SparseCertificate::level_at(int level) {
  if (level < 1 || level > k()) {
    throw Error(ErrorCode::kOutOfRange,
                "certificate level " + std::to_string(level) +
                    " outside [1, " + std::to_string(k()) + "]");
  }
  return levels_[static_cast<std::size_t>(level - 1)];
}

const SparseCertificate::Level& SparseCertificate::level_at(int level) const {
  return const_cast<SparseCertificate*>(this)->level_at(level);
}

std::size_t SparseCertificate::size() const {
  std::size_t total = 0;
  for (const Level& level : levels_) total += level.edges.size();
  return total;
}

const EdgeSet& SparseCertificate::level_edges(int level) const {
  return level_at(level).edges;
}

std::optional<int> SparseCertificate::level_of(Edge e) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].edges.contains(e)) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

bool SparseCertificate::connected(int level, VertexId u, VertexId v) {
  return level_at(level).forest.connected(u, v);
}

std::optional<Edge> SparseCertificate::try_add(int level, VertexId u,
                                                VertexId v) {
  Level& lv = level_at(level);
  const Edge e(u, v);
  if (e.is_loop()) {
    throw Error(ErrorCode::kSelfLoop, "try_add: self-loop " + to_string(e));
  }
  if (lv.edges.contains(e)) {
    throw Error(ErrorCode::kDuplicateEdge,
                "try_add: " + to_string(e) + " already in level " +
                    std::to_string(level));
  }
  // Rooting at v makes u's parent the first hop of the u-v tree path.
  lv.forest.make_root(v);
  if (lv.forest.find_root(u) != v) {
    lv.forest.make_root(u);
    lv.forest.link(u, v);
    lv.edges.insert(e);
    return std::nullopt;
  }
  const VertexId p = *lv.forest.parent(u);
  lv.forest.cut(u);
  lv.forest.link(u, v);
  const Edge out(u, p);
  lv.edges.erase(out);
  lv.edges.insert(e);
  return out;
}

AdditionOutcome SparseCertificate::handle_addition(Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kMissingEdge,
                "handle_addition: " + to_string(e) + " not in graph");
  }
  if (auto level = level_of(e)) {
    throw Error(ErrorCode::kDuplicateEdge,
                "handle_addition: " + to_string(e) + " already in level " +
                    std::to_string(*level));
  }
  // The displaced edge always has the original endpoint x as its child, so
  // x carries through the whole cascade and only the far endpoint changes.
  const VertexId x = e.a;
  VertexId y = e.b;
  for (int level = 1; level <= k(); ++level) {
    std::optional<Edge> displaced = try_add(level, x, y);
    if (!displaced) return AdditionOutcome::absorbed(level);
    y = displaced->other(x);
  }
  const Edge redundant(x, y);
  g.remove_edge(redundant);
  return AdditionOutcome::discarded_edge(k(), redundant);
}

void SparseCertificate::remove_from_certificate(const Graph& g, Edge e) {
  if (g.has_edge(e)) {
    throw Error(ErrorCode::kInvalidArgument,
                "remove_from_certificate: " + to_string(e) +
                    " still present in graph");
  }
  rebuild(g);
}

std::vector<std::vector<Edge>> SparseCertificate::export_levels() const {
  std::vector<std::vector<Edge>> out;
  out.reserve(levels_.size());
  for (const Level& level : levels_) {
    std::vector<Edge> edges(level.edges.begin(), level.edges.end());
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<std::string> SparseCertificate::check_invariants(const Graph& g) {
  std::vector<std::string> violations;
  EdgeSet seen;
  for (int level = 1; level <= k(); ++level) {
    Level& lv = levels_[static_cast<std::size_t>(level - 1)];
    const std::string tag = "level " + std::to_string(level) + ": ";
    for (const Edge& e : lv.edges) {
      if (!g.has_edge(e)) {
        violations.push_back(tag + to_string(e) + " is not a graph edge");
      }
      if (!seen.insert(e).second) {
        violations.push_back(tag + to_string(e) + " shared with another level");
      }
    }
    EdgeSet represented;
    for (VertexId v = 0; v < n_; ++v) {
      if (auto p = lv.forest.parent(v)) represented.insert(Edge(v, *p));
    }
    if (represented != lv.edges) {
      violations.push_back(tag + "link-cut forest disagrees with edge set");
    }
    // A forest on n vertices with c components has exactly n - c edges.
    std::vector<VertexId> uf(n_);
    std::iota(uf.begin(), uf.end(), VertexId{0});
    auto find = [&uf](VertexId v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    for (const Edge& e : lv.edges) {
      VertexId ra = find(e.a);
      VertexId rb = find(e.b);
      if (ra == rb) {
        violations.push_back(tag + "cycle through " + to_string(e));
        break;
      }
      uf[ra] = rb;
    }
  }
  const std::size_t bound =
      static_cast<std::size_t>(k()) * (n_ == 0 ? 0 : n_ - 1);
  if (size() > bound) {
    violations.push_back("certificate size " + std::to_string(size()) +
                         " exceeds k(n-1) = " + std::to_string(bound));
  }
  return violations;
}

LctStats SparseCertificate::lct_stats() const {
  LctStats total;
  for (const Level& level : levels_) total += level.forest.stats();
  return total;
}

void SparseCertificate::reset_lct_stats() {
  for (Level& level : levels_) level.forest.reset_stats();
}

}  // namespace kconn
