#include "kconn/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "kconn/error.hpp"
#include "kconn/oracle.hpp"

namespace kconn::oracle {

namespace {

std::string level_tag(int level) { return "level " + std::to_string(level) + ": "; }

}  // namespace

std::vector<VerifyFailure> verify_certificate(
    const Graph& g, int k, const std::vector<std::vector<Edge>>& levels,
    unsigned threads) {
  std::vector<VerifyFailure> failures;
  const std::size_t n = g.num_vertices();
  if (k < 1) {
    failures.push_back({0, "k must be at least 1"});
    return failures;
  }
  if (levels.size() != static_cast<std::size_t>(k)) {
    failures.push_back({0, "certificate has " + std::to_string(levels.size()) +
                               " levels, expected " + std::to_string(k)});
  }
  if (n >= 2 && !is_k_edge_connected(g, k)) {
    failures.push_back({0, "graph edge connectivity " +
                               std::to_string(global_connectivity(g)) +
                               " below k = " + std::to_string(k)});
  }

  // Structural checks; prefix graphs G_i are built along the way.
  EdgeSet seen;
  std::vector<Graph> prefixes;
  Graph prefix(n);
  std::size_t total = 0;
  bool structural_ok = true;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int level = static_cast<int>(i + 1);
    std::vector<VertexId> uf(n);
    std::iota(uf.begin(), uf.end(), VertexId{0});
    auto find = [&uf](VertexId v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    for (const Edge& e : levels[i]) {
      ++total;
      if (e.a >= n || e.b >= n || !g.has_edge(e)) {
        failures.push_back({level, level_tag(level) + to_string(e) +
                                       " is not a graph edge"});
        structural_ok = false;
        continue;
      }
      if (!seen.insert(e).second) {
        failures.push_back({level, level_tag(level) + to_string(e) +
                                       " repeats an edge of another level"});
        structural_ok = false;
        continue;
      }
      VertexId ra = find(e.a);
      VertexId rb = find(e.b);
      if (ra == rb) {
        failures.push_back({level, level_tag(level) + "cycle closed by " +
                                       to_string(e)});
        structural_ok = false;
      }
      uf[ra] = rb;
      prefix.add_edge(e);
    }
    prefixes.push_back(prefix);
  }
  const std::size_t bound = static_cast<std::size_t>(k) * (n == 0 ? 0 : n - 1);
  if (total > bound) {
    failures.push_back({0, "certificate size " + std::to_string(total) +
                               " exceeds k(n-1) = " + std::to_string(bound)});
  }
  if (!structural_ok || n < 2) return failures;

  std::vector<Edge> pairs;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
  auto check_range = [&](std::size_t begin, std::size_t end) {
    std::vector<VerifyFailure> found;
    for (std::size_t p = begin; p < end; ++p) {
      const Edge& xy = pairs[p];
      const int whole = local_connectivity(g, xy.a, xy.b);
      for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const int level = static_cast<int>(i + 1);
        const int need = std::min(whole, level);
        const int got = local_connectivity(prefixes[i], xy.a, xy.b, need);
        if (got < need) {
          found.push_back({level, level_tag(level) + "pair " + to_string(xy) +
                                      " has λ = " + std::to_string(got) +
                                      " in F_1..F_" + std::to_string(level) +
                                      ", needs " + std::to_string(need)});
        }
      }
    }
    return found;
  };
  std::vector<std::future<std::vector<VerifyFailure>>> workers;
  const std::size_t chunk = (pairs.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < pairs.size(); begin += chunk) {
    workers.push_back(std::async(std::launch::async, check_range, begin,
                                 std::min(pairs.size(), begin + chunk)));
  }
  for (auto& worker : workers) {
    auto found = worker.get();
    failures.insert(failures.end(), found.begin(), found.end());
  }
  return failures;
}

}  // namespace kconn::oracle
