#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kconn/error.hpp"
#include "kconn/max_flow.hpp"
#include "kconn/oracle.hpp"
#include "test_support.hpp"

using namespace kconn;
using namespace kconn::testing;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> v) { return v; }

int crossing(const Graph& g, const std::vector<VertexId>& side) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : side) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.a] != in[e.b]) ++count;
  }
  return count;
}

// Splits the flow into unit s-t walks by following arcs with flow +1.
// Each arc is consumed once, so the walks are edge-disjoint.
std::vector<std::vector<VertexId>> decompose(const Graph& g, const ResidualGraph& r,
                                             VertexId s, VertexId t, int value) {
  EdgeSet used;
  std::vector<std::vector<VertexId>> walks;
  for (int i = 0; i < value; ++i) {
    std::vector<VertexId> walk{s};
    VertexId cur = s;
    while (cur != t && walk.size() <= 2 * g.num_edges() + 1) {
      bool moved = false;
      for (VertexId w : g.neighbors(cur)) {
        if (r.flow(cur, w) == 1 && !used.contains(Edge(cur, w))) {
          used.insert(Edge(cur, w));
          walk.push_back(w);
          cur = w;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

void check_flow(const Graph& g, VertexId s, VertexId t) {
  FlowResult res = dinic_max_flow(g, s, t);
  REQUIRE(res.value == oracle::local_connectivity(g, s, t));
  const ResidualGraph& r = res.residual;

  // Skew symmetry, capacity and conservation.
  std::vector<int> excess(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    const int f = r.flow(e.a, e.b);
    CHECK(f == -r.flow(e.b, e.a));
    CHECK(r.residual_capacity(e.a, e.b) == 1 - f);
    CHECK(r.residual_capacity(e.b, e.a) == 1 + f);
    excess[e.a] -= f;
    excess[e.b] += f;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == s) {
      CHECK(excess[v] == -res.value);
    } else if (v == t) {
      CHECK(excess[v] == res.value);
    } else {
      CHECK(excess[v] == 0);
    }
  }

  // Min cut equality: residual-reachable side of s is a cut of size value.
  auto S = r.reachable_from(s);
  auto T = r.reaching(t);
  CHECK_FALSE(std::binary_search(S.begin(), S.end(), t));
  CHECK(crossing(g, S) == res.value);
  CHECK(crossing(g, T) == res.value);
  for (VertexId v : S) CHECK_FALSE(std::binary_search(T.begin(), T.end(), v));

  // Menger: the flow splits into value edge-disjoint s-t walks.
  auto walks = decompose(g, r, s, t, res.value);
  for (const auto& walk : walks) {
    CHECK(walk.front() == s);
    CHECK(walk.back() == t);
  }
}

}  // namespace

TEST_CASE("max flow values on small graphs") {
  CHECK(dinic_max_flow(cycle_graph(4), 0, 2).value == 2);
  CHECK(dinic_max_flow(complete_graph(4), 0, 3).value == 3);
  CHECK(dinic_max_flow(path_graph(5), 0, 4).value == 1);
  CHECK(dinic_max_flow(graph_of(4, {{0, 1}, {2, 3}}), 0, 3).value == 0);
  CHECK_THROWS_AS(dinic_max_flow(cycle_graph(4), 1, 1), Error);
}

TEST_CASE("residual examples") {
  SUBCASE("C4 saturates both sides") {
    FlowResult res = dinic_max_flow(cycle_graph(4), 0, 2);
    CHECK(res.residual.reachable_from(0) == ids({0}));
    CHECK(res.residual.reaching(2) == ids({2}));
  }
  SUBCASE("single saturated edge") {
    FlowResult res = dinic_max_flow(path_graph(2), 0, 1);
    CHECK(res.value == 1);
    CHECK(res.residual.residual_capacity(0, 1) == 0);
    CHECK(res.residual.residual_capacity(1, 0) == 2);
    CHECK(res.residual.reachable_from(0) == ids({0}));
  }
  SUBCASE("zero flow leaves the component of s") {
    Graph g = graph_of(5, {{0, 1}, {1, 2}, {3, 4}});
    FlowResult res = dinic_max_flow(g, 0, 4);
    CHECK(res.value == 0);
    CHECK(res.residual.reachable_from(0) == ids({0, 1, 2}));
    CHECK(res.residual.reaching(4) == ids({3, 4}));
    CHECK(res.residual.residual_capacity(0, 1) == 1);
    CHECK(res.residual.residual_capacity(1, 0) == 1);
    CHECK(res.residual.residual_capacity(0, 2) == 0);
  }
}

TEST_CASE("cap stops early") {
  Graph k6 = complete_graph(6);
  CHECK(dinic_max_flow(k6, 0, 5, 2).value == 2);
  CHECK(dinic_max_flow(k6, 0, 5, 10).value == 5);
  CHECK(dinic_max_flow(path_graph(3), 0, 2, 4).value == 1);
}

TEST_CASE("flow on explicit edge lists") {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  CHECK(dinic_max_flow(4, edges, 0, 2).value == 2);
  CHECK(dinic_max_flow(4, edges, 0, 3).value == 1);
}

TEST_CASE("random graphs agree with the reference solver") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 24;
    Graph g = random_graph(n, 0.15 + 0.6 * (trial % 7) / 7.0, rng);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    VertexId s = pick(rng);
    VertexId t = pick(rng);
    if (s == t) t = (s + 1) % n;
    check_flow(g, s, t);
  }
}

TEST_CASE("dense k-connected graphs") {
  std::mt19937_64 rng(29);
  for (int k = 1; k <= 6; ++k) {
    Graph g = random_k_connected(40, k, 60, rng);
    for (VertexId t = 1; t < 40; t += 7) check_flow(g, 0, t);
  }
}
