#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "kconn/error.hpp"
#include "kconn/io.hpp"
#include "test_support.hpp"

using namespace kconn;
using namespace kconn::testing;

namespace {

std::string parse_error(const std::string& text, auto reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  FAIL("expected parse error");
  return {};
}

}  // namespace

TEST_CASE("graph round trip is bit-exact") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(3 + trial, 0.3, rng);
    std::ostringstream first;
    io::write_graph(first, g, 2);
    std::istringstream in(first.str());
    io::GraphFile file = io::read_graph(in);
    CHECK(file.k == 2);
    CHECK(file.graph == g);
    std::ostringstream second;
    io::write_graph(second, file.graph, file.k);
    CHECK(second.str() == first.str());
  }
}

TEST_CASE("graph format") {
  std::ostringstream out;
  io::write_graph(out, graph_of(3, {{2, 1}, {0, 2}}), 1);
  CHECK(out.str() == "3 2 1\n0 2\n1 2\n");
}

TEST_CASE("graph parse errors name the line") {
  auto read = [](std::istream& in) { io::read_graph(in); };
  CHECK(parse_error("3 2 1\n0 1\n1 x\n", read).find("line 3") != std::string::npos);
  CHECK(parse_error("3 2 1\n0 1\n", read).find("line") != std::string::npos);
  CHECK(parse_error("3 1 1\n1 0\n", read).find("line 2") != std::string::npos);
  CHECK(parse_error("3 1 1\n0 5\n", read).find("line 2") != std::string::npos);
  CHECK(parse_error("3 2 1\n0 1\n0 1\n", read).find("line 3") != std::string::npos);
  CHECK(parse_error("", read).find("line 1") != std::string::npos);
}

TEST_CASE("trace format") {
  std::istringstream in("# header\na 0 1\n\nd 2 3  # trailing\n");
  UpdateTrace trace = io::read_trace(in);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0] == Command{Command::Op::kAdd, Edge(0, 1)});
  CHECK(trace[1] == Command{Command::Op::kDelete, Edge(2, 3)});

  std::ostringstream out;
  io::write_trace(out, trace);
  std::istringstream back(out.str());
  CHECK(io::read_trace(back) == trace);

  auto read = [](std::istream& s) { io::read_trace(s); };
  CHECK(parse_error("a 0 1\nx 1 2\n", read).find("line 2") != std::string::npos);
  CHECK(parse_error("a 0\n", read).find("line 1") != std::string::npos);
  CHECK(parse_error("a 0 1\nd 1 1\n", read).find("line 2") != std::string::npos);
}

TEST_CASE("certificate format") {
  std::vector<std::vector<Edge>> levels{{Edge(0, 1), Edge(1, 2)}, {Edge(0, 2)}, {}};
  std::ostringstream out;
  io::write_certificate(out, levels);
  CHECK(out.str() == "0,1 1,2\n0,2\n\n");
  std::istringstream in(out.str());
  CHECK(io::read_certificate(in) == levels);

  auto read = [](std::istream& s) { io::read_certificate(s); };
  CHECK(parse_error("0,1\n1-2\n", read).find("line 2") != std::string::npos);
}

TEST_CASE("report document") {
  RunReport r;
  r.commands = 3;
  r.checks = 3;
  r.final_edges = 7;
  r.stats.additions = 2;
  r.violations.push_back({2, "lambda 1 < 2"});
  auto doc = nlohmann::json::parse(io::report_json(r, 2));
  CHECK(doc["k"] == 2);
  CHECK(doc["commands"] == 3);
  CHECK(doc["final_edges"] == 7);
  CHECK(doc["violations"].size() == 1);
  CHECK(io::report_json(r, 2) == io::report_json(r, 2));
}
