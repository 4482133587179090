#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"
#include "kconn/certificate.hpp"
#include "kconn/io.hpp"
#include "test_support.hpp"

using namespace kconn;
using namespace kconn::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("kconn_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_graph_file(const std::string& path, const Graph& g, int k) {
  std::ostringstream s;
  io::write_graph(s, g, k);
  write_text(path, s.str());
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(int (*cmd)(const cli::RunConfig&, std::ostream&, std::ostream&),
        const cli::RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cmd(cfg, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("replay") {
  TempDir dir;
  write_graph_file(dir.file("g.txt"), harary_graph(2, 6), 2);
  write_text(dir.file("t.txt"), "# two updates\na 0 3\nd 0 1\n");
  cli::RunConfig cfg;
  cfg.graph_path = dir.file("g.txt");
  cfg.trace_path = dir.file("t.txt");
  cfg.check_every = 1;

  SUBCASE("valid trace") {
    Run r = run(cli::cmd_replay, cfg);
    CHECK(r.code == cli::kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["commands"] == 2);
    CHECK(doc["violations"].empty());
  }
  SUBCASE("malformed trace") {
    write_text(dir.file("t.txt"), "a 0 3\nq 1 2\n");
    Run r = run(cli::cmd_replay, cfg);
    CHECK(r.code == cli::kExitInputError);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("k above the graph's connectivity") {
    cfg.k = 3;
    Run r = run(cli::cmd_replay, cfg);
    CHECK(r.code == cli::kExitInputError);
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("invalid command in trace") {
    write_text(dir.file("t.txt"), "a 0 3\nd 0 2\n");
    Run r = run(cli::cmd_replay, cfg);
    CHECK(r.code == cli::kExitInputError);
    CHECK(r.err.find("command 1") != std::string::npos);
  }
  SUBCASE("missing file") {
    cfg.graph_path = dir.file("absent.txt");
    CHECK(run(cli::cmd_replay, cfg).code == cli::kExitInputError);
  }
  SUBCASE("reports are deterministic") {
    cfg.output_path = dir.file("r1.json");
    CHECK(run(cli::cmd_replay, cfg).code == cli::kExitOk);
    cfg.output_path = dir.file("r2.json");
    CHECK(run(cli::cmd_replay, cfg).code == cli::kExitOk);
    CHECK(read_text(dir.file("r1.json")) == read_text(dir.file("r2.json")));
    CHECK_FALSE(read_text(dir.file("r1.json")).empty());
  }
}

TEST_CASE("verify") {
  TempDir dir;
  cli::RunConfig cfg;
  cfg.graph_path = dir.file("g.txt");

  SUBCASE("K5, k = 3") {
    write_graph_file(cfg.graph_path, complete_graph(5), 3);
    Run r = run(cli::cmd_verify, cfg);
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("PASS") != std::string::npos);
  }
  SUBCASE("tree, k = 1") {
    write_graph_file(cfg.graph_path, graph_of(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}), 1);
    CHECK(run(cli::cmd_verify, cfg).code == cli::kExitOk);
  }
  SUBCASE("corrupted certificate") {
    Graph k5 = complete_graph(5);
    write_graph_file(cfg.graph_path, k5, 3);
    auto levels = SparseCertificate(k5, 3).export_levels();
    // Close a cycle inside level 2.
    REQUIRE(levels[1].size() >= 1);
    levels[1].push_back(levels[0].front());
    std::ostringstream s;
    io::write_certificate(s, levels);
    write_text(dir.file("c.txt"), s.str());
    cfg.cert_path = dir.file("c.txt");
    Run r = run(cli::cmd_verify, cfg);
    CHECK(r.code == cli::kExitViolation);
    CHECK(r.out.find("level 2") != std::string::npos);
  }
  SUBCASE("graph too large") {
    write_graph_file(cfg.graph_path, harary_graph(2, 60), 2);
    CHECK(run(cli::cmd_verify, cfg).code == cli::kExitInputError);
  }
}

TEST_CASE("gen, replay, verify pipeline") {
  TempDir dir;
  std::mt19937_64 rng(12);
  for (int sample = 0; sample < 10; ++sample) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const std::size_t n = static_cast<std::size_t>(k) + 2 + rng() % (49 - k);
    cli::RunConfig gen;
    gen.k = k;
    gen.n = n;
    gen.length = 60;
    gen.seed = sample + 1;
    gen.graph_path = dir.file("g.txt");
    gen.trace_path = dir.file("t.txt");
    REQUIRE(run(cli::cmd_gen, gen).code == cli::kExitOk);

    cli::RunConfig rep;
    rep.graph_path = gen.graph_path;
    rep.trace_path = gen.trace_path;
    rep.check_every = 1;
    rep.graph_out_path = dir.file("g2.txt");
    rep.cert_out_path = dir.file("c2.txt");
    Run r = run(cli::cmd_replay, rep);
    CHECK_MESSAGE(r.code == cli::kExitOk, r.err);

    cli::RunConfig ver;
    ver.graph_path = rep.graph_out_path;
    ver.cert_path = rep.cert_out_path;
    Run v = run(cli::cmd_verify, ver);
    CHECK_MESSAGE(v.code == cli::kExitOk, v.out << v.err);
  }
}

TEST_CASE("gen rejects impossible sizes") {
  cli::RunConfig gen;
  gen.k = 4;
  gen.n = 4;
  CHECK(run(cli::cmd_gen, gen).code == cli::kExitInputError);
}

TEST_CASE("bench smoke") {
  TempDir dir;
  cli::RunConfig cfg;
  cfg.k = 2;
  cfg.bench_sizes = {16, 32};
  cfg.additions = 50;
  cfg.deletions = 2;
  cfg.density = 4;
  cfg.output_path = dir.file("b.json");
  Run r = run(cli::cmd_bench, cfg);
  CHECK(r.code == cli::kExitOk);
  auto doc = nlohmann::json::parse(read_text(cfg.output_path));
  CHECK(doc["additions"].size() == 2);
  CHECK(doc["deletions"]["samples"] == 2);
}
