#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kconn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
};

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string trace_path;
  std::string cert_path;
  std::string output_path;
  std::string cert_out_path;
  std::string graph_out_path;
  std::optional<int> k;
  std::size_t check_every = 0;
  std::uint64_t seed = 1;
  bool sparsify = false;
  // gen
  std::size_t n = 0;
  std::size_t length = 200;
  // bench
  std::vector<std::size_t> bench_sizes;
  std::size_t additions = 10000;
  std::size_t deletions = 20;
  std::size_t density = 32;
};

// Each command writes human-readable diagnostics to `err` and returns an
// ExitCode. Reports go to cfg.output_path, or to `out` when it is empty.
int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace kconn::cli
