#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kconn/certificate.hpp"
#include "kconn/error.hpp"
#include "kconn/graph.hpp"
#include "kconn/restoration.hpp"

namespace kconn {

struct Command {
  enum class Op { kAdd, kDelete };

  Op op = Op::kAdd;
  Edge edge;

  friend bool operator==(const Command&, const Command&) = default;
};

using UpdateTrace = std::vector<Command>;

struct UpdateOutcome {
  enum class Kind {
    kAbsorbed,        // new edge kept; certificate absorbed the cascade
    kDiscarded,       // new edge kept; a different, redundant edge removed
    kRejected,        // new edge itself was redundant; graph unchanged
    kStillConnected,  // deletion left λ >= k
    kAugmented,       // deletion repaired with 1-2 new edges
  };

  Kind kind = Kind::kAbsorbed;
  int level = 0;                  // absorbing level for kAbsorbed
  Edge discarded;                 // for kDiscarded / kRejected
  std::vector<Edge> edges_added;  // for kAugmented
  std::vector<Edge> edges_discarded;
  bool via_intermediate = false;
};

std::string_view to_string(UpdateOutcome::Kind kind);

struct MaintainerStats {
  std::uint64_t additions = 0;
  std::vector<std::uint64_t> absorbed_per_level;  // index 0 is level 1
  std::uint64_t discards = 0;
  std::uint64_t rejections = 0;
  std::uint64_t deletions = 0;
  std::uint64_t still_connected = 0;
  std::uint64_t augmentations = 0;
  std::uint64_t augmenting_edges = 0;
  std::uint64_t two_edge_cases = 0;
  std::uint64_t repeat_rounds = 0;  // extra rounds beyond the first
  std::uint64_t cascade_discards = 0;  // pruned while absorbing repairs
  std::uint64_t flow_runs = 0;
  std::uint64_t flow_phases = 0;
};

struct MaintainerOptions {
  bool use_sparsifier = false;
  // The initial λ(g) >= k precondition is verified by the oracle only up to
  // this many vertices.
  std::size_t precheck_limit = 50;
};

struct Violation {
  std::size_t index = 0;  // commands applied when the check ran
  std::string message;
};

struct RunReport {
  std::size_t commands = 0;
  std::size_t checks = 0;
  bool oracle_skipped = false;
  MaintainerStats stats;
  std::size_t final_edges = 0;
  std::size_t certificate_size = 0;
  std::vector<Violation> violations;
  std::string state_dump;  // filled on the first violation
};

// Invalid command at a known position of a trace.
class CommandError : public Error {
 public:
  CommandError(std::size_t index, const Error& cause)
      : Error(cause.code(),
              "command " + std::to_string(index) + ": " + cause.what()),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Owns a graph kept at λ >= k and its sparse certificate.
class Maintainer {
 public:
  Maintainer(Graph g, int k, MaintainerOptions options = {});

  int k() const { return k_; }
  const Graph& graph() const { return g_; }
  SparseCertificate& certificate() { return cert_; }
  const SparseCertificate& certificate() const { return cert_; }
  const MaintainerStats& stats() const { return stats_; }
  bool precheck_skipped() const { return precheck_skipped_; }

  UpdateOutcome apply(const Command& cmd);
  UpdateOutcome add(Edge e) { return apply({Command::Op::kAdd, e}); }
  UpdateOutcome remove(Edge e) { return apply({Command::Op::kDelete, e}); }

  // Applies the trace, running the oracle and structural checks every
  // `check_every` commands (0 disables). Stops at the first violation.
  RunReport replay(const UpdateTrace& trace, std::size_t check_every);

  // Oracle + structural invariant messages for the current state.
  std::vector<std::string> check_now();

 private:
  UpdateOutcome apply_add(Edge e);
  UpdateOutcome apply_delete(Edge e);
  std::string dump_state() const;

  int k_;
  MaintainerOptions options_;
  Graph g_;
  SparseCertificate cert_;
  MaintainerStats stats_;
  bool precheck_skipped_ = false;
};

}  // namespace kconn
