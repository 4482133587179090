#include "kconn/maintainer.hpp"

#include <sstream>
#include <utility>

#include "kconn/oracle.hpp"

namespace kconn {

std::string_view to_string(UpdateOutcome::Kind kind) {
  switch (kind) {
    case UpdateOutcome::Kind::kAbsorbed: return "absorbed";
    case UpdateOutcome::Kind::kDiscarded: return "discarded";
    case UpdateOutcome::Kind::kRejected: return "rejected";
    case UpdateOutcome::Kind::kStillConnected: return "still-connected";
    case UpdateOutcome::Kind::kAugmented: return "augmented";
  }
  return "unknown";
}

namespace {

SparseCertificate checked_certificate(const Graph& g, int k,
                                      const MaintainerOptions& options,
                                      bool& skipped) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be at least 1, got " + std::to_string(k));
  }
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "maintained graph needs at least 2 vertices");
  }
  skipped = g.num_vertices() > options.precheck_limit;
  if (!skipped && !oracle::is_k_edge_connected(g, k)) {
    throw Error(ErrorCode::kInsufficientConnectivity,
                "initial graph is not " + std::to_string(k) +
                    "-edge-connected (λ = " +
                    std::to_string(oracle::global_connectivity(g)) + ")");
  }
  return SparseCertificate(g, k);
}

}  // namespace

Maintainer::Maintainer(Graph g, int k, MaintainerOptions options)
    : k_(k),
      options_(options),
      g_(std::move(g)),
      cert_(checked_certificate(g_, k, options_, precheck_skipped_)) {
  stats_.absorbed_per_level.assign(static_cast<std::size_t>(k_), 0);
}

UpdateOutcome Maintainer::apply(const Command& cmd) {
  return cmd.op == Command::Op::kAdd ? apply_add(cmd.edge)
                                     : apply_delete(cmd.edge);
}

UpdateOutcome Maintainer::apply_add(Edge e) {
  g_.add_edge(e);
  ++stats_.additions;
  AdditionOutcome cascade = cert_.handle_addition(g_, e);
  UpdateOutcome out;
  if (cascade.kind == AdditionOutcome::Kind::kAbsorbed) {
    out.kind = UpdateOutcome::Kind::kAbsorbed;
    out.level = cascade.level;
    ++stats_.absorbed_per_level[static_cast<std::size_t>(cascade.level - 1)];
    return out;
  }
  out.discarded = cascade.discarded;
  if (cascade.discarded == e) {
    // handle_addition already took e back out of the graph.
    out.kind = UpdateOutcome::Kind::kRejected;
    ++stats_.rejections;
  } else {
    out.kind = UpdateOutcome::Kind::kDiscarded;
    ++stats_.discards;
  }
  return out;
}

UpdateOutcome Maintainer::apply_delete(Edge e) {
  DeletionOutcome repair =
      handle_deletion(g_, cert_, e, options_.use_sparsifier);
  ++stats_.deletions;
  stats_.flow_runs += repair.flow_runs;
  stats_.flow_phases += repair.flow_phases;
  UpdateOutcome out;
  out.via_intermediate = repair.via_intermediate;
  out.edges_added = std::move(repair.edges_added);
  out.edges_discarded = std::move(repair.edges_discarded);
  if (repair.kind == DeletionOutcome::Kind::kStillConnected) {
    out.kind = UpdateOutcome::Kind::kStillConnected;
    ++stats_.still_connected;
    return out;
  }
  out.kind = UpdateOutcome::Kind::kAugmented;
  ++stats_.augmentations;
  stats_.augmenting_edges += out.edges_added.size();
  if (out.edges_added.size() == 2) ++stats_.two_edge_cases;
  if (repair.rounds > 1) stats_.repeat_rounds += repair.rounds - 1;
  stats_.cascade_discards += out.edges_discarded.size();
  return out;
}

std::vector<std::string> Maintainer::check_now() {
  std::vector<std::string> problems = cert_.check_invariants(g_);
  if (g_.num_vertices() <= options_.precheck_limit) {
    const int lambda = oracle::global_connectivity(g_);
    if (lambda < k_) {
      problems.push_back("edge connectivity " + std::to_string(lambda) +
                         " below k = " + std::to_string(k_));
    }
  }
  return problems;
}

std::string Maintainer::dump_state() const {
  std::ostringstream os;
  os << "n=" << g_.num_vertices() << " m=" << g_.num_edges() << " k=" << k_
     << "\nedges:";
  for (const Edge& e : g_.sorted_edges()) os << ' ' << e.a << ',' << e.b;
  const auto levels = cert_.export_levels();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    os << "\nF" << (i + 1) << ':';
    for (const Edge& e : levels[i]) os << ' ' << e.a << ',' << e.b;
  }
  os << '\n';
  return os.str();
}

RunReport Maintainer::replay(const UpdateTrace& trace,
                             std::size_t check_every) {
  RunReport report;
  report.oracle_skipped =
      check_every > 0 && g_.num_vertices() > options_.precheck_limit;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      apply(trace[i]);
    } catch (const Error& err) {
      throw CommandError(i, err);
    }
    ++report.commands;
    const bool due = check_every > 0 && ((i + 1) % check_every == 0 ||
                                         i + 1 == trace.size());
    if (!due) continue;
    ++report.checks;
    for (std::string& message : check_now()) {
      report.violations.push_back({i + 1, std::move(message)});
    }
    if (!report.violations.empty()) {
      report.state_dump = dump_state();
      break;
    }
  }
  report.stats = stats_;
  report.final_edges = g_.num_edges();
  report.certificate_size = cert_.size();
  return report;
}

}  // namespace kconn
