#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kconn/bench.hpp"
#include "kconn/error.hpp"
#include "kconn/generators.hpp"
#include "kconn/io.hpp"
#include "kconn/maintainer.hpp"
#include "kconn/verify.hpp"

namespace kconn::cli {

namespace {

constexpr std::size_t kVerifyLimit = 50;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  file << content;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    write_file(cfg.output_path, text);
  }
}

int resolve_k(const RunConfig& cfg, int file_k) {
  int k = cfg.k.value_or(file_k);
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be at least 1, got " + std::to_string(k));
  }
  return k;
}

}  // namespace

int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    io::GraphFile file = io::load_graph(cfg.graph_path);
    const int k = resolve_k(cfg, file.k);
    UpdateTrace trace = io::load_trace(cfg.trace_path);
    MaintainerOptions options;
    options.use_sparsifier = cfg.sparsify;
    Maintainer maintainer(std::move(file.graph), k, options);
    RunReport report = maintainer.replay(trace, cfg.check_every);
    emit(cfg, out, io::report_json(report, k));
    if (!cfg.graph_out_path.empty()) {
      std::ostringstream text;
      io::write_graph(text, maintainer.graph(), k);
      write_file(cfg.graph_out_path, text.str());
    }
    if (!cfg.cert_out_path.empty()) {
      std::ostringstream text;
      io::write_certificate(text, maintainer.certificate().export_levels());
      write_file(cfg.cert_out_path, text.str());
    }
    for (const Violation& v : report.violations) {
      err << "violation after command " << v.index << ": " << v.message << '\n';
    }
    return report.violations.empty() ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    err << "replay: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const int k = resolve_k(cfg, 0);
    Graph g = harary_graph(k, cfg.n);
    TraceOptions options;
    options.length = cfg.length;
    options.seed = cfg.seed;
    options.use_sparsifier = cfg.sparsify;
    UpdateTrace trace = random_trace(g, k, options);

    std::ostringstream graph_text;
    io::write_graph(graph_text, g, k);
    std::ostringstream trace_text;
    trace_text << "# H_{" << k << "," << cfg.n << "} seed " << cfg.seed << '\n';
    io::write_trace(trace_text, trace);
    if (cfg.graph_path.empty()) {
      out << graph_text.str();
    } else {
      write_file(cfg.graph_path, graph_text.str());
    }
    if (!cfg.trace_path.empty()) write_file(cfg.trace_path, trace_text.str());
    return kExitOk;
  } catch (const Error& e) {
    err << "gen: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<oracle::VerifyFailure> failures;
  try {
    io::GraphFile file = io::load_graph(cfg.graph_path);
    const int k = resolve_k(cfg, file.k);
    if (file.graph.num_vertices() > kVerifyLimit) {
      throw Error(ErrorCode::kTooLarge,
                  "verify supports at most " + std::to_string(kVerifyLimit) +
                      " vertices");
    }
    std::vector<std::vector<Edge>> levels;
    if (cfg.cert_path.empty()) {
      levels = SparseCertificate(file.graph, k).export_levels();
    } else {
      levels = io::load_certificate(cfg.cert_path);
    }
    failures = oracle::verify_certificate(file.graph, k, levels);
  } catch (const Error& e) {
    err << "verify: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
  std::ostringstream text;
  if (failures.empty()) {
    text << "verify: PASS\n";
  } else {
    text << "verify: FAIL (" << failures.size() << " violations)\n";
    for (const auto& f : failures) text << "  " << f.message << '\n';
  }
  emit(cfg, out, text.str());
  return failures.empty() ? kExitOk : kExitViolation;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const int k = resolve_k(cfg, 3);
    std::vector<std::size_t> sizes = cfg.bench_sizes;
    if (sizes.empty()) sizes = {1u << 10, 1u << 12, 1u << 14, 1u << 16};

    nlohmann::json doc;
    doc["k"] = k;
    doc["seed"] = cfg.seed;
    std::ostringstream table;
    table << std::fixed << std::setprecision(3);
    table << "additions (k=" << k << ", " << cfg.additions << " per size)\n";
    table << std::setw(8) << "n" << std::setw(14) << "steps/add"
          << std::setw(14) << "steps/(k lg n)" << std::setw(12) << "ops/add"
          << std::setw(12) << "seconds" << '\n';
    double previous_steps = 0;
    double previous_log = 0;
    for (std::size_t n : sizes) {
      const bench::AdditionCost cost =
          bench::measure_additions(n, k, cfg.additions, cfg.seed);
      const double lg = std::log2(static_cast<double>(n));
      const double c = cost.steps_per_addition / (k * lg);
      table << std::setw(8) << n << std::setw(14) << cost.steps_per_addition
            << std::setw(14) << c << std::setw(12)
            << cost.operations_per_addition << std::setw(12) << cost.seconds
            << '\n';
      nlohmann::json row{{"n", n},
                         {"steps_per_addition", cost.steps_per_addition},
                         {"c", c},
                         {"operations_per_addition", cost.operations_per_addition},
                         {"discard_fraction", cost.discard_fraction},
                         {"seconds", cost.seconds}};
      if (previous_steps > 0) {
        row["growth_ratio"] = cost.steps_per_addition / previous_steps;
        row["log_ratio"] = lg / previous_log;
      }
      previous_steps = cost.steps_per_addition;
      previous_log = lg;
      doc["additions"].push_back(row);
    }

    const std::size_t n_del = sizes.front();
    const Graph dense = bench::dense_k_connected(n_del, k, cfg.density, cfg.seed);
    const bench::DeletionCost del =
        bench::measure_deletions(dense, k, cfg.deletions, cfg.seed);
    table << "deletions (n=" << del.n << ", m=" << del.m << ", "
          << del.deletions << " samples)\n";
    table << "  handle_deletion  plain " << del.seconds_plain * 1e3
          << " ms, sparsified " << del.seconds_sparsified * 1e3 << " ms\n";
    table << "  flow test only   plain " << del.flow_seconds_plain * 1e3
          << " ms, sparsified " << del.flow_seconds_sparsified * 1e3 << " ms\n";
    doc["deletions"] = {{"n", del.n},
                        {"m", del.m},
                        {"samples", del.deletions},
                        {"seconds_plain", del.seconds_plain},
                        {"seconds_sparsified", del.seconds_sparsified},
                        {"flow_seconds_plain", del.flow_seconds_plain},
                        {"flow_seconds_sparsified", del.flow_seconds_sparsified}};
    out << table.str();
    if (!cfg.output_path.empty()) write_file(cfg.output_path, doc.dump(2) + "\n");
    return kExitOk;
  } catch (const Error& e) {
    err << "bench: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace kconn::cli
