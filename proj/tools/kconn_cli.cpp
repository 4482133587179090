// kconn: maintain a k-edge-connected graph under edge updates.
//
//   kconn gen    --k 3 --n 20 --seed 7 --graph g.txt --trace t.txt
//   kconn replay --graph g.txt --trace t.txt --check-every 10 --out report.json
//   kconn verify --graph g.txt [--cert cert.txt]
//   kconn bench  --k 3 [--n 1024 ...]

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace kconn::cli;
  CLI::App app{"Maintain lambda(G) >= k under edge insertions and deletions"};
  app.require_subcommand(1);
  RunConfig cfg;
  int k = 0;

  auto add_k = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", k, "required edge connectivity");
    if (required) opt->required();
    return opt;
  };

  CLI::App* replay = app.add_subcommand("replay", "replay a trace against a graph");
  replay->add_option("--graph", cfg.graph_path, "graph file")->required()->check(CLI::ExistingFile);
  replay->add_option("--trace", cfg.trace_path, "trace file")->required()->check(CLI::ExistingFile);
  CLI::Option* replay_k = add_k(replay, false);
  replay->add_option("--check-every", cfg.check_every, "oracle check period (0 = off)");
  replay->add_flag("--sparsify", cfg.sparsify, "sparsify before deletion flow tests");
  replay->add_option("--out", cfg.output_path, "report path (default stdout)");
  replay->add_option("--cert-out", cfg.cert_out_path, "write final certificate");
  replay->add_option("--graph-out", cfg.graph_out_path, "write final graph");

  CLI::App* gen = app.add_subcommand("gen", "emit a Harary graph and a valid random trace");
  add_k(gen, true);
  gen->add_option("--n", cfg.n, "vertex count")->required();
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--length", cfg.length, "trace length");
  gen->add_option("--graph", cfg.graph_path, "graph output (default stdout)");
  gen->add_option("--trace", cfg.trace_path, "trace output");
  gen->add_flag("--sparsify", cfg.sparsify, "shadow maintainer uses the sparsifier");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle suite on a certificate");
  verify->add_option("--graph", cfg.graph_path, "graph file")->required()->check(CLI::ExistingFile);
  verify->add_option("--cert", cfg.cert_path, "certificate file (default: build one)")->check(CLI::ExistingFile);
  CLI::Option* verify_k = add_k(verify, false);
  verify->add_option("--out", cfg.output_path, "result path (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "operation-count and timing tables");
  CLI::Option* bench_k = add_k(bench, false);
  bench->add_option("--seed", cfg.seed, "random seed");
  bench->add_option("--n", cfg.bench_sizes, "vertex counts (default 2^10..2^16)");
  bench->add_option("--additions", cfg.additions, "additions per size");
  bench->add_option("--deletions", cfg.deletions, "deletion samples");
  bench->add_option("--density", cfg.density, "edges per vertex for the deletion graph");
  bench->add_option("--out", cfg.output_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (gen->parsed() || replay_k->count() || verify_k->count() || bench_k->count()) {
    cfg.k = k;
  }
  if (replay->parsed()) return cmd_replay(cfg, std::cout, std::cerr);
  if (gen->parsed()) return cmd_gen(cfg, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(cfg, std::cout, std::cerr);
  return cmd_bench(cfg, std::cout, std::cerr);
}
