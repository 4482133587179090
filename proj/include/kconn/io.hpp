#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/maintainer.hpp"

namespace kconn::io {

// Text graph: header `n m k`, then m lines `u v` with u < v.
struct GraphFile {
  Graph graph;
  int k = 0;
};

GraphFile read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, int k);

// Trace: one `a u v` or `d u v` per line; `#` starts a comment.
UpdateTrace read_trace(std::istream& in);
void write_trace(std::ostream& out, const UpdateTrace& trace);

// Certificate export: line i lists level-i edges as sorted `u,v` tokens.
std::vector<std::vector<Edge>> read_certificate(std::istream& in);
void write_certificate(std::ostream& out,
                       const std::vector<std::vector<Edge>>& levels);

// Key-value report document (JSON, keys sorted).
std::string report_json(const RunReport& report, int k);

GraphFile load_graph(const std::string& path);
UpdateTrace load_trace(const std::string& path);
std::vector<std::vector<Edge>> load_certificate(const std::string& path);

}  // namespace kconn::io
