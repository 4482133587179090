#include "kconn/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "kconn/error.hpp"

namespace kconn::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* field) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, std::string("invalid ") + field + " '" +
                          std::string(token) + "'");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  }
  return in;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;
  do {
    if (!std::getline(in, text)) parse_error(line_no + 1, "missing header `n m k`");
    ++line_no;
    tokens = split_ws(text);
  } while (tokens.empty());
  if (tokens.size() != 3) parse_error(line_no, "header must be `n m k`");
  const auto n = parse_number<std::uint32_t>(tokens[0], line_no, "n");
  const auto m = parse_number<std::size_t>(tokens[1], line_no, "m");
  const auto k = parse_number<int>(tokens[2], line_no, "k");

  GraphFile file{Graph(n), k};
  std::size_t read = 0;
  while (read < m) {
    if (!std::getline(in, text)) {
      parse_error(line_no + 1, "expected " + std::to_string(m) +
                                   " edges, found " + std::to_string(read));
    }
    ++line_no;
    tokens = split_ws(text);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) parse_error(line_no, "edge line must be `u v`");
    const auto u = parse_number<VertexId>(tokens[0], line_no, "vertex");
    const auto v = parse_number<VertexId>(tokens[1], line_no, "vertex");
    if (u >= v) parse_error(line_no, "edge endpoints must satisfy u < v");
    try {
      file.graph.add_edge(u, v);
    } catch (const Error& err) {
      parse_error(line_no, err.what());
    }
    ++read;
  }
  while (std::getline(in, text)) {
    ++line_no;
    if (!split_ws(text).empty()) parse_error(line_no, "trailing content");
  }
  return file;
}

void write_graph(std::ostream& out, const Graph& g, int k) {
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << k << '\n';
  for (const Edge& e : g.sorted_edges()) out << e.a << ' ' << e.b << '\n';
}

UpdateTrace read_trace(std::istream& in) {
  UpdateTrace trace;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view body(text);
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    auto tokens = split_ws(body);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || (tokens[0] != "a" && tokens[0] != "d")) {
      parse_error(line_no, "expected `a u v` or `d u v`");
    }
    const auto u = parse_number<VertexId>(tokens[1], line_no, "vertex");
    const auto v = parse_number<VertexId>(tokens[2], line_no, "vertex");
    if (u == v) parse_error(line_no, "self-loop");
    trace.push_back({tokens[0] == "a" ? Command::Op::kAdd : Command::Op::kDelete,
                     Edge(u, v)});
  }
  return trace;
}

void write_trace(std::ostream& out, const UpdateTrace& trace) {
  for (const Command& cmd : trace) {
    out << (cmd.op == Command::Op::kAdd ? 'a' : 'd') << ' ' << cmd.edge.a
        << ' ' << cmd.edge.b << '\n';
  }
}

std::vector<std::vector<Edge>> read_certificate(std::istream& in) {
  std::vector<std::vector<Edge>> levels;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::vector<Edge> level;
    for (std::string_view token : split_ws(text)) {
      auto comma = token.find(',');
      if (comma == std::string_view::npos) {
        parse_error(line_no, "expected `u,v`, got '" + std::string(token) + "'");
      }
      const auto u = parse_number<VertexId>(token.substr(0, comma), line_no, "vertex");
      const auto v = parse_number<VertexId>(token.substr(comma + 1), line_no, "vertex");
      if (u == v) parse_error(line_no, "self-loop in certificate");
      level.emplace_back(u, v);
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

void write_certificate(std::ostream& out,
                       const std::vector<std::vector<Edge>>& levels) {
  for (const auto& level : levels) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0) out << ' ';
      out << level[i].a << ',' << level[i].b;
    }
    out << '\n';
  }
}

std::string report_json(const RunReport& report, int k) {
  const MaintainerStats& s = report.stats;
  nlohmann::json doc;
  doc["k"] = k;
  doc["commands"] = report.commands;
  doc["checks"] = report.checks;
  doc["oracle_skipped"] = report.oracle_skipped;
  doc["final_edges"] = report.final_edges;
  doc["certificate_size"] = report.certificate_size;
  doc["additions"] = s.additions;
  doc["absorbed_per_level"] = s.absorbed_per_level;
  doc["discards"] = s.discards;
  doc["rejections"] = s.rejections;
  doc["deletions"] = s.deletions;
  doc["still_connected"] = s.still_connected;
  doc["augmentations"] = s.augmentations;
  doc["augmenting_edges"] = s.augmenting_edges;
  doc["two_edge_cases"] = s.two_edge_cases;
  doc["repeat_rounds"] = s.repeat_rounds;
  doc["cascade_discards"] = s.cascade_discards;
  doc["flow_runs"] = s.flow_runs;
  doc["flow_phases"] = s.flow_phases;
  doc["violations"] = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    doc["violations"].push_back({{"after_command", v.index}, {"message", v.message}});
  }
  if (!report.state_dump.empty()) doc["state_dump"] = report.state_dump;
  return doc.dump(2) + "\n";
}

GraphFile load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

UpdateTrace load_trace(const std::string& path) {
  auto in = open_input(path);
  return read_trace(in);
}

std::vector<std::vector<Edge>> load_certificate(const std::string& path) {
  auto in = open_input(path);
  return read_certificate(in);
}

}  // namespace kconn::io
