#include "lid/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "lid/errors.hpp"

namespace lid {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens.front() == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

template <typename T>
T number_of(const Line& line, std::size_t index, const char* what) {
  const std::string& tok = line.tokens.at(index);
  T value{};
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw parse_error(line.number, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) throw parse_error(line.number, std::string("expected '") + shape + "'");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open " + path);
  return in;
}

// Shared by coloring and forest files: exactly one line per vertex.
template <typename T, typename F>
std::vector<T> per_vertex(std::istream& in, std::size_t n, const char* shape, F&& value_of) {
  std::vector<T> out(n);
  std::vector<bool> seen(n, false);
  std::size_t last = 0;
  for (const Line& line : tokenize(in)) {
    expect_arity(line, 2, shape);
    const auto v = number_of<std::size_t>(line, 0, "vertex");
    if (v >= n) throw parse_error(line.number, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw parse_error(line.number, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    out[v] = value_of(line);
    last = line.number;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw parse_error(last, "vertex " + std::to_string(v) + " missing");
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw parse_error(1, "missing 'p <n> <m>' header");
  const Line& header = lines.front();
  if (header.tokens.front() != "p") throw parse_error(header.number, "expected 'p <n> <m>' header");
  expect_arity(header, 3, "p <n> <m>");
  const auto n = number_of<std::size_t>(header, 1, "vertex count");
  const auto m = number_of<std::size_t>(header, 2, "edge count");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() != "e") throw parse_error(line.number, "expected 'e <u> <v>'");
    expect_arity(line, 3, "e <u> <v>");
    const auto u = number_of<Vertex>(line, 1, "vertex");
    const auto v = number_of<Vertex>(line, 2, "vertex");
    if (u >= n || v >= n) throw parse_error(line.number, "vertex out of range");
    if (u == v) throw parse_error(line.number, "self-loop on " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) throw parse_error(line.number, "duplicate edge");
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw parse_error(lines.back().number, "header announces " + std::to_string(m) + " edges, found " +
                                               std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

Coloring read_coloring(std::istream& in, std::size_t n) {
  return Coloring(per_vertex<Color>(in, n, "<vertex> <color>",
                                    [](const Line& line) { return number_of<Color>(line, 1, "color"); }));
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
}

EliminationForest read_forest(std::istream& in, std::size_t n) {
  auto parents = per_vertex<std::optional<Vertex>>(in, n, "<vertex> <parent|-1>", [&](const Line& line) {
    if (line.tokens[1] == "-1") return std::optional<Vertex>();
    const auto p = number_of<Vertex>(line, 1, "parent");
    if (p >= n) throw parse_error(line.number, "parent out of range");
    return std::optional<Vertex>(p);
  });
  try {
    return EliminationForest(std::move(parents));
  } catch (const usage_error& e) {
    throw parse_error(0, e.what());
  }
}

void write_forest(std::ostream& out, const EliminationForest& t) {
  for (Vertex v = 0; v < t.size(); ++v) {
    out << v << ' ';
    if (auto p = t.parent(v)) {
      out << *p;
    } else {
      out << -1;
    }
    out << '\n';
  }
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

Coloring load_coloring(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_coloring(in, n);
}

EliminationForest load_forest(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_forest(in, n);
}

}  // namespace lid
