#include "lextor/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lextor {

namespace {

bool data_line(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c != '#';
  }
  return false;  // blank
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                              ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!data_line(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) fail(lineno, "expected header `n m`");
      edges.reserve(static_cast<size_t>(m));
    } else {
      long long u, v;
      if (!(ls >> u >> v)) fail(lineno, "expected edge `u v`");
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::string rest;
    if (ls >> rest) fail(lineno, "trailing tokens");
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header `n m`");
  if (static_cast<long long>(edges.size()) != m)
    throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                " edges, found " + std::to_string(edges.size()));
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_edge_list(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << serialize_edge_list(g);
}

}  // namespace lextor
