#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "webx/graph.hpp"

namespace webx {

enum class GraphFormat { edge_list, graph6 };

inline GraphFormat parse_graph_format(const std::string& s) {
  if (s == "edgelist" || s == "edge_list" || s == "txt") return GraphFormat::edge_list;
  if (s == "graph6" || s == "g6") return GraphFormat::graph6;
  throw InputError("unknown graph format '" + s + "'");
}

// Plain-text edge list: "n m", then m lines "u v" (0-based).
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("edge list: expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw InputError("edge list: negative vertex id");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw InputError("edge list: trailing data '" + extra + "'");
  return Graph(static_cast<std::size_t>(n), edges);
}

namespace detail {

inline constexpr const char* kGraph6Header = ">>graph6<<";

inline void g6_put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

// graph6 without header; bits are the upper triangle column by column.
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  detail::g6_put_size(out, n);
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

inline Graph read_graph6(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  std::size_t pos = 0;
  if (text.rfind(detail::kGraph6Header, 0) == 0) pos = std::string(detail::kGraph6Header).size();
  auto next = [&]() -> int {
    if (pos >= text.size()) throw InputError("graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range");
    return c - 63;
  };
  std::size_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    int second = next();
    int groups = 3;
    if (second == 63) {
      groups = 6;
      second = next();
    }
    n = static_cast<std::size_t>(second);
    for (int i = 1; i < groups; ++i) n = (n << 6) | static_cast<std::size_t>(next());
  }
  std::vector<Edge> edges;
  int acc = 0, left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos != text.size()) throw InputError("graph6: trailing data");
  return Graph(n, edges);
}

// Edge list when the first line has two tokens, graph6 otherwise.
inline Graph parse_graph(const std::string& text) {
  const auto eol = text.find('\n');
  std::istringstream first(text.substr(0, eol));
  std::string a, b;
  first >> a >> b;
  if (a.empty()) throw InputError("empty graph file");
  return b.empty() ? read_graph6(text) : read_edge_list(text);
}

inline std::string format_graph(const Graph& g, GraphFormat f) {
  return f == GraphFormat::graph6 ? write_graph6(g) : write_edge_list(g);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace webx
