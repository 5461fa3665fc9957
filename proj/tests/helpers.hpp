#pragma once

#include <numeric>
#include <vector>

#include "webx/graph.hpp"
#include "webx/web.hpp"

namespace webx::test {

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph(n, es);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, es);
}

inline VertexSet iota_set(std::size_t n, Vertex from = 0) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), from);
  return v;
}

// Trivial web on K_n: every path is the edge.
inline Web complete_web(std::size_t n) {
  const auto b = iota_set(n);
  return edge_web(b);
}

inline Graph with_edges(const Graph& g, std::initializer_list<Edge> extra) {
  auto es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(g.vertex_count(), es);
}

// Random graph G(n, p) from a seed.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (unit_draw(rng) < p) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

}  // namespace webx::test
