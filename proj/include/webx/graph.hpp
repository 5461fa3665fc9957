#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "webx/core.hpp"

namespace webx {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
// one bit row per vertex.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::span<const Edge> edges) : n_(n), words_((n + 63) / 64), rows_(n * words_) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " names a vertex outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
      }
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      if (adjacent(u, v)) {
        throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
      }
      set_bit(u, v);
      set_bit(v, u);
      ++m_;
    }
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  bool contains(Vertex v) const { return v < n_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = rows_[v * words_ + w];
      while (bits) {
        out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  void set_bit(Vertex u, Vertex v) { rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

namespace detail {

inline void require_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (!g.contains(v)) throw InputError("unknown vertex id " + std::to_string(v));
  }
}

}  // namespace detail

inline bool is_stable_set(const Graph& g, std::span<const Vertex> s) {
  detail::require_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

// True iff no edge has one end in x and the other in y. The sets may overlap.
inline bool are_anticomplete(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  detail::require_vertices(g, x);
  detail::require_vertices(g, y);
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (u != v && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline bool has_neighbor_in(const Graph& g, Vertex v, std::span<const Vertex> set) {
  return !are_anticomplete(g, std::span<const Vertex>(&v, 1), set);
}

// Consecutive entries adjacent, all other pairs non-adjacent.
inline bool is_induced_path(const Graph& g, std::span<const Vertex> p) {
  detail::require_vertices(g, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) throw InputError("vertex " + std::to_string(p[i]) + " repeated in path");
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

struct Biclique {
  VertexSet left;
  VertexSet right;
  bool operator==(const Biclique&) const = default;
};

namespace detail {

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.vertex_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

inline std::vector<Vertex> sorted_unique(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Lex-first set of `need` more vertices from `cand` (sorted), pairwise
// adjacent when `adjacent_mode`, pairwise non-adjacent otherwise.
inline Dfs grow_uniform(const Graph& g, std::vector<Vertex>& chosen, std::span<const Vertex> cand, std::size_t need,
                        bool adjacent_mode, StepMeter& meter) {
  if (need == 0) return Dfs::found;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cand.size() - i < need) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    const Vertex v = cand[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (g.adjacent(v, cand[j]) == adjacent_mode) next.push_back(cand[j]);
    }
    chosen.push_back(v);
    const Dfs r = grow_uniform(g, chosen, next, need - 1, adjacent_mode, meter);
    if (r != Dfs::exhausted) return r;
    chosen.pop_back();
  }
  return Dfs::exhausted;
}

}  // namespace detail

// Lexicographically first clique of size t among `within` (all vertices when
// empty). Cliques are always induced.
inline SearchResult<VertexSet> find_induced_clique(const Graph& g, std::size_t t, StepMeter& meter,
                                                   std::span<const Vertex> within = {}) {
  if (t == 0) throw InputError("clique size must be positive");
  const auto cand = within.empty() ? detail::all_vertices(g) : detail::sorted_unique(within);
  detail::require_vertices(g, cand);
  const std::uint64_t start = meter.used();
  VertexSet chosen;
  const auto r = detail::grow_uniform(g, chosen, cand, t, true, meter);
  SearchResult<VertexSet> out;
  out.steps = meter.used() - start;
  if (r == detail::Dfs::found) {
    out.status = SearchStatus::found;
    out.witness = std::move(chosen);
  } else {
    out.status = r == detail::Dfs::exhausted ? SearchStatus::absent : SearchStatus::inconclusive;
  }
  return out;
}

inline SearchResult<VertexSet> find_induced_clique(const Graph& g, std::size_t t, Budget budget = {}) {
  StepMeter meter(budget);
  return find_induced_clique(g, t, meter);
}

namespace detail {

// Extends the stable set `left` (drawn from `cand`) while tracking the common
// neighbourhood above left[0]; at size t looks for a stable t-subset there.
inline Dfs grow_biclique(const Graph& g, VertexSet& left, std::span<const Vertex> cand,
                         const std::vector<Vertex>& common, std::size_t t, VertexSet& right, StepMeter& meter) {
  if (left.size() == t) {
    right.clear();
    return grow_uniform(g, right, common, t, false, meter);
  }
  const std::size_t need = t - left.size();
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (cand.size() - i < need) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    const Vertex v = cand[i];
    std::vector<Vertex> next_common;
    if (left.empty()) {
      for (Vertex u : g.neighbors(v)) {
        if (u > v && std::binary_search(cand.begin(), cand.end(), u)) next_common.push_back(u);
      }
    } else {
      for (Vertex u : common) {
        if (g.adjacent(u, v)) next_common.push_back(u);
      }
    }
    if (next_common.size() < t) continue;
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (!g.adjacent(v, cand[j])) next.push_back(cand[j]);
    }
    left.push_back(v);
    const Dfs r = grow_biclique(g, left, next, next_common, t, right, meter);
    if (r != Dfs::exhausted) return r;
    left.pop_back();
  }
  return Dfs::exhausted;
}

}  // namespace detail

// Induced K_{t,t}: both sides stable, every cross pair an edge. The witness
// has min(left) < min(right) and is lexicographically first (left, then right).
inline SearchResult<Biclique> find_induced_biclique(const Graph& g, std::size_t t, StepMeter& meter,
                                                    std::span<const Vertex> within = {}) {
  if (t == 0) throw InputError("biclique size must be positive");
  const auto cand = within.empty() ? detail::all_vertices(g) : detail::sorted_unique(within);
  detail::require_vertices(g, cand);
  const std::uint64_t start = meter.used();
  Biclique b;
  const auto r = detail::grow_biclique(g, b.left, cand, {}, t, b.right, meter);
  SearchResult<Biclique> out;
  out.steps = meter.used() - start;
  if (r == detail::Dfs::found) {
    out.status = SearchStatus::found;
    out.witness = std::move(b);
  } else {
    out.status = r == detail::Dfs::exhausted ? SearchStatus::absent : SearchStatus::inconclusive;
  }
  return out;
}

inline SearchResult<Biclique> find_induced_biclique(const Graph& g, std::size_t t, Budget budget = {}) {
  StepMeter meter(budget);
  return find_induced_biclique(g, t, meter);
}

}  // namespace webx
