#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "webx/graph.hpp"

namespace webx {

// A branch set W plus one path per 2-subset of W. Paths are stored oriented
// from the smaller end to the larger end. Construction does not check the web
// axioms; validate_web does.
class Web {
 public:
  using PathMap = std::map<VertexPair, PathSeq>;

  Web() = default;

  Web(VertexSet branch, PathMap paths) : branch_(std::move(branch)), paths_(std::move(paths)) {
    std::sort(branch_.begin(), branch_.end());
    for (auto& [pair, seq] : paths_) {
      if (!seq.empty() && seq.front() == pair.hi && seq.back() == pair.lo) std::reverse(seq.begin(), seq.end());
    }
  }

  const VertexSet& branch() const { return branch_; }
  std::size_t size() const { return branch_.size(); }
  const PathMap& paths() const { return paths_; }

  bool is_branch(Vertex v) const { return std::binary_search(branch_.begin(), branch_.end(), v); }

  const PathSeq& path(VertexPair p) const {
    auto it = paths_.find(p);
    if (it == paths_.end()) throw InputError("web has no path for pair " + to_string(p));
    return it->second;
  }
  const PathSeq& path(Vertex x, Vertex y) const { return path(VertexPair::of(x, y)); }

  bool operator==(const Web&) const = default;

 private:
  VertexSet branch_;
  PathMap paths_;
};

// Path length in edges.
inline std::size_t path_length(const PathSeq& p) { return p.empty() ? 0 : p.size() - 1; }

// Path vertices minus the ends; empty for length <= 1.
inline VertexSet interior(const Web& web, VertexPair pair) {
  if (!web.is_branch(pair.lo) || !web.is_branch(pair.hi)) {
    throw InputError("pair " + to_string(pair) + " is not a pair of branch vertices");
  }
  const PathSeq& p = web.path(pair);
  if (p.size() <= 2) return {};
  VertexSet out(p.begin() + 1, p.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexSet interior(const Web& web, Vertex x, Vertex y) { return interior(web, VertexPair::of(x, y)); }

// All 2-subsets of the branch set in lexicographic order.
inline std::vector<VertexPair> branch_pairs(const Web& web) {
  std::vector<VertexPair> out;
  const auto& b = web.branch();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) out.push_back({b[i], b[j]});
  }
  return out;
}

enum class Axiom { w1, w2, w3 };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::w1: return "W1";
    case Axiom::w2: return "W2";
    case Axiom::w3: return "W3";
  }
  return "?";
}

struct Violation {
  Axiom axiom;
  std::vector<VertexPair> pairs;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }

  std::string describe() const {
    std::string out;
    for (const auto& v : violations) {
      out += std::string(to_string(v.axiom)) + ": " + v.detail;
      for (const auto& p : v.pairs) out += " " + to_string(p);
      out += '\n';
    }
    return out;
  }
};

// Checks W1 (distinct vertices of g, non-empty), W2 (one induced path per
// branch pair with the right ends, no stray paths) and W3 (two paths meet
// exactly in their common ends).
inline ValidationReport validate_web(const Graph& g, const Web& web) {
  ValidationReport rep;
  auto add = [&](Axiom a, std::vector<VertexPair> pairs, std::string detail) {
    rep.violations.push_back({a, std::move(pairs), std::move(detail)});
  };

  const auto& b = web.branch();
  if (b.empty()) add(Axiom::w1, {}, "branch set is empty");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!g.contains(b[i])) add(Axiom::w1, {}, "branch vertex " + std::to_string(b[i]) + " is not in the graph");
    if (i > 0 && b[i] == b[i - 1]) add(Axiom::w1, {}, "branch vertex " + std::to_string(b[i]) + " listed twice");
  }
  if (!rep.valid()) return rep;

  for (const auto& [pair, seq] : web.paths()) {
    if (!web.is_branch(pair.lo) || !web.is_branch(pair.hi)) add(Axiom::w2, {pair}, "path for a non-branch pair");
  }

  // Pairs whose path is usable for the W3 check.
  std::vector<std::pair<VertexPair, std::vector<Vertex>>> good;
  for (const auto& pair : branch_pairs(web)) {
    auto it = web.paths().find(pair);
    if (it == web.paths().end()) {
      add(Axiom::w2, {pair}, "missing path");
      continue;
    }
    const PathSeq& seq = it->second;
    if (seq.size() < 2 || seq.front() != pair.lo || seq.back() != pair.hi) {
      add(Axiom::w2, {pair}, "path ends do not match the pair");
      continue;
    }
    bool in_graph = true;
    for (Vertex v : seq) in_graph = in_graph && g.contains(v);
    if (!in_graph) {
      add(Axiom::w2, {pair}, "path uses a vertex outside the graph");
      continue;
    }
    std::vector<Vertex> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      add(Axiom::w2, {pair}, "path repeats a vertex");
      continue;
    }
    if (!is_induced_path(g, seq)) {
      add(Axiom::w2, {pair}, "path is not an induced path of the graph");
      continue;
    }
    good.emplace_back(pair, std::move(sorted));
  }

  for (std::size_t i = 0; i < good.size(); ++i) {
    for (std::size_t j = i + 1; j < good.size(); ++j) {
      const auto& [p, a] = good[i];
      const auto& [q, c] = good[j];
      std::vector<Vertex> meet;
      std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(meet));
      std::vector<Vertex> ends;
      for (Vertex v : {p.lo, p.hi}) {
        if (q.contains(v)) ends.push_back(v);
      }
      std::sort(ends.begin(), ends.end());
      if (meet != ends) add(Axiom::w3, {p, q}, "paths intersect outside their common ends");
    }
  }
  return rep;
}

inline void require_valid_web(const Graph& g, const Web& web) {
  const auto rep = validate_web(g, web);
  if (!rep.valid()) throw InputError("invalid web:\n" + rep.describe());
}

struct WebProfile {
  std::size_t r_value = 0;
  std::size_t w_value = 0;
  std::size_t total_vertices = 0;
  bool operator==(const WebProfile&) const = default;
};

inline WebProfile profile(const Web& web) {
  WebProfile p;
  p.w_value = web.size();
  std::set<Vertex> all(web.branch().begin(), web.branch().end());
  std::size_t longest = 0;
  for (const auto& [pair, seq] : web.paths()) {
    longest = std::max(longest, path_length(seq));
    all.insert(seq.begin(), seq.end());
  }
  p.r_value = longest > 0 ? longest - 1 : 0;
  p.total_vertices = all.size();
  return p;
}

// Keeps the branch vertices in s and the paths between them.
inline Web restrict(const Web& web, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("restriction to an empty branch set");
  VertexSet sub(s.begin(), s.end());
  std::sort(sub.begin(), sub.end());
  if (std::adjacent_find(sub.begin(), sub.end()) != sub.end()) throw InputError("restriction set repeats a vertex");
  for (Vertex v : sub) {
    if (!web.is_branch(v)) throw InputError("vertex " + std::to_string(v) + " is not a branch vertex");
  }
  Web::PathMap paths;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      const VertexPair p{sub[i], sub[j]};
      paths.emplace(p, web.path(p));
    }
  }
  return Web(std::move(sub), std::move(paths));
}

// Every path has length >= 2 and the union of the paths induces exactly the
// union of their edges.
inline bool induced_union_is_proper_subdivision(const Graph& g, const Web& web) {
  require_valid_web(g, web);
  std::set<std::pair<Vertex, Vertex>> path_edges;
  std::set<Vertex> all(web.branch().begin(), web.branch().end());
  for (const auto& [pair, seq] : web.paths()) {
    if (path_length(seq) < 2) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      path_edges.insert(std::minmax(seq[i], seq[i + 1]));
    }
    all.insert(seq.begin(), seq.end());
  }
  const std::vector<Vertex> vs(all.begin(), all.end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j]) && !path_edges.count({vs[i], vs[j]})) return false;
    }
  }
  return true;
}

// Path-length assignment for plant_subdivision, keyed by pairs of 0..k-1.
using LengthMap = std::map<VertexPair, std::size_t>;

inline LengthMap uniform_lengths(std::size_t k, std::size_t length) {
  LengthMap m;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) m[{i, j}] = length;
  }
  return m;
}

// Uniform double in [0,1) from the top 53 bits; stable across standard
// libraries, unlike std::uniform_real_distribution.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline LengthMap random_lengths(std::size_t k, std::size_t lo, std::size_t hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LengthMap m;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) m[{i, j}] = lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  }
  return m;
}

struct PlantedInstance {
  Graph graph;
  Web web;
};

// Host graph containing a subdivision of K_k with the given path lengths.
// Branch vertices are 0..k-1, interior vertices follow in pair order. Each
// non-edge is then added with probability `noise` unless both its ends lie on
// one planted path (a chord), so the planted web always stays valid.
inline PlantedInstance plant_subdivision(std::size_t k, const LengthMap& lengths, double noise, std::uint64_t seed) {
  if (k == 0) throw InputError("k must be positive");
  if (noise < 0.0 || noise > 1.0) throw InputError("noise must lie in [0,1]");
  std::vector<Edge> edges;
  Web::PathMap paths;
  std::vector<std::vector<std::size_t>> on_path;  // vertex -> planted path indices
  on_path.resize(k);
  Vertex next = static_cast<Vertex>(k);
  std::size_t path_index = 0;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j, ++path_index) {
      auto it = lengths.find({i, j});
      const std::size_t len = it == lengths.end() ? 1 : it->second;
      if (len < 1) throw InputError("path length must be at least 1 for pair " + to_string(VertexPair{i, j}));
      PathSeq seq{i};
      for (std::size_t s = 1; s < len; ++s) {
        seq.push_back(next++);
        on_path.emplace_back();
      }
      seq.push_back(j);
      for (Vertex v : seq) on_path[v].push_back(path_index);
      for (std::size_t s = 0; s + 1 < seq.size(); ++s) edges.emplace_back(seq[s], seq[s + 1]);
      paths.emplace(VertexPair{i, j}, std::move(seq));
    }
  }
  const std::size_t n = next;
  {
    const Graph skeleton(n, edges);
    std::mt19937_64 rng(seed);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (skeleton.adjacent(u, v)) continue;
        const double draw = unit_draw(rng);
        if (draw >= noise) continue;
        const auto& pu = on_path[u];
        const auto& pv = on_path[v];
        const bool chord = std::find_first_of(pu.begin(), pu.end(), pv.begin(), pv.end()) != pu.end();
        if (!chord) edges.emplace_back(u, v);
      }
    }
  }
  VertexSet branch(k);
  for (Vertex i = 0; i < k; ++i) branch[i] = i;
  return {Graph(n, edges), Web(std::move(branch), std::move(paths))};
}

inline PlantedInstance plant_subdivision(std::size_t k, std::size_t length, double noise, std::uint64_t seed) {
  return plant_subdivision(k, uniform_lengths(k, length), noise, seed);
}

// Trivial web of a complete subgraph: every pair's path is the edge itself.
inline Web edge_web(std::span<const Vertex> branch) {
  Web::PathMap paths;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    for (std::size_t j = i + 1; j < branch.size(); ++j) {
      const auto p = VertexPair::of(branch[i], branch[j]);
      paths.emplace(p, PathSeq{p.lo, p.hi});
    }
  }
  return Web(VertexSet(branch.begin(), branch.end()), std::move(paths));
}

namespace detail {

// Backtracking web search: branch vertices are added one at a time from a
// degree-descending candidate list; each new branch vertex is routed to all
// earlier ones by bounded-depth induced paths avoiding every vertex already
// used by the web.
class WebFinder {
 public:
  WebFinder(const Graph& g, std::size_t r, std::size_t w, StepMeter& meter)
      : g_(g), max_len_(r + 1), w_(w), meter_(meter), used_(g.vertex_count(), false) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) + 1 >= w) cand_.push_back(v);
    }
    std::stable_sort(cand_.begin(), cand_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  Dfs run() { return add_branch(0); }

  Web result() const {
    Web::PathMap paths;
    for (const auto& [p, seq] : routed_) paths.emplace(p, seq);
    return Web(branch_, std::move(paths));
  }

 private:
  Dfs add_branch(std::size_t from) {
    if (branch_.size() == w_) return Dfs::found;
    for (std::size_t i = from; i < cand_.size(); ++i) {
      if (cand_.size() - i < w_ - branch_.size()) break;
      const Vertex v = cand_[i];
      if (used_[v]) continue;
      if (!meter_.tick()) return Dfs::out_of_budget;
      used_[v] = true;
      branch_.push_back(v);
      const Dfs r = route(v, 0, i);
      if (r != Dfs::exhausted) return r;
      branch_.pop_back();
      used_[v] = false;
    }
    return Dfs::exhausted;
  }

  // Routes the newest branch vertex to branch_[k], then to the rest.
  Dfs route(Vertex v, std::size_t k, std::size_t cand_pos) {
    if (k + 1 == branch_.size()) return add_branch(cand_pos + 1);
    const Vertex target = branch_[k];
    PathSeq seq{v};
    return extend(seq, target, v, k, cand_pos);
  }

  Dfs extend(PathSeq& seq, Vertex target, Vertex v, std::size_t k, std::size_t cand_pos) {
    const Vertex last = seq.back();
    if (g_.adjacent(last, target)) {
      // Closing here keeps the path induced only if no earlier vertex sees target.
      bool chordless = true;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) chordless = chordless && !g_.adjacent(seq[i], target);
      if (!chordless) return Dfs::exhausted;
      seq.push_back(target);
      routed_.emplace_back(VertexPair::of(v, target), seq);
      const Dfs r = route(v, k + 1, cand_pos);
      if (r != Dfs::exhausted) return r;
      routed_.pop_back();
      seq.pop_back();
      return Dfs::exhausted;
    }
    if (seq.size() >= max_len_) return Dfs::exhausted;
    for (Vertex u : g_.neighbors(last)) {
      if (used_[u]) continue;
      bool chordless = true;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) chordless = chordless && !g_.adjacent(seq[i], u);
      if (!chordless) continue;
      if (!meter_.tick()) return Dfs::out_of_budget;
      used_[u] = true;
      seq.push_back(u);
      const Dfs r = extend(seq, target, v, k, cand_pos);
      if (r != Dfs::exhausted) return r;
      seq.pop_back();
      used_[u] = false;
    }
    return Dfs::exhausted;
  }

  const Graph& g_;
  std::size_t max_len_;
  std::size_t w_;
  StepMeter& meter_;
  std::vector<bool> used_;
  std::vector<Vertex> cand_;
  VertexSet branch_;
  std::vector<std::pair<VertexPair, PathSeq>> routed_;
};

}  // namespace detail

// Searches for an (r,w)-web, i.e. a (<= r)-subdivision of K_w as a subgraph.
inline SearchResult<Web> find_web(const Graph& g, std::size_t r, std::size_t w, StepMeter& meter) {
  if (w == 0) throw InputError("w must be positive");
  const std::uint64_t start = meter.used();
  detail::WebFinder finder(g, r, w, meter);
  const auto res = finder.run();
  SearchResult<Web> out;
  out.steps = meter.used() - start;
  if (res == detail::Dfs::found) {
    out.status = SearchStatus::found;
    out.witness = finder.result();
  } else {
    out.status = res == detail::Dfs::exhausted ? SearchStatus::absent : SearchStatus::inconclusive;
  }
  return out;
}

inline SearchResult<Web> find_web(const Graph& g, std::size_t r, std::size_t w, Budget budget = {}) {
  StepMeter meter(budget);
  return find_web(g, r, w, meter);
}

}  // namespace webx
