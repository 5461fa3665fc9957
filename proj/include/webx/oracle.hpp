#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "webx/certify.hpp"
#include "webx/combinatorics.hpp"
#include "webx/graph.hpp"
#include "webx/web.hpp"

// Brute-force ground truth for small instances. Plain enumeration, no pruning
// beyond what is needed to stay inside the guards. Guards refuse; they never
// truncate.
namespace webx::oracle {

inline constexpr std::size_t kMaxBranch = 20;
inline constexpr std::size_t kMaxPairBranch = 12;
inline constexpr std::size_t kMaxInducedVertices = 16;

enum class Answer { found, absent, refused };

template <class T>
struct OracleResult {
  Answer answer = Answer::refused;
  std::optional<T> witness;
  std::string note;

  bool found() const { return answer == Answer::found; }
  bool absent() const { return answer == Answer::absent; }
};

namespace detail {

inline VertexSet pick(const VertexSet& from, const std::vector<std::size_t>& idx) {
  VertexSet out;
  for (auto i : idx) out.push_back(from[i]);
  return out;
}

inline bool touches(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (u != v && g.adjacent(u, v)) return true;
    }
  }
  return false;
}

inline std::vector<Vertex> inner(const Web& web, VertexPair p) {
  const auto& seq = web.path(p);
  if (seq.size() <= 2) return {};
  return {seq.begin() + 1, seq.end() - 1};
}

}  // namespace detail

// Lexicographically least S subset of W, |S| = s, passing verify_clean_set.
inline OracleResult<VertexSet> brute_clean_set(const Graph& g, const Web& web, std::size_t s,
                                               CleanLevel level = CleanLevel::full) {
  OracleResult<VertexSet> out;
  if (web.size() > kMaxBranch) {
    out.note = "branch set larger than " + std::to_string(kMaxBranch);
    return out;
  }
  out.answer = Answer::absent;
  comb::for_each_subset(web.size(), s, [&](const std::vector<std::size_t>& idx) {
    CleanSet cand{detail::pick(web.branch(), idx), level};
    if (certify::verify_clean_set(g, web, cand, s, level)) {
      out.answer = Answer::found;
      out.witness = cand.members;
      return false;
    }
    return true;
  });
  return out;
}

// Any A (|A| = a) and b disjoint pairs of W \ A with every x in A seeing
// every path of B. First A in lex order, then the first matching.
inline OracleResult<PinnedPair> brute_pinned_pair(const Graph& g, const Web& web, std::size_t a, std::size_t b) {
  OracleResult<PinnedPair> out;
  if (web.size() > kMaxPairBranch) {
    out.note = "branch set larger than " + std::to_string(kMaxPairBranch);
    return out;
  }
  out.answer = Answer::absent;
  const auto pairs = branch_pairs(web);
  comb::for_each_subset(web.size(), a, [&](const std::vector<std::size_t>& idx) {
    const VertexSet anchors = detail::pick(web.branch(), idx);
    std::vector<VertexPair> good;
    for (const auto& p : pairs) {
      bool ok = std::find(anchors.begin(), anchors.end(), p.lo) == anchors.end() &&
                std::find(anchors.begin(), anchors.end(), p.hi) == anchors.end();
      for (Vertex x : anchors) ok = ok && detail::touches(g, {x}, web.path(p));
      if (ok) good.push_back(p);
    }
    return comb::for_each_subset(good.size(), b, [&](const std::vector<std::size_t>& pidx) {
      std::vector<VertexPair> chosen;
      std::vector<Vertex> ends;
      for (auto i : pidx) {
        chosen.push_back(good[i]);
        ends.push_back(good[i].lo);
        ends.push_back(good[i].hi);
      }
      std::sort(ends.begin(), ends.end());
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) return true;
      out.answer = Answer::found;
      out.witness = PinnedPair{anchors, chosen};
      return false;
    });
  });
  return out;
}

// Disjoint C, C' of c branch pairs each with every cross pair of interiors
// touching. C is the first in lex order over pairs; C' the first c pairs
// outside C touching all of C.
inline OracleResult<TouchingFamilies> brute_touching_families(const Graph& g, const Web& web, std::size_t c) {
  OracleResult<TouchingFamilies> out;
  if (web.size() > kMaxPairBranch) {
    out.note = "branch set larger than " + std::to_string(kMaxPairBranch);
    return out;
  }
  out.answer = Answer::absent;
  const auto pairs = branch_pairs(web);
  comb::for_each_subset(pairs.size(), c, [&](const std::vector<std::size_t>& idx) {
    std::vector<VertexPair> first;
    for (auto i : idx) first.push_back(pairs[i]);
    std::vector<VertexPair> second;
    for (std::size_t q = 0; q < pairs.size() && second.size() < c; ++q) {
      if (std::find(idx.begin(), idx.end(), q) != idx.end()) continue;
      bool all = true;
      for (const auto& p : first) all = all && detail::touches(g, detail::inner(web, p), detail::inner(web, pairs[q]));
      if (all) second.push_back(pairs[q]);
    }
    if (second.size() < c) return true;
    out.answer = Answer::found;
    out.witness = TouchingFamilies{first, second};
    return false;
  });
  return out;
}

struct InducedReport {
  std::optional<VertexSet> clique;
  std::optional<InducedBiclique> biclique;
};

// Exhaustive presence of induced K_t and K_{t,t}.
inline OracleResult<InducedReport> brute_induced(const Graph& g, std::size_t t) {
  OracleResult<InducedReport> out;
  const std::size_t n = g.vertex_count();
  if (n > kMaxInducedVertices) {
    out.note = "graph larger than " + std::to_string(kMaxInducedVertices) + " vertices";
    return out;
  }
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  InducedReport rep;
  comb::for_each_subset(n, t, [&](const std::vector<std::size_t>& idx) {
    const VertexSet k = detail::pick(all, idx);
    if (certify::verify_clique(g, {k}, t)) {
      rep.clique = k;
      return false;
    }
    return true;
  });
  comb::for_each_subset(n, t, [&](const std::vector<std::size_t>& li) {
    const VertexSet left = detail::pick(all, li);
    return comb::for_each_subset(n, t, [&](const std::vector<std::size_t>& ri) {
      const VertexSet right = detail::pick(all, ri);
      if (right.front() <= left.front()) return true;
      if (certify::verify_biclique(g, {left, right}, t)) {
        rep.biclique = InducedBiclique{left, right};
        return false;
      }
      return true;
    });
  });
  out.answer = (rep.clique || rep.biclique) ? Answer::found : Answer::absent;
  out.witness = rep;
  return out;
}

// Least N <= max_ground such that every f-colouring of the g-subsets of an
// N-set has a monochromatic n-subset. For each N, backtracking looks for a
// colouring with no monochromatic n-subset; colours are assigned to g-subsets
// in colex order as restricted-growth strings (a colour may be used only
// after all smaller ones), which removes palette permutations.
inline OracleResult<std::size_t> brute_ramsey_min(std::size_t f, std::size_t g, std::size_t n, std::size_t max_ground,
                                                  std::uint64_t node_limit = 50'000'000) {
  OracleResult<std::size_t> out;
  if (f == 0 || g == 0 || n == 0) {
    out.note = "parameters must be positive";
    return out;
  }
  std::uint64_t nodes = 0;
  for (std::size_t N = 1; N <= max_ground; ++N) {
    if (N < n) continue;  // an n-subset needs N >= n; smaller sets trivially avoid it
    std::vector<std::vector<std::size_t>> subsets;  // g-subsets in colex order
    if (N >= g) {
      auto idx = comb::first_subset(g);
      while (idx.back() < N) {
        subsets.push_back(idx);
        comb::next_colex(idx);
      }
    }
    std::vector<std::size_t> colour(subsets.size());
    // Rank lookup for colex-ordered subsets.
    auto rank = [](const std::vector<std::size_t>& s) { return comb::colex_rank(s); };
    bool refused = false;

    // Monochromatic n-sets whose colex-largest g-subset is subsets[k].
    auto closes_mono = [&](std::size_t k) {
      const auto& top = subsets[k];
      if (n < g) return true;
      const std::size_t below = top.front();
      return !comb::for_each_subset(below, n - g, [&](const std::vector<std::size_t>& extra) {
        std::vector<std::size_t> z = extra;
        z.insert(z.end(), top.begin(), top.end());
        const std::size_t c0 = colour[rank(top)];
        const bool mono = comb::for_each_subset(z.size(), g, [&](const std::vector<std::size_t>& pos) {
          std::vector<std::size_t> s;
          for (auto p : pos) s.push_back(z[p]);
          return colour[rank(s)] == c0;
        });
        return !mono;  // stop enumeration on a monochromatic set
      });
    };

    // True if a colouring avoiding monochromatic n-sets exists.
    std::function<bool(std::size_t, std::size_t)> avoid = [&](std::size_t k, std::size_t used) -> bool {
      if (k == subsets.size()) return true;
      for (std::size_t c = 0; c < std::min(f, used + 1); ++c) {
        if (++nodes > node_limit) {
          refused = true;
          return false;
        }
        colour[k] = c;
        if (!closes_mono(k) && avoid(k + 1, std::max(used, c + 1))) return true;
        if (refused) return false;
      }
      return false;
    };

    bool avoidable;
    if (n <= g) {
      avoidable = false;  // any n-subset is monochromatic
    } else {
      avoidable = avoid(0, 0);
    }
    if (refused) {
      out.answer = Answer::refused;
      out.note = "node limit exceeded at ground size " + std::to_string(N);
      return out;
    }
    if (!avoidable) {
      out.answer = Answer::found;
      out.witness = N;
      return out;
    }
  }
  out.answer = Answer::absent;
  return out;
}

}  // namespace webx::oracle
