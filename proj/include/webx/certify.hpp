#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "webx/certificate.hpp"
#include "webx/graph.hpp"
#include "webx/web.hpp"

// Certificate verifiers. They read adjacency straight from the graph and use
// the web only to look up which vertices lie on which path; nothing here
// calls into the extraction code.
namespace webx::certify {

struct Verdict {
  bool ok = true;
  std::string clause;  // first violated clause when !ok

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline std::string set_str(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

inline bool distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline bool touches(const Graph& g, const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (u != v && g.adjacent(u, v)) return true;
    }
  }
  return false;
}

inline std::vector<Vertex> path_vertices(const Web& web, VertexPair p) { return web.path(p); }

inline std::vector<Vertex> path_interior(const Web& web, VertexPair p) {
  const auto& seq = web.path(p);
  if (seq.size() <= 2) return {};
  return {seq.begin() + 1, seq.end() - 1};
}

inline Verdict check_vertices(const Graph& g, const std::vector<Vertex>& vs, const char* what) {
  for (Vertex v : vs) {
    if (!g.contains(v)) return Verdict::fail(std::string(what) + " names unknown vertex " + std::to_string(v));
  }
  if (!distinct(vs)) return Verdict::fail(std::string(what) + " repeats a vertex");
  return Verdict::pass();
}

inline Verdict check_branch(const Web& web, const std::vector<Vertex>& vs, const char* what) {
  for (Vertex v : vs) {
    if (!web.is_branch(v)) return Verdict::fail(std::string(what) + " contains non-branch vertex " + std::to_string(v));
  }
  return Verdict::pass();
}

inline Verdict check_pairs(const Web& web, const std::vector<VertexPair>& ps, const char* what) {
  std::set<VertexPair> seen;
  for (const auto& p : ps) {
    if (p.lo >= p.hi) return Verdict::fail(std::string(what) + " has a malformed pair");
    if (!web.is_branch(p.lo) || !web.is_branch(p.hi)) {
      return Verdict::fail(std::string(what) + " pair " + to_string(p) + " is not a pair of branch vertices");
    }
    if (!seen.insert(p).second) return Verdict::fail(std::string(what) + " lists pair " + to_string(p) + " twice");
  }
  return Verdict::pass();
}

}  // namespace detail

inline Verdict verify_clique(const Graph& g, const InducedClique& c, std::size_t t) {
  if (c.members.size() != t) {
    return Verdict::fail("clique has " + std::to_string(c.members.size()) + " vertices, expected " + std::to_string(t));
  }
  if (auto v = detail::check_vertices(g, c.members, "clique"); !v) return v;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!g.adjacent(c.members[i], c.members[j])) {
        return Verdict::fail("clique vertices " + std::to_string(c.members[i]) + " and " +
                             std::to_string(c.members[j]) + " are not adjacent");
      }
    }
  }
  return Verdict::pass();
}

inline Verdict verify_biclique(const Graph& g, const InducedBiclique& b, std::size_t t) {
  if (b.left.size() != t || b.right.size() != t) return Verdict::fail("biclique sides do not both have size " + std::to_string(t));
  std::vector<Vertex> all = b.left;
  all.insert(all.end(), b.right.begin(), b.right.end());
  if (auto v = detail::check_vertices(g, all, "biclique"); !v) return v;
  for (const auto* side : {&b.left, &b.right}) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        if (g.adjacent((*side)[i], (*side)[j])) {
          return Verdict::fail("biclique side " + detail::set_str(*side) + " is not stable");
        }
      }
    }
  }
  for (Vertex u : b.left) {
    for (Vertex v : b.right) {
      if (!g.adjacent(u, v)) {
        return Verdict::fail("biclique cross pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
      }
    }
  }
  return Verdict::pass();
}

// Clean-set conditions over S subset of W with |S| = s:
//   stable; x anticomplete to the interior of yz for distinct x, y, z in S;
//   interiors of distinct pairs of S pairwise anticomplete.
// `level` selects which of these are required.
inline Verdict verify_clean_set(const Graph& g, const Web& web, const CleanSet& c, std::size_t s,
                                CleanLevel level = CleanLevel::full) {
  const auto& S = c.members;
  if (S.size() != s) return Verdict::fail("clean set has " + std::to_string(S.size()) + " vertices, expected " + std::to_string(s));
  if (c.level != level) {
    return Verdict::fail(std::string("clean set claims conditions '") + to_string(c.level) + "', required '" +
                         to_string(level) + "'");
  }
  if (auto v = detail::check_vertices(g, S, "clean set"); !v) return v;
  if (auto v = detail::check_branch(web, S, "clean set"); !v) return v;

  if (level != CleanLevel::interior) {
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        if (g.adjacent(S[i], S[j])) {
          return Verdict::fail("clean set is not stable: " + std::to_string(S[i]) + "-" + std::to_string(S[j]));
        }
      }
    }
    for (Vertex x : S) {
      for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
          if (S[i] == x || S[j] == x) continue;
          const auto p = VertexPair::of(S[i], S[j]);
          if (detail::touches(g, {x}, detail::path_interior(web, p))) {
            return Verdict::fail("vertex " + std::to_string(x) + " sees the interior of " + to_string(p));
          }
        }
      }
    }
  }
  if (level != CleanLevel::pinned) {
    std::vector<VertexPair> pairs;
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = i + 1; j < S.size(); ++j) pairs.push_back(VertexPair::of(S[i], S[j]));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (detail::touches(g, detail::path_interior(web, pairs[i]), detail::path_interior(web, pairs[j]))) {
          return Verdict::fail("interiors of " + to_string(pairs[i]) + " and " + to_string(pairs[j]) +
                               " are not anticomplete");
        }
      }
    }
  }
  return Verdict::pass();
}

inline Verdict verify_pinned_pair(const Graph& g, const Web& web, const PinnedPair& p, std::size_t a, std::size_t b) {
  if (p.anchors.size() != a) return Verdict::fail("|A| = " + std::to_string(p.anchors.size()) + ", expected " + std::to_string(a));
  if (p.pairs.size() != b) return Verdict::fail("|B| = " + std::to_string(p.pairs.size()) + ", expected " + std::to_string(b));
  if (auto v = detail::check_vertices(g, p.anchors, "A"); !v) return v;
  if (auto v = detail::check_branch(web, p.anchors, "A"); !v) return v;
  if (auto v = detail::check_pairs(web, p.pairs, "B"); !v) return v;
  std::vector<Vertex> used = p.anchors;
  for (const auto& pr : p.pairs) {
    used.push_back(pr.lo);
    used.push_back(pr.hi);
  }
  if (!detail::distinct(used)) return Verdict::fail("pairs of B are not disjoint from each other and from A");
  for (Vertex x : p.anchors) {
    for (const auto& pr : p.pairs) {
      if (!detail::touches(g, {x}, detail::path_vertices(web, pr))) {
        return Verdict::fail("anchor " + std::to_string(x) + " has no neighbour on the path of " + to_string(pr));
      }
    }
  }
  return Verdict::pass();
}

inline Verdict verify_touching_families(const Graph& g, const Web& web, const TouchingFamilies& t, std::size_t c) {
  if (t.first.size() != c || t.second.size() != c) return Verdict::fail("families do not both have size " + std::to_string(c));
  if (auto v = detail::check_pairs(web, t.first, "C"); !v) return v;
  if (auto v = detail::check_pairs(web, t.second, "C'"); !v) return v;
  for (const auto& p : t.first) {
    if (std::find(t.second.begin(), t.second.end(), p) != t.second.end()) {
      return Verdict::fail("pair " + to_string(p) + " lies in both families");
    }
  }
  for (const auto& p : t.first) {
    for (const auto& q : t.second) {
      if (!detail::touches(g, detail::path_interior(web, p), detail::path_interior(web, q))) {
        return Verdict::fail("interiors of " + to_string(p) + " and " + to_string(q) + " are anticomplete");
      }
    }
  }
  return Verdict::pass();
}

// Full audit of a certificate against the graph, the web it was extracted
// from, and the sizes echoed in its params.
inline Verdict verify_certificate(const Graph& g, const Web& web, const Certificate& cert) {
  if (const auto rep = validate_web(g, web); !rep.valid()) return Verdict::fail("web is invalid: " + rep.describe());
  const auto& p = cert.params;
  switch (cert.kind()) {
    case CertKind::clique: return verify_clique(g, cert.as<InducedClique>(), p.t);
    case CertKind::biclique: return verify_biclique(g, cert.as<InducedBiclique>(), p.t);
    case CertKind::clean_set:
      return verify_clean_set(g, web, cert.as<CleanSet>(), p.s, clean_level_for(cert.operation));
    case CertKind::pinned_pair: return verify_pinned_pair(g, web, cert.as<PinnedPair>(), p.a, p.b);
    case CertKind::touching_families: return verify_touching_families(g, web, cert.as<TouchingFamilies>(), p.c);
    case CertKind::inconclusive: return Verdict::fail("inconclusive certificates carry no evidence");
  }
  return Verdict::fail("unknown certificate kind");
}

}  // namespace webx::certify
