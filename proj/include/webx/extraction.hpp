#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webx/bound.hpp"
#include "webx/certificate.hpp"
#include "webx/certify.hpp"
#include "webx/graph.hpp"
#include "webx/ramsey.hpp"
#include "webx/web.hpp"

namespace webx {

// ---------------------------------------------------------------------------
// Colourings
// ---------------------------------------------------------------------------

// Bit i-1 of the colour is set iff w_{t_i} has a neighbour on the path between
// the other two members of the triple (t_1 < t_2 < t_3).
inline std::uint8_t phi_pinned(const Graph& g, const Web& web, std::span<const Vertex> order,
                               std::array<Index, 3> triple) {
  std::sort(triple.begin(), triple.end());
  std::uint8_t mask = 0;
  for (int i = 0; i < 3; ++i) {
    const Vertex x = order[triple[i]];
    const Vertex y = order[triple[(i + 1) % 3]];
    const Vertex z = order[triple[(i + 2) % 3]];
    if (has_neighbor_in(g, x, web.path(y, z))) mask |= static_cast<std::uint8_t>(1u << i);
  }
  return mask;
}

// The six 2-subsets of the four positions of a quadruple, in lex order.
inline constexpr std::array<std::pair<int, int>, 6> kQuadPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Bit index of the unordered pair {kQuadPairs[p], kQuadPairs[q]}, p < q, in
// colex order: C(q,2) + p.
inline constexpr int quad_pair_bit(int p, int q) { return q * (q - 1) / 2 + p; }

// Bit {P, P'} of the colour is set iff the interiors of the paths between
// the positions of P and of P' are not anticomplete.
inline std::uint16_t phi_interior(const Graph& g, const Web& web, std::span<const Vertex> order,
                                  std::array<Index, 4> quad) {
  std::sort(quad.begin(), quad.end());
  std::array<VertexSet, 6> inner;
  for (int p = 0; p < 6; ++p) {
    inner[p] = interior(web, order[quad[kQuadPairs[p].first]], order[quad[kQuadPairs[p].second]]);
  }
  std::uint16_t mask = 0;
  for (int q = 1; q < 6; ++q) {
    for (int p = 0; p < q; ++p) {
      if (!are_anticomplete(g, inner[p], inner[q])) mask |= static_cast<std::uint16_t>(1u << quad_pair_bit(p, q));
    }
  }
  return mask;
}

// Decodes an interior colour into pairs {{i,j},{i',j'}} of 1-based positions.
inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> decode_interior_color(std::uint16_t mask) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (int q = 1; q < 6; ++q) {
    for (int p = 0; p < q; ++p) {
      if (mask & (1u << quad_pair_bit(p, q))) {
        out.push_back({{kQuadPairs[p].first + 1, kQuadPairs[p].second + 1},
                       {kQuadPairs[q].first + 1, kQuadPairs[q].second + 1}});
      }
    }
  }
  return out;
}

inline std::string describe_interior_color(std::uint16_t mask) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, q] : decode_interior_color(mask)) {
    s += (first ? "" : ",") + std::string("{{") + std::to_string(p.first) + "," + std::to_string(p.second) + "},{" +
         std::to_string(q.first) + "," + std::to_string(q.second) + "}}";
    first = false;
  }
  return s + "}";
}

inline ColoringTable pinned_table(const Graph& g, const Web& web) {
  const VertexSet order = web.branch();
  return ColoringTable(
      order.size(), 3, 8,
      [&g, &web, order](std::span<const Index> s) { return Color{phi_pinned(g, web, order, {s[0], s[1], s[2]})}; },
      [](Color c) {
        std::string out = "{";
        for (int i = 0; i < 3; ++i) {
          if (c & (1u << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
        }
        return out + "}";
      });
}

inline ColoringTable interior_table(const Graph& g, const Web& web) {
  const VertexSet order = web.branch();
  return ColoringTable(
      order.size(), 4, std::uint64_t{1} << 15,
      [&g, &web, order](std::span<const Index> s) {
        return Color{phi_interior(g, web, order, {s[0], s[1], s[2], s[3]})};
      },
      [](Color c) { return describe_interior_color(static_cast<std::uint16_t>(c)); });
}

// ---------------------------------------------------------------------------
// Direct searches used when the monochromatic step does not apply
// ---------------------------------------------------------------------------

namespace detail {

// Lazily cached path/interior relations of one web.
class WebRelations {
 public:
  WebRelations(const Graph& g, const Web& web) : g_(g), web_(web) {
    for (const auto& p : branch_pairs(web)) inner_.emplace(p, interior(web, p));
  }

  const VertexSet& inner(VertexPair p) const { return inner_.at(p); }

  // x has a neighbour on the whole path of p.
  bool sees_path(Vertex x, VertexPair p) const {
    const auto key = std::make_pair(x, p);
    if (auto it = path_seen_.find(key); it != path_seen_.end()) return it->second;
    return path_seen_[key] = has_neighbor_in(g_, x, web_.path(p));
  }

  bool sees_interior(Vertex x, VertexPair p) const {
    const auto key = std::make_pair(x, p);
    if (auto it = inner_seen_.find(key); it != inner_seen_.end()) return it->second;
    return inner_seen_[key] = has_neighbor_in(g_, x, inner(p));
  }

  bool interiors_touch(VertexPair p, VertexPair q) const {
    const auto key = std::minmax(p, q);
    if (auto it = touch_.find(key); it != touch_.end()) return it->second;
    return touch_[key] = !are_anticomplete(g_, inner(p), inner(q));
  }

  const Graph& graph() const { return g_; }
  const Web& web() const { return web_; }

 private:
  const Graph& g_;
  const Web& web_;
  std::map<VertexPair, VertexSet> inner_;
  mutable std::map<std::pair<Vertex, VertexPair>, bool> path_seen_;
  mutable std::map<std::pair<Vertex, VertexPair>, bool> inner_seen_;
  mutable std::map<std::pair<VertexPair, VertexPair>, bool> touch_;
};

// Lex-first S subset of W, |S| = s, satisfying the conditions of `level`.
// Each added vertex is checked against every condition it takes part in.
inline Dfs direct_clean_set(const WebRelations& rel, std::size_t s, CleanLevel level, StepMeter& meter,
                            VertexSet& chosen, std::size_t from = 0) {
  if (chosen.size() == s) return Dfs::found;
  const auto& w = rel.web().branch();
  const bool pinned = level != CleanLevel::interior;
  const bool inner = level != CleanLevel::pinned;
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w.size() - i < s - chosen.size()) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    const Vertex v = w[i];
    bool ok = true;
    for (std::size_t a = 0; ok && a < chosen.size(); ++a) {
      const Vertex x = chosen[a];
      if (pinned && rel.graph().adjacent(v, x)) ok = false;
      for (std::size_t b = a + 1; ok && b < chosen.size(); ++b) {
        const Vertex y = chosen[b];
        const auto xy = VertexPair::of(x, y);
        if (pinned && (rel.sees_interior(v, xy) || rel.sees_interior(x, VertexPair::of(v, y)) ||
                       rel.sees_interior(y, VertexPair::of(v, x)))) {
          ok = false;
        }
      }
      if (inner && ok) {
        const auto vx = VertexPair::of(v, x);
        for (std::size_t b = 0; ok && b < chosen.size(); ++b) {
          for (std::size_t c = b + 1; ok && c < chosen.size(); ++c) {
            if (rel.interiors_touch(vx, VertexPair::of(chosen[b], chosen[c]))) ok = false;
          }
          if (b != a && rel.interiors_touch(vx, VertexPair::of(v, chosen[b]))) ok = false;
        }
      }
    }
    if (!ok) continue;
    chosen.push_back(v);
    const Dfs r = direct_clean_set(rel, s, level, meter, chosen, i + 1);
    if (r != Dfs::exhausted) return r;
    chosen.pop_back();
  }
  return Dfs::exhausted;
}

// b pairwise disjoint pairs from `good` (lex-first).
inline Dfs pick_disjoint_pairs(const std::vector<VertexPair>& good, std::size_t b, StepMeter& meter,
                               std::vector<VertexPair>& chosen, std::size_t from = 0) {
  if (chosen.size() == b) return Dfs::found;
  for (std::size_t i = from; i < good.size(); ++i) {
    if (good.size() - i < b - chosen.size()) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    bool clash = false;
    for (const auto& q : chosen) clash = clash || good[i].shares_end(q);
    if (clash) continue;
    chosen.push_back(good[i]);
    const Dfs r = pick_disjoint_pairs(good, b, meter, chosen, i + 1);
    if (r != Dfs::exhausted) return r;
    chosen.pop_back();
  }
  return Dfs::exhausted;
}

// Anchors grow in lex order; `good` keeps the pairs avoiding the anchors and
// seen by all of them.
inline Dfs direct_pinned_pair(const WebRelations& rel, std::size_t a, std::size_t b, StepMeter& meter,
                              VertexSet& anchors, const std::vector<VertexPair>& good, PinnedPair& out,
                              std::size_t from = 0) {
  if (anchors.size() == a) {
    std::vector<VertexPair> chosen;
    const Dfs r = pick_disjoint_pairs(good, b, meter, chosen);
    if (r == Dfs::found) out = PinnedPair{anchors, chosen};
    return r;
  }
  const auto& w = rel.web().branch();
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w.size() - i < a - anchors.size()) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    const Vertex v = w[i];
    std::vector<VertexPair> next;
    for (const auto& p : good) {
      if (!p.contains(v) && rel.sees_path(v, p)) next.push_back(p);
    }
    if (next.size() < b) continue;
    anchors.push_back(v);
    const Dfs r = direct_pinned_pair(rel, a, b, meter, anchors, next, out, i + 1);
    if (r != Dfs::exhausted) return r;
    anchors.pop_back();
  }
  return Dfs::exhausted;
}

// C grows in lex order over branch pairs; `common` keeps the pairs outside C
// touching every member of C. Any c of them complete C'.
inline Dfs direct_touching(const WebRelations& rel, const std::vector<VertexPair>& pairs, std::size_t c,
                           StepMeter& meter, std::vector<VertexPair>& first, const std::vector<VertexPair>& common,
                           TouchingFamilies& out, std::size_t from = 0) {
  if (first.size() == c) {
    out = TouchingFamilies{first, std::vector<VertexPair>(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(c))};
    return Dfs::found;
  }
  for (std::size_t i = from; i < pairs.size(); ++i) {
    if (pairs.size() - i < c - first.size()) break;
    if (!meter.tick()) return Dfs::out_of_budget;
    const VertexPair p = pairs[i];
    if (rel.inner(p).empty()) continue;
    std::vector<VertexPair> next;
    const auto& pool = first.empty() ? pairs : common;
    for (const auto& q : pool) {
      if (q != p && rel.interiors_touch(p, q)) next.push_back(q);
    }
    if (next.size() < c) continue;
    first.push_back(p);
    const Dfs r = direct_touching(rel, pairs, c, meter, first, next, out, i + 1);
    if (r != Dfs::exhausted) return r;
    first.pop_back();
  }
  return Dfs::exhausted;
}

inline Certificate inconclusive(std::string operation, const ExtractionParams& params, std::string reason,
                                const StepMeter& meter) {
  Certificate c;
  c.operation = std::move(operation);
  c.params = params;
  c.evidence = Inconclusive{std::move(reason), meter.used()};
  c.steps = meter.used();
  return c;
}

inline Certificate budget_exhausted(std::string operation, const ExtractionParams& params, const StepMeter& meter) {
  return inconclusive(std::move(operation), params, "step budget exhausted", meter);
}

inline Certificate make_cert(std::string operation, const ExtractionParams& params, Evidence ev, Route route,
                             const StepMeter& meter) {
  Certificate c;
  c.operation = std::move(operation);
  c.params = params;
  c.evidence = std::move(ev);
  c.route = route;
  c.steps = meter.used();
  return c;
}

// Surfaces a certificate that fails its own audit as a bug.
inline Certificate audited(const Graph& g, const Web& web, Certificate c) {
  if (c.inconclusive()) return c;
  if (auto v = certify::verify_certificate(g, web, c); !v) {
    throw InternalError(c.operation + " produced a certificate that fails verification: " + v.clause);
  }
  return c;
}

enum class StepOutcome { certificate, no_witness, out_of_budget };

struct RamseyStep {
  StepOutcome outcome = StepOutcome::no_witness;
  std::optional<Certificate> cert;
};

inline VertexSet take_members(const VertexSet& order, const std::vector<Index>& idx) {
  VertexSet out;
  for (auto i : idx) out.push_back(order[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Monochromatic step of the pinned lemma followed by its case split.
inline RamseyStep pinned_ramsey_step(const Graph& g, const Web& web, const ExtractionParams& params, StepMeter& meter) {
  const std::size_t a = params.a, b = params.b, s = params.s;
  const std::size_t target = std::max(3 * a + 2 * b, s);
  const auto table = pinned_table(g, web);
  const auto mono = find_monochromatic(table, target, params.mode, meter);
  if (mono.inconclusive() && meter.exhausted()) return {StepOutcome::out_of_budget, std::nullopt};
  if (!mono.found()) return {StepOutcome::no_witness, std::nullopt};

  const auto& z = mono.witness->subset;
  const Color common = mono.witness->color;
  const VertexSet& order = web.branch();
  if (common != 0) {
    // Blocks I1 < J < I2 < K < I3 of sizes a, b, a, b, a.
    auto block = [&](std::size_t start, std::size_t len) {
      return std::vector<Index>(z.begin() + static_cast<std::ptrdiff_t>(start),
                                z.begin() + static_cast<std::ptrdiff_t>(start + len));
    };
    const std::array<std::vector<Index>, 3> anchors_blocks{block(0, a), block(a + b, a), block(2 * a + 2 * b, a)};
    const auto j_block = block(a, b);
    const auto k_block = block(2 * a + b, b);
    const std::array<const std::vector<Index>*, 5> chain{&anchors_blocks[0], &j_block, &anchors_blocks[1], &k_block,
                                                          &anchors_blocks[2]};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i]->back() >= chain[i + 1]->front()) throw InternalError("pinned split blocks out of order");
    }
    const int f = std::countr_zero(static_cast<unsigned>(common));  // least colour member, 0-based
    PinnedPair pp;
    pp.anchors = take_members(order, anchors_blocks[f]);
    for (std::size_t t = 0; t < b; ++t) pp.pairs.push_back(VertexPair::of(order[j_block[t]], order[k_block[t]]));
    return {StepOutcome::certificate, make_cert("lemma_pinned", params, pp, Route::paper_bound, meter)};
  }
  const std::vector<Index> first_s(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(s));
  return {StepOutcome::certificate,
          make_cert("lemma_pinned", params, CleanSet{take_members(order, first_s), CleanLevel::pinned},
                    Route::paper_bound, meter)};
}

// Monochromatic step of the clean-interior lemma followed by its case split.
inline RamseyStep interior_ramsey_step(const Graph& g, const Web& web, const ExtractionParams& params,
                                     StepMeter& meter) {
  const std::size_t c = params.c, s = params.s;
  const std::size_t target = std::max(4 * c, s);
  const auto table = interior_table(g, web);
  const auto mono = find_monochromatic(table, target, params.mode, meter);
  if (mono.inconclusive() && meter.exhausted()) return {StepOutcome::out_of_budget, std::nullopt};
  if (!mono.found()) return {StepOutcome::no_witness, std::nullopt};

  const auto& z = mono.witness->subset;
  const Color common = mono.witness->color;
  const VertexSet& order = web.branch();
  if (common != 0) {
    std::array<std::vector<Index>, 4> blocks;
    for (std::size_t i = 0; i < 4; ++i) {
      blocks[i].assign(z.begin() + static_cast<std::ptrdiff_t>(i * c), z.begin() + static_cast<std::ptrdiff_t>((i + 1) * c));
      if (i > 0 && blocks[i - 1].back() >= blocks[i].front()) throw InternalError("interior split blocks out of order");
    }
    // Colex-least member {P, P'} of the common colour.
    const int bit = std::countr_zero(static_cast<unsigned>(common));
    int p = 0, q = 1;
    for (int qq = 1; qq < 6; ++qq) {
      for (int pp = 0; pp < qq; ++pp) {
        if (quad_pair_bit(pp, qq) == bit) p = pp, q = qq;
      }
    }
    auto [pi, pj] = kQuadPairs[p];
    auto [qi, qj] = kQuadPairs[q];
    // Orient as P = {i, j}, P' = {i', j'} with j not in P' and j' not in P.
    if (pi == qi || pi == qj || pj == qi || pj == qj) {
      const int shared = (pi == qi || pi == qj) ? pi : pj;
      const int j = pi == shared ? pj : pi;
      const int jp = qi == shared ? qj : qi;
      pi = qi = shared;
      pj = j;
      qj = jp;
    }
    const Index pivot = blocks[pi].front();
    const Index pivot_prime = blocks[qi].front();
    TouchingFamilies tf;
    for (Index t : blocks[pj]) tf.first.push_back(VertexPair::of(order[pivot], order[t]));
    for (Index t : blocks[qj]) tf.second.push_back(VertexPair::of(order[pivot_prime], order[t]));
    return {StepOutcome::certificate,
            make_cert("lemma_clean_interior", params, tf, Route::paper_bound, meter)};
  }
  const std::vector<Index> first_s(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(s));
  return {StepOutcome::certificate,
          make_cert("lemma_clean_interior", params, CleanSet{take_members(order, first_s), CleanLevel::interior},
                    Route::paper_bound, meter)};
}

inline std::optional<VertexSet> run_clean_set(const WebRelations& rel, std::size_t s, CleanLevel level,
                                              StepMeter& meter, bool& out_of_budget) {
  VertexSet chosen;
  const Dfs r = direct_clean_set(rel, s, level, meter, chosen);
  if (r == Dfs::out_of_budget) out_of_budget = true;
  if (r != Dfs::found) return std::nullopt;
  return chosen;
}

inline std::optional<PinnedPair> run_pinned_pair(const WebRelations& rel, std::size_t a, std::size_t b,
                                                 StepMeter& meter, bool& out_of_budget) {
  VertexSet anchors;
  PinnedPair out;
  const Dfs r = direct_pinned_pair(rel, a, b, meter, anchors, branch_pairs(rel.web()), out);
  if (r == Dfs::out_of_budget) out_of_budget = true;
  if (r != Dfs::found) return std::nullopt;
  return out;
}

inline std::optional<TouchingFamilies> run_touching(const WebRelations& rel, std::size_t c, StepMeter& meter,
                                                    bool& out_of_budget) {
  std::vector<VertexPair> first;
  TouchingFamilies out;
  const Dfs r = direct_touching(rel, branch_pairs(rel.web()), c, meter, first, {}, out);
  if (r == Dfs::out_of_budget) out_of_budget = true;
  if (r != Dfs::found) return std::nullopt;
  return out;
}

inline void require_positive(std::initializer_list<std::pair<const char*, std::uint64_t>> values) {
  for (const auto& [name, v] : values) {
    if (v == 0) throw InputError(std::string(name) + " must be positive");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-step operations
// ---------------------------------------------------------------------------

// PinnedPair (|A| = a, |B| = b) or CleanSet of size s that is stable with no
// member seeing the interior of a path between two others. Runs the
// monochromatic step on the triple colouring at size max{3a+2b, s}; when that
// step finds nothing, exact mode searches both outcomes directly.
inline Certificate lemma_pinned(const Graph& g, const Web& web, const ExtractionParams& params) {
  detail::require_positive({{"a", params.a}, {"b", params.b}, {"s", params.s}});
  require_valid_web(g, web);
  StepMeter meter(params.budget);
  const std::string op = "lemma_pinned";
  const auto step = detail::pinned_ramsey_step(g, web, params, meter);
  if (step.outcome == detail::StepOutcome::out_of_budget) return detail::budget_exhausted(op, params, meter);
  if (step.cert) return detail::audited(g, web, *step.cert);
  if (params.mode != SearchMode::exact) {
    return detail::inconclusive(op, params, "monochromatic step found no witness in constructive mode", meter);
  }
  const detail::WebRelations rel(g, web);
  bool oob = false;
  if (auto s = detail::run_clean_set(rel, params.s, CleanLevel::pinned, meter, oob)) {
    return detail::audited(g, web, detail::make_cert(op, params, CleanSet{*s, CleanLevel::pinned}, Route::direct_search, meter));
  }
  if (oob) return detail::budget_exhausted(op, params, meter);
  if (auto pp = detail::run_pinned_pair(rel, params.a, params.b, meter, oob)) {
    return detail::audited(g, web, detail::make_cert(op, params, *pp, Route::direct_search, meter));
  }
  if (oob) return detail::budget_exhausted(op, params, meter);
  return detail::inconclusive(op, params, "neither outcome exists at the requested sizes (exhaustive)", meter);
}

// TouchingFamilies (|C| = |C'| = c) or CleanSet of size s with pairwise
// anticomplete interiors. Monochromatic step on the quadruple colouring at
// size max{4c, s}; exact-mode direct search otherwise.
inline Certificate lemma_clean_interior(const Graph& g, const Web& web, const ExtractionParams& params) {
  detail::require_positive({{"c", params.c}, {"s", params.s}});
  require_valid_web(g, web);
  StepMeter meter(params.budget);
  const std::string op = "lemma_clean_interior";
  const auto step = detail::interior_ramsey_step(g, web, params, meter);
  if (step.outcome == detail::StepOutcome::out_of_budget) return detail::budget_exhausted(op, params, meter);
  if (step.cert) return detail::audited(g, web, *step.cert);
  if (params.mode != SearchMode::exact) {
    return detail::inconclusive(op, params, "monochromatic step found no witness in constructive mode", meter);
  }
  const detail::WebRelations rel(g, web);
  bool oob = false;
  if (auto s = detail::run_clean_set(rel, params.s, CleanLevel::interior, meter, oob)) {
    return detail::audited(g, web,
                           detail::make_cert(op, params, CleanSet{*s, CleanLevel::interior}, Route::direct_search, meter));
  }
  if (oob) return detail::budget_exhausted(op, params, meter);
  if (auto tf = detail::run_touching(rel, params.c, meter, oob)) {
    return detail::audited(g, web, detail::make_cert(op, params, *tf, Route::direct_search, meter));
  }
  if (oob) return detail::budget_exhausted(op, params, meter);
  return detail::inconclusive(op, params, "neither outcome exists at the requested sizes (exhaustive)", meter);
}

namespace detail {

inline Certificate combined_impl(const Graph& g, const Web& web, const ExtractionParams& params, StepMeter& meter) {
  const std::string op = "theorem_combined";
  const BigBound sigma = sigma_bound(BigBound(params.c), BigBound(params.s));
  const auto sigma64 = sigma.as_u64();
  // Stage-one stable-set size: sigma(c,s) when the web is that large,
  // otherwise every size from |W| down to s.
  const std::size_t top = (sigma64 && *sigma64 <= web.size()) ? *sigma64 : web.size();
  for (std::size_t s1 = top; s1 >= params.s && s1 >= 1; --s1) {
    ExtractionParams p1 = params;
    p1.s = s1;
    const auto first = pinned_ramsey_step(g, web, p1, meter);
    if (first.outcome == StepOutcome::out_of_budget) return budget_exhausted(op, params, meter);
    if (!first.cert) {
      if (s1 <= 3 * params.a + 2 * params.b) break;  // same target for every smaller s1
      continue;
    }
    StageRecord stage1{"lemma_pinned", first.cert->kind(), Route::paper_bound, {}};
    if (first.cert->kind() == CertKind::pinned_pair) {
      stage1.vertices = first.cert->as<PinnedPair>().anchors;
      auto c = make_cert(op, params, first.cert->evidence, Route::paper_bound, meter);
      c.stages = {stage1};
      return c;
    }
    const VertexSet sigma_set = first.cert->as<CleanSet>().members;
    stage1.vertices = sigma_set;
    const Web sub = restrict(web, sigma_set);
    const auto second = interior_ramsey_step(g, sub, params, meter);
    if (second.outcome == StepOutcome::out_of_budget) return budget_exhausted(op, params, meter);
    if (!second.cert) continue;
    StageRecord stage2{"lemma_clean_interior", second.cert->kind(), Route::paper_bound, {}};
    Evidence ev = second.cert->evidence;
    if (auto* cs = std::get_if<CleanSet>(&ev)) {
      cs->level = CleanLevel::full;
      stage2.vertices = cs->members;
    } else {
      for (const auto& pr : std::get<TouchingFamilies>(ev).first) stage2.vertices.push_back(pr.lo);
    }
    auto c = make_cert(op, params, std::move(ev), Route::paper_bound, meter);
    c.stages = {stage1, stage2};
    return c;
  }
  if (params.mode != SearchMode::exact) {
    return inconclusive(op, params, "monochromatic steps found no witness in constructive mode", meter);
  }
  const WebRelations rel(g, web);
  bool oob = false;
  if (auto s = run_clean_set(rel, params.s, CleanLevel::full, meter, oob)) {
    return make_cert(op, params, CleanSet{*s, CleanLevel::full}, Route::direct_search, meter);
  }
  if (oob) return budget_exhausted(op, params, meter);
  if (auto pp = run_pinned_pair(rel, params.a, params.b, meter, oob)) {
    return make_cert(op, params, *pp, Route::direct_search, meter);
  }
  if (oob) return budget_exhausted(op, params, meter);
  if (auto tf = run_touching(rel, params.c, meter, oob)) {
    return make_cert(op, params, *tf, Route::direct_search, meter);
  }
  if (oob) return budget_exhausted(op, params, meter);
  return inconclusive(op, params, "no outcome exists at the requested sizes (exhaustive)", meter);
}

}  // namespace detail

// PinnedPair, TouchingFamilies, or a CleanSet meeting all three clean-set
// conditions. Stage one runs the pinned step; its clean set Sigma restricts
// the web for the interior step.
inline Certificate theorem_combined(const Graph& g, const Web& web, const ExtractionParams& params) {
  detail::require_positive({{"a", params.a}, {"b", params.b}, {"c", params.c}, {"s", params.s}});
  require_valid_web(g, web);
  StepMeter meter(params.budget);
  return detail::audited(g, web, detail::combined_impl(g, web, params, meter));
}

// ---------------------------------------------------------------------------
// Pairwise touching sets -> induced K_t or K_{t,t}
// ---------------------------------------------------------------------------

namespace detail {

inline Certificate touching_impl(const Graph& g, const std::vector<VertexSet>& sets, const ExtractionParams& params,
                                 StepMeter& meter) {
  const std::string op = "lemma_touching_sets";
  const std::size_t t = params.t;
  std::vector<VertexSet> xs;
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("touching sets must be non-empty");
    xs.push_back(sorted_unique(s));
    if (xs.back().size() != s.size()) throw InputError("touching set repeats a vertex");
    require_vertices(g, xs.back());
  }
  std::vector<Vertex> all;
  for (const auto& x : xs) all.insert(all.end(), x.begin(), x.end());
  if (sorted_unique(all).size() != all.size()) throw InputError("touching sets are not pairwise disjoint");

  // Colour of {i, j}, i < j: the positions (f, f') with x_{i,f} x_{j,f'} an edge.
  using Key = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::map<Key, Color> intern;
  std::vector<Key> palette;
  std::vector<Color> by_rank(comb::binomial(xs.size(), 2));
  for (std::size_t j = 1; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Key key;
      for (std::uint32_t f = 0; f < xs[i].size(); ++f) {
        for (std::uint32_t h = 0; h < xs[j].size(); ++h) {
          if (g.adjacent(xs[i][f], xs[j][h])) key.emplace_back(f, h);
        }
      }
      if (key.empty()) {
        throw ContractViolation("sets " + std::to_string(i) + " and " + std::to_string(j) + " are anticomplete");
      }
      auto [it, fresh] = intern.emplace(key, static_cast<Color>(palette.size()));
      if (fresh) palette.push_back(key);
      by_rank[comb::colex_rank({i, j})] = it->second;
    }
  }

  if (xs.size() >= 2) {
    const auto table = ColoringTable::from_colex(xs.size(), 2, palette.size(), by_rank);
    const auto mono = find_monochromatic(table, 2 * t, params.mode, meter);
    if (mono.inconclusive() && meter.exhausted()) return budget_exhausted(op, params, meter);
    if (mono.found()) {
      const auto& z = mono.witness->subset;
      const Key& common = palette[mono.witness->color];
      const std::vector<Index> lower(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(t));
      const std::vector<Index> upper(z.begin() + static_cast<std::ptrdiff_t>(t), z.end());
      for (const auto& [f, h] : common) {
        if (f != h) continue;
        VertexSet k;
        for (Index i : lower) k.push_back(xs[i][f]);
        std::sort(k.begin(), k.end());
        return make_cert(op, params, InducedClique{k}, Route::paper_bound, meter);
      }
      const auto [f, h] = common.front();
      InducedBiclique b;
      for (Index i : lower) b.left.push_back(xs[i][f]);
      for (Index i : upper) b.right.push_back(xs[i][h]);
      std::sort(b.left.begin(), b.left.end());
      std::sort(b.right.begin(), b.right.end());
      return make_cert(op, params, b, Route::paper_bound, meter);
    }
  }
  if (params.mode != SearchMode::exact) {
    return inconclusive(op, params, "monochromatic step found no witness in constructive mode", meter);
  }
  const auto k = find_induced_clique(g, t, meter, all);
  if (k.inconclusive()) return budget_exhausted(op, params, meter);
  if (k.found()) return make_cert(op, params, InducedClique{*k.witness}, Route::direct_search, meter);
  const auto b = find_induced_biclique(g, t, meter, all);
  if (b.inconclusive()) return budget_exhausted(op, params, meter);
  if (b.found()) {
    return make_cert(op, params, InducedBiclique{b.witness->left, b.witness->right}, Route::direct_search, meter);
  }
  return inconclusive(op, params, "no induced K_t or K_{t,t} inside the union of the sets (exhaustive)", meter);
}

inline Certificate audited_graph_only(const Graph& g, Certificate c) {
  if (c.inconclusive()) return c;
  certify::Verdict v;
  if (c.kind() == CertKind::clique) v = certify::verify_clique(g, c.as<InducedClique>(), c.params.t);
  if (c.kind() == CertKind::biclique) v = certify::verify_biclique(g, c.as<InducedBiclique>(), c.params.t);
  if (!v) throw InternalError(c.operation + " produced a certificate that fails verification: " + v.clause);
  return c;
}

}  // namespace detail

// Pairwise disjoint, pairwise non-anticomplete sets -> induced K_t or K_{t,t}.
// Colours index pairs by their cross-adjacency pattern and looks for a
// monochromatic 2t-subset: a diagonal position (f,f) in the common pattern
// gives a clique on the lower t indices, otherwise an off-diagonal (f,f')
// gives a biclique between the lower and upper t indices. Exact mode falls
// back to a direct search inside the union of the sets.
inline Certificate lemma_touching_sets(const Graph& g, const std::vector<VertexSet>& sets,
                                       const ExtractionParams& params) {
  detail::require_positive({{"t", params.t}});
  StepMeter meter(params.budget);
  return detail::audited_graph_only(g, detail::touching_impl(g, sets, params, meter));
}

// ---------------------------------------------------------------------------
// Main extraction
// ---------------------------------------------------------------------------

// Induced K_t / K_{t,t} in g, or S subset of W of size s meeting all three
// clean-set conditions (so the web restricted to S is an induced proper
// subdivision). a = b = c = xi' where xi' is xi(max{r+3,2r}, t) when the web
// is large enough for the pinned split (5 xi' <= |W|), otherwise the largest
// value that is, tried downward. Pinned pairs and touching families become
// the sets handed to lemma_touching_sets.
inline Certificate main_extract(const Graph& g, const Web& web, const ExtractionParams& params) {
  detail::require_positive({{"s", params.s}, {"t", params.t}});
  require_valid_web(g, web);
  if (profile(web).r_value > params.r) {
    throw InputError("web has paths longer than r+1 = " + std::to_string(params.r + 1));
  }
  const std::string op = "main_extract";
  StepMeter meter(params.budget);
  const std::uint64_t set_cap = touching_set_size(params.r);
  const BigBound xi = xi_bound(set_cap, params.t);
  const std::uint64_t feasible = std::max<std::uint64_t>(1, web.size() / 5);
  const auto xi64 = xi.as_u64();
  const std::uint64_t top = (xi64 && *xi64 <= feasible) ? *xi64 : feasible;

  auto finish = [&](Certificate c, std::uint64_t xi_used, std::vector<StageRecord> stages) {
    c.operation = op;
    c.params = params;
    c.params.a = c.params.b = c.params.c = xi_used;
    c.stages = std::move(stages);
    c.steps = meter.used();
    return detail::audited(g, web, std::move(c));
  };

  std::optional<Certificate> dead_end;
  for (std::uint64_t x = top; x >= 1; --x) {
    ExtractionParams p = params;
    p.a = p.b = p.c = x;
    Certificate combined = detail::combined_impl(g, web, p, meter);
    if (meter.exhausted()) return finish(detail::budget_exhausted(op, params, meter), x, combined.stages);
    if (combined.inconclusive()) continue;
    std::vector<StageRecord> stages = combined.stages;
    stages.push_back({"theorem_combined", combined.kind(), combined.route, {}});
    if (combined.kind() == CertKind::clean_set) {
      stages.back().vertices = combined.as<CleanSet>().members;
      return finish(detail::make_cert(op, params, combined.evidence, combined.route, meter), x, stages);
    }

    std::vector<VertexSet> xs;
    if (combined.kind() == CertKind::pinned_pair) {
      const auto& pp = combined.as<PinnedPair>();
      for (std::size_t i = 0; i < pp.anchors.size(); ++i) {
        VertexSet xi_set{pp.anchors[i]};
        const auto& path = web.path(pp.pairs[i]);
        xi_set.insert(xi_set.end(), path.begin(), path.end());
        xs.push_back(std::move(xi_set));
      }
      stages.back().vertices = pp.anchors;
    } else {
      const auto& tf = combined.as<TouchingFamilies>();
      for (std::size_t i = 0; i < tf.first.size(); ++i) {
        VertexSet xi_set = interior(web, tf.first[i]);
        const auto other = interior(web, tf.second[i]);
        xi_set.insert(xi_set.end(), other.begin(), other.end());
        xs.push_back(std::move(xi_set));
      }
    }
    for (const auto& s : xs) {
      if (s.size() > set_cap) throw InternalError("touching set exceeds max{r+3, 2r}");
    }
    ExtractionParams pt = params;
    Certificate touched = detail::touching_impl(g, xs, pt, meter);
    VertexSet all;
    for (const auto& s : xs) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    stages.push_back({"lemma_touching_sets", touched.kind(), touched.route, all});
    if (meter.exhausted()) return finish(detail::budget_exhausted(op, params, meter), x, stages);
    if (!touched.inconclusive()) {
      const Route route = combined.route == Route::paper_bound && touched.route == Route::paper_bound
                              ? Route::paper_bound
                              : Route::direct_search;
      return finish(detail::make_cert(op, params, touched.evidence, route, meter), x, stages);
    }
    dead_end = finish(std::move(touched), x, stages);
    break;
  }

  if (params.mode == SearchMode::exact) {
    const auto k = find_induced_clique(g, params.t, meter);
    if (k.inconclusive()) return finish(detail::budget_exhausted(op, params, meter), top, {});
    if (k.found()) return finish(detail::make_cert(op, params, InducedClique{*k.witness}, Route::direct_search, meter), top, {});
    const auto b = find_induced_biclique(g, params.t, meter);
    if (b.inconclusive()) return finish(detail::budget_exhausted(op, params, meter), top, {});
    if (b.found()) {
      return finish(detail::make_cert(op, params, InducedBiclique{b.witness->left, b.witness->right},
                                      Route::direct_search, meter),
                    top, {});
    }
    return finish(detail::inconclusive(op, params, "no outcome exists at the requested sizes (exhaustive)", meter),
                  top, {});
  }
  if (dead_end) return *dead_end;
  return finish(detail::inconclusive(op, params, "monochromatic steps found no witness in constructive mode", meter),
                top, {});
}

}  // namespace webx
