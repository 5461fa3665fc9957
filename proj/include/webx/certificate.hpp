#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "webx/core.hpp"

namespace webx {

// Which of the clean-set conditions a CleanSet certifies:
//   pinned   : S stable, and x anticomplete to the interior of yz for x,y,z in S
//   interior : interiors of distinct pairs of S pairwise anticomplete
//   full     : both of the above
enum class CleanLevel { pinned, interior, full };

inline const char* to_string(CleanLevel l) {
  switch (l) {
    case CleanLevel::pinned: return "stable_and_pinned_free";
    case CleanLevel::interior: return "interiors_anticomplete";
    case CleanLevel::full: return "full";
  }
  return "?";
}

enum class Route { paper_bound, direct_search };

inline const char* to_string(Route r) { return r == Route::paper_bound ? "paper_bound" : "direct_search"; }

struct ExtractionParams {
  std::uint64_t r = 0;
  std::uint64_t s = 1;
  std::uint64_t t = 1;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t c = 1;
  SearchMode mode = SearchMode::exact;
  Budget budget;
  bool operator==(const ExtractionParams& o) const {
    return r == o.r && s == o.s && t == o.t && a == o.a && b == o.b && c == o.c && mode == o.mode &&
           budget.max_steps == o.budget.max_steps;
  }
};

struct InducedClique {
  VertexSet members;
  bool operator==(const InducedClique&) const = default;
};

struct InducedBiclique {
  VertexSet left;
  VertexSet right;
  bool operator==(const InducedBiclique&) const = default;
};

struct CleanSet {
  VertexSet members;
  CleanLevel level = CleanLevel::full;
  bool operator==(const CleanSet&) const = default;
};

// Anchor set A and pairwise disjoint branch pairs B, every anchor seeing
// every path of B.
struct PinnedPair {
  VertexSet anchors;
  std::vector<VertexPair> pairs;
  bool operator==(const PinnedPair&) const = default;
};

// Disjoint families of branch pairs whose interiors touch across families.
struct TouchingFamilies {
  std::vector<VertexPair> first;
  std::vector<VertexPair> second;
  bool operator==(const TouchingFamilies&) const = default;
};

struct Inconclusive {
  std::string reason;
  std::uint64_t steps = 0;
  bool operator==(const Inconclusive&) const = default;
};

using Evidence = std::variant<InducedClique, InducedBiclique, CleanSet, PinnedPair, TouchingFamilies, Inconclusive>;

enum class CertKind { clique, biclique, clean_set, pinned_pair, touching_families, inconclusive };

inline const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::clique: return "clique";
    case CertKind::biclique: return "biclique";
    case CertKind::clean_set: return "clean_set";
    case CertKind::pinned_pair: return "pinned_pair";
    case CertKind::touching_families: return "touching_families";
    case CertKind::inconclusive: return "inconclusive";
  }
  return "?";
}

// One intermediate result of a multi-stage extraction, kept for audit.
struct StageRecord {
  std::string operation;
  CertKind kind = CertKind::inconclusive;
  Route route = Route::paper_bound;
  VertexSet vertices;  // the stage's principal set (S, A, or union of touching sets)
  bool operator==(const StageRecord&) const = default;
};

struct Certificate {
  std::string operation;
  Evidence evidence;
  Route route = Route::direct_search;
  ExtractionParams params;
  std::vector<StageRecord> stages;
  std::uint64_t steps = 0;

  CertKind kind() const { return static_cast<CertKind>(evidence.index()); }
  bool inconclusive() const { return kind() == CertKind::inconclusive; }
  template <class T>
  const T& as() const {
    return std::get<T>(evidence);
  }
  bool operator==(const Certificate&) const = default;
};

// The clean-set conditions each producing operation certifies.
inline CleanLevel clean_level_for(const std::string& operation) {
  if (operation == "lemma_pinned") return CleanLevel::pinned;
  if (operation == "lemma_clean_interior") return CleanLevel::interior;
  return CleanLevel::full;
}

// ---- JSON ----

using json = nlohmann::json;

namespace detail {

inline json pairs_to_json(const std::vector<VertexPair>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back({p.lo, p.hi});
  return out;
}

inline std::vector<VertexPair> pairs_from_json(const json& j) {
  std::vector<VertexPair> out;
  for (const auto& e : j) {
    const auto v = e.get<std::vector<Vertex>>();
    if (v.size() != 2) throw InputError("pair entry must have two vertices");
    out.push_back(VertexPair::of(v[0], v[1]));
  }
  return out;
}

inline CertKind parse_kind(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(CertKind::inconclusive); ++k) {
    if (s == to_string(static_cast<CertKind>(k))) return static_cast<CertKind>(k);
  }
  throw InputError("unknown certificate kind '" + s + "'");
}

inline CleanLevel parse_level(const std::string& s) {
  for (auto l : {CleanLevel::pinned, CleanLevel::interior, CleanLevel::full}) {
    if (s == to_string(l)) return l;
  }
  throw InputError("unknown clean-set conditions '" + s + "'");
}

inline std::string budget_string(const Budget& b) {
  return b.max_steps == Budget::kUnlimited ? "unlimited" : std::to_string(b.max_steps);
}

inline Budget parse_budget(const std::string& s) {
  if (s == "unlimited") return {};
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw InputError("bad budget '" + s + "'");
    return Budget::steps(v);
  } catch (const std::logic_error&) {
    throw InputError("bad budget '" + s + "'");
  }
}

}  // namespace detail

inline json params_to_json(const ExtractionParams& p) {
  return {{"r", p.r},
          {"s", p.s},
          {"t", p.t},
          {"a", p.a},
          {"b", p.b},
          {"c", p.c},
          {"mode", to_string(p.mode)},
          {"budget", detail::budget_string(p.budget)}};
}

inline ExtractionParams params_from_json(const json& j) {
  ExtractionParams p;
  p.r = j.at("r").get<std::uint64_t>();
  p.s = j.at("s").get<std::uint64_t>();
  p.t = j.at("t").get<std::uint64_t>();
  p.a = j.at("a").get<std::uint64_t>();
  p.b = j.at("b").get<std::uint64_t>();
  p.c = j.at("c").get<std::uint64_t>();
  p.mode = parse_search_mode(j.at("mode").get<std::string>());
  p.budget = detail::parse_budget(j.at("budget").get<std::string>());
  return p;
}

inline json evidence_to_json(const Evidence& e) {
  struct Visitor {
    json operator()(const InducedClique& c) const { return {{"K", c.members}, {"size", c.members.size()}}; }
    json operator()(const InducedBiclique& b) const {
      return {{"left", b.left}, {"right", b.right}, {"size", b.left.size()}};
    }
    json operator()(const CleanSet& c) const {
      return {{"S", c.members}, {"size", c.members.size()}, {"conditions", to_string(c.level)}};
    }
    json operator()(const PinnedPair& p) const {
      return {{"A", p.anchors}, {"B", detail::pairs_to_json(p.pairs)}, {"a", p.anchors.size()}, {"b", p.pairs.size()}};
    }
    json operator()(const TouchingFamilies& t) const {
      return {{"C", detail::pairs_to_json(t.first)},
              {"C_prime", detail::pairs_to_json(t.second)},
              {"c", t.first.size()}};
    }
    json operator()(const Inconclusive& i) const { return {{"reason", i.reason}, {"steps", i.steps}}; }
  };
  return std::visit(Visitor{}, e);
}

// Declared sizes must match the lists they describe.
inline Evidence evidence_from_json(CertKind kind, const json& j) {
  auto check_size = [](const json& jj, const char* key, std::size_t actual) {
    if (jj.contains(key) && jj.at(key).get<std::size_t>() != actual) {
      throw InputError(std::string("declared '") + key + "' does not match the evidence");
    }
  };
  switch (kind) {
    case CertKind::clique: {
      InducedClique c{j.at("K").get<VertexSet>()};
      check_size(j, "size", c.members.size());
      return c;
    }
    case CertKind::biclique: {
      InducedBiclique b{j.at("left").get<VertexSet>(), j.at("right").get<VertexSet>()};
      check_size(j, "size", b.left.size());
      return b;
    }
    case CertKind::clean_set: {
      CleanSet c{j.at("S").get<VertexSet>(), detail::parse_level(j.at("conditions").get<std::string>())};
      check_size(j, "size", c.members.size());
      return c;
    }
    case CertKind::pinned_pair: {
      PinnedPair p{j.at("A").get<VertexSet>(), detail::pairs_from_json(j.at("B"))};
      check_size(j, "a", p.anchors.size());
      check_size(j, "b", p.pairs.size());
      return p;
    }
    case CertKind::touching_families: {
      TouchingFamilies t{detail::pairs_from_json(j.at("C")), detail::pairs_from_json(j.at("C_prime"))};
      check_size(j, "c", t.first.size());
      return t;
    }
    case CertKind::inconclusive:
      return Inconclusive{j.at("reason").get<std::string>(), j.at("steps").get<std::uint64_t>()};
  }
  throw InputError("unknown certificate kind");
}

inline json certificate_to_json(const Certificate& c) {
  json stages = json::array();
  for (const auto& s : c.stages) {
    stages.push_back({{"operation", s.operation},
                      {"kind", to_string(s.kind)},
                      {"route", to_string(s.route)},
                      {"vertices", s.vertices}});
  }
  return {{"kind", to_string(c.kind())},
          {"operation", c.operation},
          {"evidence", evidence_to_json(c.evidence)},
          {"route", to_string(c.route)},
          {"params", params_to_json(c.params)},
          {"stages", std::move(stages)},
          {"steps", c.steps}};
}

inline Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    const CertKind kind = detail::parse_kind(j.at("kind").get<std::string>());
    c.operation = j.value("operation", std::string("main_extract"));
    c.evidence = evidence_from_json(kind, j.at("evidence"));
    const auto route = j.at("route").get<std::string>();
    if (route != "paper_bound" && route != "direct_search") throw InputError("unknown route '" + route + "'");
    c.route = route == "paper_bound" ? Route::paper_bound : Route::direct_search;
    c.params = params_from_json(j.at("params"));
    if (j.contains("stages")) {
      for (const auto& s : j.at("stages")) {
        StageRecord r;
        r.operation = s.at("operation").get<std::string>();
        r.kind = detail::parse_kind(s.at("kind").get<std::string>());
        r.route = s.at("route").get<std::string>() == "paper_bound" ? Route::paper_bound : Route::direct_search;
        r.vertices = s.at("vertices").get<VertexSet>();
        c.stages.push_back(std::move(r));
      }
    }
    c.steps = j.value("steps", std::uint64_t{0});
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

inline std::string format_certificate(const Certificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

inline Certificate parse_certificate(const std::string& text) {
  try {
    return certificate_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate is not JSON: ") + e.what());
  }
}

}  // namespace webx
