#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace webx {

using Vertex = std::uint32_t;

// Sorted, duplicate-free where an operation says "set"; PathSeq keeps order.
using VertexSet = std::vector<Vertex>;
using PathSeq = std::vector<Vertex>;

// Malformed input: unknown vertex, bad file, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-guaranteed hypothesis of an operation does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Something the library produced failed its own audit. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Unordered pair of distinct vertices, stored with lo < hi.
struct VertexPair {
  Vertex lo = 0;
  Vertex hi = 0;

  static VertexPair of(Vertex u, Vertex v) {
    if (u == v) throw InputError("pair with identical ends " + std::to_string(u));
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
  }

  bool contains(Vertex v) const { return v == lo || v == hi; }
  bool shares_end(const VertexPair& o) const { return contains(o.lo) || contains(o.hi); }

  auto operator<=>(const VertexPair&) const = default;
  bool operator==(const VertexPair&) const = default;
};

inline std::string to_string(const VertexPair& p) {
  return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
}

// Step budget counted in candidate-set expansions.
struct Budget {
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_steps = kUnlimited;

  static Budget unlimited() { return {}; }
  static Budget steps(std::uint64_t n) { return Budget{n}; }
};

// Shared, mutable step counter threaded through a multi-stage computation.
class StepMeter {
 public:
  explicit StepMeter(Budget b = {}) : limit_(b.max_steps) {}

  // Charges one step. Returns false once the budget is exhausted.
  bool tick(std::uint64_t n = 1) {
    if (exhausted_) return false;
    if (limit_ - used_ < n) {
      used_ = limit_;
      exhausted_ = true;
      return false;
    }
    used_ += n;
    return true;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return limit_ - used_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

enum class SearchStatus { found, absent, inconclusive };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

// Outcome of a budgeted search. `absent` is only reported after an exhaustive
// search; running out of budget yields `inconclusive`.
template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Witness> witness;
  std::uint64_t steps = 0;

  bool found() const { return status == SearchStatus::found; }
  bool absent() const { return status == SearchStatus::absent; }
  bool inconclusive() const { return status == SearchStatus::inconclusive; }
};

enum class SearchMode { exact, constructive };

inline const char* to_string(SearchMode m) {
  return m == SearchMode::exact ? "exact" : "constructive";
}

namespace detail {

// Outcome of one recursive search branch.
enum class Dfs { found, exhausted, out_of_budget };

}  // namespace detail

inline SearchMode parse_search_mode(const std::string& s) {
  if (s == "exact") return SearchMode::exact;
  if (s == "constructive") return SearchMode::constructive;
  throw InputError("unknown search mode '" + s + "'");
}

}  // namespace webx
