#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "webx/bound.hpp"
#include "webx/combinatorics.hpp"
#include "webx/core.hpp"

namespace webx {

using Color = std::uint32_t;
using Index = std::size_t;

// Colouring of the g-subsets of U = {0, ..., |U|-1} with dense colours
// 0..palette-1. The assignment is a function evaluated on demand and
// memoised; copies share the memo.
class ColoringTable {
 public:
  using ColorFn = std::function<Color(std::span<const Index>)>;
  using NameFn = std::function<std::string(Color)>;

  ColoringTable(std::size_t ground, std::size_t arity, std::uint64_t palette, ColorFn fn, NameFn names = {})
      : ground_(ground), arity_(arity), palette_(palette), state_(std::make_shared<State>()) {
    if (arity == 0) throw InputError("colouring arity must be positive");
    if (palette == 0) throw InputError("palette must be non-empty");
    state_->fn = std::move(fn);
    state_->names = std::move(names);
  }

  // Table given explicitly by colour per g-subset in colex-rank order.
  static ColoringTable from_colex(std::size_t ground, std::size_t arity, std::uint64_t palette,
                                  std::vector<Color> by_rank) {
    if (by_rank.size() != comb::binomial(ground, arity)) {
      throw InputError("explicit colouring has " + std::to_string(by_rank.size()) + " entries, expected " +
                       std::to_string(comb::binomial(ground, arity)));
    }
    auto data = std::make_shared<std::vector<Color>>(std::move(by_rank));
    return ColoringTable(ground, arity, palette, [data](std::span<const Index> s) {
      return (*data)[comb::colex_rank(std::vector<Index>(s.begin(), s.end()))];
    });
  }

  std::size_t ground_size() const { return ground_; }
  std::size_t arity() const { return arity_; }
  std::uint64_t palette_size() const { return palette_; }

  // Colour of a strictly increasing g-subset of U.
  Color color(std::span<const Index> subset) const {
    if (subset.size() != arity_) throw InputError("colour query of the wrong arity");
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] >= ground_ || (i > 0 && subset[i] <= subset[i - 1])) {
        throw InputError("colour query is not an increasing subset of the ground set");
      }
    }
    const std::uint64_t key = comb::colex_rank(std::vector<Index>(subset.begin(), subset.end()));
    {
      std::lock_guard lock(state_->mu);
      if (auto it = state_->memo.find(key); it != state_->memo.end()) return it->second;
    }
    const Color c = state_->fn(subset);
    if (c >= palette_) throw InputError("colour " + std::to_string(c) + " outside the palette");
    std::lock_guard lock(state_->mu);
    state_->memo.emplace(key, c);
    return c;
  }

  std::string color_name(Color c) const { return state_->names ? state_->names(c) : std::to_string(c); }

 private:
  struct State {
    ColorFn fn;
    NameFn names;
    std::mutex mu;
    std::unordered_map<std::uint64_t, Color> memo;
  };

  std::size_t ground_;
  std::size_t arity_;
  std::uint64_t palette_;
  std::shared_ptr<State> state_;
};

struct MonochromaticWitness {
  Color color = 0;
  std::vector<Index> subset;  // increasing
  bool operator==(const MonochromaticWitness&) const = default;
};

// Independent re-check: |Z| = n, Z an increasing subset of U, and every
// g-subset of Z has the witness colour.
inline bool verify_monochromatic(const ColoringTable& table, const MonochromaticWitness& w, std::size_t n) {
  if (w.subset.size() != n || w.color >= table.palette_size()) return false;
  for (std::size_t i = 0; i < w.subset.size(); ++i) {
    if (w.subset[i] >= table.ground_size() || (i > 0 && w.subset[i] <= w.subset[i - 1])) return false;
  }
  return comb::for_each_subset(w.subset.size(), table.arity(), [&](const std::vector<std::size_t>& pos) {
    std::vector<Index> t;
    for (auto p : pos) t.push_back(w.subset[p]);
    return table.color(t) == w.color;
  });
}

namespace detail {

// Colex-first monochromatic n-subset: slots are filled from the largest
// element down, each slot trying values in increasing order.
class ExactMonochromatic {
 public:
  ExactMonochromatic(const ColoringTable& t, std::size_t n, StepMeter& meter) : t_(t), n_(n), meter_(meter) {}

  Dfs run() { return place(); }
  MonochromaticWitness witness() const {
    MonochromaticWitness w;
    w.subset.assign(chosen_.rbegin(), chosen_.rend());
    w.color = color_.value_or(0);
    return w;
  }

 private:
  Dfs place() {
    const std::size_t d = chosen_.size();
    if (d == n_) return Dfs::found;
    const std::size_t lo = n_ - d - 1;
    const std::size_t hi = d == 0 ? t_.ground_size() : chosen_.back();  // exclusive
    for (std::size_t x = lo; x < hi; ++x) {
      if (!meter_.tick()) return Dfs::out_of_budget;
      const auto saved = color_;
      if (!consistent(x)) {
        color_ = saved;
        continue;
      }
      chosen_.push_back(x);
      const Dfs r = place();
      if (r != Dfs::exhausted) return r;
      chosen_.pop_back();
      color_ = saved;
    }
    return Dfs::exhausted;
  }

  // Every new g-subset {x} + S, S a (g-1)-subset of the chosen elements, must
  // carry the common colour (fixed by the first such subset).
  bool consistent(std::size_t x) {
    const std::size_t g = t_.arity();
    if (chosen_.size() + 1 < g) return true;
    return comb::for_each_subset(chosen_.size(), g - 1, [&](const std::vector<std::size_t>& pos) {
      std::vector<Index> s{x};
      for (auto it = pos.rbegin(); it != pos.rend(); ++it) s.push_back(chosen_[*it]);
      std::sort(s.begin(), s.end());
      const Color c = t_.color(s);
      if (!color_) color_ = c;
      return *color_ == c;
    });
  }

  const ColoringTable& t_;
  std::size_t n_;
  StepMeter& meter_;
  std::vector<std::size_t> chosen_;  // decreasing
  std::optional<Color> color_;
};

using SubsetColor = std::function<Color(const std::vector<Index>&)>;

// Erdos-Rado pivot refinement over the increasing list `elems`, colouring
// g-subsets by `color`. Returns an n-subset that is monochromatic or nullopt.
inline std::optional<std::vector<Index>> constructive_monochromatic(const std::vector<Index>& elems, std::size_t g,
                                                                    std::size_t n, const SubsetColor& color, StepMeter& meter,
                                                                    bool& out_of_budget) {
  if (elems.size() < n) return std::nullopt;
  if (n <= g) return std::vector<Index>(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(n));
  if (g == 1) {
    std::map<Color, std::vector<Index>> classes;
    for (Index e : elems) {
      if (!meter.tick()) {
        out_of_budget = true;
        return std::nullopt;
      }
      classes[color({e})].push_back(e);
    }
    const std::vector<Index>* best = nullptr;
    for (const auto& [c, members] : classes) {
      if (!best || members.size() > best->size()) best = &members;
    }
    if (!best || best->size() < n) return std::nullopt;
    return std::vector<Index>(best->begin(), best->begin() + static_cast<std::ptrdiff_t>(n));
  }

  std::vector<Index> pivots;
  std::vector<Index> rest = elems;
  while (!rest.empty()) {
    const Index x = rest.front();
    rest.erase(rest.begin());
    pivots.push_back(x);
    if (pivots.size() + 1 < g) continue;
    // Refine by every (g-1)-subset of the pivots that contains x.
    const std::size_t older = pivots.size() - 1;
    comb::for_each_subset(older, g - 2, [&](const std::vector<std::size_t>& pos) {
      if (rest.empty()) return false;
      std::vector<Index> base;
      for (auto p : pos) base.push_back(pivots[p]);
      base.push_back(x);
      std::map<Color, std::vector<Index>> classes;
      for (Index y : rest) {
        if (!meter.tick()) {
          out_of_budget = true;
          return false;
        }
        auto s = base;
        s.push_back(y);
        classes[color(s)].push_back(y);
      }
      const std::vector<Index>* best = nullptr;
      for (const auto& [c, members] : classes) {
        if (!best || members.size() > best->size()) best = &members;
      }
      rest = *best;
      return true;
    });
    if (out_of_budget) return std::nullopt;
  }
  if (pivots.size() < 2) return std::nullopt;
  const Index last = pivots.back();
  pivots.pop_back();
  const SubsetColor induced = [&color, last](const std::vector<Index>& s) {
    auto t = s;
    t.push_back(last);
    return color(t);
  };
  auto sub = constructive_monochromatic(pivots, g - 1, n - 1, induced, meter, out_of_budget);
  if (!sub) return std::nullopt;
  sub->push_back(last);
  return sub;
}

}  // namespace detail

// Monochromatic n-subset of the table's ground set.
//   exact        : colex-first witness; `absent` means none exists.
//   constructive : pivot refinement; guaranteed to succeed once
//                  |U| >= rho_upper(palette, g, n), otherwise may report
//                  `inconclusive`.
// Every witness is re-verified before it is returned.
inline SearchResult<MonochromaticWitness> find_monochromatic(const ColoringTable& table, std::size_t n,
                                                             SearchMode mode, StepMeter& meter) {
  if (n == 0) throw InputError("monochromatic set size must be positive");
  SearchResult<MonochromaticWitness> out;
  const std::uint64_t start = meter.used();
  auto finish = [&](MonochromaticWitness w) {
    if (!verify_monochromatic(table, w, n)) throw InternalError("monochromatic witness failed re-verification");
    out.status = SearchStatus::found;
    out.witness = std::move(w);
    out.steps = meter.used() - start;
    return out;
  };

  const std::size_t g = table.arity();
  if (n > table.ground_size()) {
    out.status = SearchStatus::absent;
    return out;
  }
  if (n <= g) {
    MonochromaticWitness w;
    w.subset = comb::first_subset(n);
    w.color = n == g ? table.color(w.subset) : 0;
    return finish(std::move(w));
  }

  if (mode == SearchMode::exact) {
    detail::ExactMonochromatic search(table, n, meter);
    const auto r = search.run();
    out.steps = meter.used() - start;
    if (r == detail::Dfs::found) return finish(search.witness());
    out.status = r == detail::Dfs::exhausted ? SearchStatus::absent : SearchStatus::inconclusive;
    return out;
  }

  std::vector<Index> all(table.ground_size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  bool out_of_budget = false;
  const detail::SubsetColor color = [&table](const std::vector<Index>& s) { return table.color(s); };
  auto z = detail::constructive_monochromatic(all, g, n, color, meter, out_of_budget);
  out.steps = meter.used() - start;
  if (!z) {
    out.status = SearchStatus::inconclusive;
    return out;
  }
  MonochromaticWitness w;
  w.subset = std::move(*z);
  w.color = table.color(std::vector<Index>(w.subset.begin(), w.subset.begin() + static_cast<std::ptrdiff_t>(g)));
  return finish(std::move(w));
}

inline SearchResult<MonochromaticWitness> find_monochromatic(const ColoringTable& table, std::size_t n,
                                                             SearchMode mode, Budget budget = {}) {
  StepMeter meter(budget);
  return find_monochromatic(table, n, mode, meter);
}

}  // namespace webx
