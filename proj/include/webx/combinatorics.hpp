#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace webx::comb {

// Binomial coefficient, saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

// Advances `idx` (strictly increasing, values < n) to the next k-subset in
// lexicographic order. Returns false after the last one.
inline bool next_lex(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Advances `idx` to the next k-subset in colex order (compare the largest
// element first). No upper limit: callers stop on idx.back().
inline void next_colex(std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 == k || idx[i] + 1 < idx[i + 1]) {
      ++idx[i];
      for (std::size_t j = 0; j < i; ++j) idx[j] = j;
      return;
    }
  }
}

inline std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// Calls fn(const std::vector<size_t>&) on every k-subset of [0, n) in lex
// order; stops early when fn returns false. Returns false if stopped.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  auto idx = first_subset(k);
  do {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
  } while (next_lex(idx, n));
  return true;
}

// Colex rank of a sorted subset: sum of C(idx[i], i+1).
inline std::uint64_t colex_rank(const std::vector<std::size_t>& idx) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) r += binomial(idx[i], i + 1);
  return r;
}

}  // namespace webx::comb
