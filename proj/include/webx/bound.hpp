#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "webx/core.hpp"

namespace webx {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-negative integer bound. Values wider than kPrintableBits are kept
// as an exact arithmetic expression instead of digits ("overflow"). Every
// overflow value is larger than every digit-backed value.
class BigBound {
 public:
  static constexpr unsigned kPrintableBits = 4096;

  BigBound() : BigBound(BigInt(0)) {}
  BigBound(std::uint64_t v) : BigBound(BigInt(v)) {}  // NOLINT: implicit by intent
  explicit BigBound(BigInt v) : exact_(std::move(v)) {
    if (*exact_ < 0) throw InputError("bounds are non-negative");
    expr_ = exact_->str();
  }

  // Exact value `v` described by `expr`; becomes an overflow marker when wide.
  static BigBound of(BigInt v, std::string expr) {
    if (v != 0 && boost::multiprecision::msb(v) >= kPrintableBits) return overflow(std::move(expr));
    return BigBound(std::move(v));
  }

  static BigBound overflow(std::string expr) {
    BigBound b;
    b.exact_.reset();
    b.expr_ = std::move(expr);
    return b;
  }

  bool is_overflow() const { return !exact_.has_value(); }
  const BigInt& value() const {
    if (!exact_) throw InputError("bound " + expr_ + " exceeds the printable threshold");
    return *exact_;
  }
  std::optional<std::uint64_t> as_u64() const {
    if (!exact_ || *exact_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return exact_->convert_to<std::uint64_t>();
  }
  // Decimal digits for exact values, the defining expression otherwise.
  const std::string& expr() const { return expr_; }

  friend bool operator==(const BigBound& a, const BigBound& b) {
    if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
    return !a.exact_ && !b.exact_ && a.expr_ == b.expr_;
  }

  // Only decided when at least one side is exact or both expressions match.
  friend std::optional<bool> less_than(const BigBound& a, const BigBound& b) {
    if (a.exact_ && b.exact_) return *a.exact_ < *b.exact_;
    if (a.exact_) return true;
    if (b.exact_) return false;
    if (a.expr_ == b.expr_) return false;
    return std::nullopt;
  }

 private:
  std::optional<BigInt> exact_;
  std::string expr_;
};

inline BigBound bound_max(const BigBound& a, const BigBound& b) {
  if (auto lt = less_than(a, b)) return *lt ? b : a;
  return BigBound::overflow("max(" + a.expr() + "," + b.expr() + ")");
}

inline BigBound bound_add(const BigBound& a, const BigBound& b) {
  if (a.is_overflow() || b.is_overflow()) return BigBound::overflow(a.expr() + "+" + b.expr());
  return BigBound::of(a.value() + b.value(), a.expr() + "+" + b.expr());
}

inline BigBound bound_scale(std::uint64_t k, const BigBound& a) {
  if (a.is_overflow()) return k == 0 ? BigBound(0) : (k == 1 ? a : BigBound::overflow(std::to_string(k) + "*" + a.expr()));
  return BigBound::of(a.value() * k, std::to_string(k) + "*" + a.expr());
}

inline BigBound bound_pow2(const BigBound& e) {
  if (e.is_overflow() || e.value() >= BigBound::kPrintableBits) return BigBound::overflow("2^(" + e.expr() + ")");
  return BigBound(BigInt(1) << e.value().convert_to<unsigned>());
}

namespace detail {

inline BigInt big_binomial(const BigInt& n, unsigned k) {
  if (n < k) return 0;
  BigInt acc = 1;
  for (unsigned i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

inline std::string rho_expr(const BigBound& f, const BigBound& g, const BigBound& n) {
  return "rho(" + f.expr() + "," + g.expr() + "," + n.expr() + ")";
}

}  // namespace detail

// Sound upper bound on the multicolour hypergraph Ramsey number: every
// f-colouring of the g-subsets of a ground set this large has a monochromatic
// n-subset.
//
//   n <= g or f == 1        : n
//   g == 1                  : f(n-1) + 1   (pigeonhole)
//   otherwise               : ground size that guarantees L = rho(f,g-1,n-1)+1
//                             end-homogeneous pivots, where picking pivot k
//                             costs C(k-1,g-2) refinements that each keep at
//                             least a 1/f fraction of the remaining elements.
//
// The last case is exactly the guarantee of the constructive search in
// find_monochromatic.
inline BigBound rho_upper(const BigBound& f, const BigBound& g, const BigBound& n) {
  const auto f64 = f.as_u64();
  const auto g64 = g.as_u64();
  if (f64 && *f64 == 0) throw InputError("rho needs a non-empty palette");
  if (g64 && *g64 == 0) throw InputError("rho needs arity >= 1");
  if (auto n64 = n.as_u64(); n64 && *n64 == 0) throw InputError("rho needs n >= 1");
  if (less_than(g, n) == std::optional<bool>(false)) return n;  // n <= g
  if (f64 && *f64 == 1) return n;
  const std::string expr = detail::rho_expr(f, g, n);
  if (f.is_overflow() || n.is_overflow() || !g64) return BigBound::overflow(expr);
  const BigInt& fv = f.value();
  const BigInt& nv = n.value();
  if (*g64 == 1) return BigBound::of(fv * (nv - 1) + 1, expr);

  const BigBound inner = rho_upper(f, BigBound(*g64 - 1), BigBound(BigInt(nv - 1)));
  if (inner.is_overflow()) return BigBound::overflow(expr);
  const BigInt pivots = inner.value() + 1;
  const unsigned f_bits = boost::multiprecision::msb(fv);  // floor(log2 f) >= 1
  const unsigned sub_arity = static_cast<unsigned>(*g64 - 2);

  // need(k): elements required before pivot k is chosen; need(L+1) = 0.
  BigInt need = 0;
  for (BigInt k = pivots; k >= 1; --k) {
    if (need == 0) {
      need = 1;
      continue;
    }
    if (need == 1) {
      need = 2;
      continue;
    }
    const BigInt refinements = detail::big_binomial(k - 1, sub_arity);
    if (refinements * f_bits >= BigBound::kPrintableBits) return BigBound::overflow(expr);
    need = boost::multiprecision::pow(fv, refinements.convert_to<unsigned>()) * (need - 1) + 2;
    if (boost::multiprecision::msb(need) >= BigBound::kPrintableBits) return BigBound::overflow(expr);
  }
  return BigBound::of(need, expr);
}

inline BigBound rho_upper(std::uint64_t f, std::uint64_t g, std::uint64_t n) {
  return rho_upper(BigBound(f), BigBound(g), BigBound(n));
}

// Target sizes of the monochromatic steps in the extraction pipeline.
inline BigBound pinned_target(const BigBound& a, const BigBound& b, const BigBound& s) {
  return bound_max(bound_add(bound_scale(3, a), bound_scale(2, b)), s);
}
inline BigBound interior_target(const BigBound& c, const BigBound& s) { return bound_max(bound_scale(4, c), s); }
inline std::uint64_t touching_set_size(std::uint64_t r) { return std::max(r + 3, 2 * r); }

// tau(a,b,s) = rho(8, 3, max{3a+2b, s})
inline BigBound tau_bound(const BigBound& a, const BigBound& b, const BigBound& s) {
  return rho_upper(BigBound(8), BigBound(3), pinned_target(a, b, s));
}
// sigma(c,s) = rho(2^15, 4, max{4c, s})
inline BigBound sigma_bound(const BigBound& c, const BigBound& s) {
  return rho_upper(BigBound(std::uint64_t{1} << 15), BigBound(4), interior_target(c, s));
}
// theta(a,b,c,s) = tau(a, b, sigma(c,s))
inline BigBound theta_bound(const BigBound& a, const BigBound& b, const BigBound& c, const BigBound& s) {
  return tau_bound(a, b, sigma_bound(c, s));
}
// xi(m,t) = rho(2^(m^2), 2, 2t) for sets of size at most m
inline BigBound xi_bound(std::uint64_t m, std::uint64_t t) {
  const BigBound palette = bound_pow2(BigBound(BigInt(m) * m));
  return rho_upper(palette, BigBound(2), BigBound(2 * t));
}

struct BoundChain {
  std::uint64_t r = 0, s = 0, t = 0;
  std::uint64_t xi_set_size = 0;  // max{r+3, 2r}
  BigBound xi_palette;            // 2^(m^2)
  BigBound xi_target;             // 2t
  BigBound xi;
  BigBound sigma_c;               // = xi
  BigBound sigma_target;          // max{4c, s}
  BigBound sigma;                 // sigma(xi, s)
  BigBound tau_a, tau_b, tau_s;   // xi, xi, sigma
  BigBound tau_target;            // max{3a+2b, tau_s}
  BigBound theta;                 // tau(xi, xi, sigma)
  BigBound omega;                 // theta(xi, xi, xi, s)
};

inline BoundChain bound_chain(std::uint64_t r, std::uint64_t s, std::uint64_t t) {
  if (s == 0 || t == 0) throw InputError("s and t must be positive");
  BoundChain c;
  c.r = r;
  c.s = s;
  c.t = t;
  c.xi_set_size = touching_set_size(r);
  c.xi_palette = bound_pow2(BigBound(BigInt(c.xi_set_size) * c.xi_set_size));
  c.xi_target = BigBound(2 * t);
  c.xi = xi_bound(c.xi_set_size, t);
  c.sigma_c = c.xi;
  c.sigma_target = interior_target(c.sigma_c, BigBound(s));
  c.sigma = sigma_bound(c.sigma_c, BigBound(s));
  c.tau_a = c.xi;
  c.tau_b = c.xi;
  c.tau_s = c.sigma;
  c.tau_target = pinned_target(c.tau_a, c.tau_b, c.tau_s);
  c.theta = tau_bound(c.tau_a, c.tau_b, c.tau_s);
  c.omega = theta_bound(c.xi, c.xi, c.xi, BigBound(s));
  return c;
}

}  // namespace webx
