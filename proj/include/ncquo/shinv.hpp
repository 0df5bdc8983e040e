#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncquo/dense_poly.hpp"
#include "ncquo/division.hpp"
#include "ncquo/errors.hpp"

// Whole shifted inverse shinv_h(v) = x^h quo v over R[x], computed by a
// Newton-Schulz style iteration that never leaves R[x], and quotients
// assembled from it.
//
// Because x is central, x^h lquo v = x^h rquo v whenever lc(v) is a unit,
// so one shifted inverse serves both orientations. The orientation only
// decides operand order inside each product.

namespace ncquo {

enum class RefineMethod { Refine1 = 1, Refine2 = 2, Refine3 = 3 };

/// Per-domain knobs of the generic iteration.
///
/// `has_carries` exists so the control flow keeps the shape needed by
/// carry-bearing domains; polynomial rings reject it, and with it unset
/// the guard and shortfall are both treated as 0.
struct ShinvConfig {
  bool has_carries = false;
  long guard = 0;
  long shortfall = 0;
  RefineMethod refine = RefineMethod::Refine3;
  /// Full extra steps after Refine1's loop. Unset means 1 for
  /// non-commutative coefficient rings and 0 otherwise.
  std::optional<long> extra_guard_steps;
};

/// One pass of a refine loop, recorded after the pass.
struct IterationRecord {
  long accurate;     // places known correct after the pass
  std::size_t prec;  // number of coefficients of w after the pass
  long grow;         // m; 0 for Refine1
  long prefix_drop;  // s; nonzero only for Refine3

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct IterationTrace {
  std::vector<IterationRecord> iterations;
  std::size_t guard_steps = 0;

  std::size_t loop_count() const noexcept { return iterations.size(); }
  std::vector<std::size_t> precs() const {
    std::vector<std::size_t> out;
    for (const auto& r : iterations) out.push_back(r.prec);
    return out;
  }
};

template <class P>
struct ShinvStart {
  P w;
  long accurate;
};

namespace detail {

struct Margins {
  long guard;
  long shortfall;
};

inline Margins margins(const ShinvConfig& cfg) {
  if (cfg.has_carries) {
    throw std::invalid_argument("polynomial domains have no carries; has_carries must be false");
  }
  return {0, 0};
}

inline void record(IterationTrace* trace, IterationRecord r) {
  if (trace) trace->iterations.push_back(r);
}

}  // namespace detail

template <Ring R>
long default_extra_guard_steps(const PolyRing<R>& ring) {
  return ring.coefficient_ring().is_commutative() ? 0 : 1;
}

/// Two-term start: shinv_{k+1}(v) = v_k^-1 x - v_k^-1 v_{k-1} v_k^-1,
/// correct in both of its places.
template <Ring R>
ShinvStart<DensePoly<element_t<R>>> shinv0(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v) {
  const R& cr = ring.coefficient_ring();
  const auto k = ring.degree(v);
  if (!k || *k < 1) throw std::invalid_argument("shinv0 needs deg v >= 1");
  const auto ilc = cr.inv(ring.leading(v));
  const auto low = cr.mul(cr.mul(ilc, cr.neg(v.coeffs()[*k - 1])), ilc);
  return {ring.from_coeffs({low, ilc}), 2};
}

/// x^h - v*w (Right) or x^h - w*v (Left), computed cheaply when w is
/// known to agree with shinv in its top `accurate` places: the high part
/// of the difference then vanishes and only the product mod x^L is needed.
template <Ring R>
DensePoly<element_t<R>> pow_diff(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v,
                                 const DensePoly<element_t<R>>& w, long h, long accurate, Orientation o,
                                 const ShinvConfig& cfg = {}) {
  detail::margins(cfg);
  const long carry = cfg.has_carries ? 1 : 0;
  const long len = static_cast<long>(ring.prec(v) + ring.prec(w)) - accurate + carry;
  if (ring.is_zero(v) || ring.is_zero(w) || len >= h) {
    return ring.sub(ring.shift(ring.one(), h), ring.mul(v, w, o));
  }
  if (len <= 0) return ring.zero();
  return ring.neg(ring.mul_mod(v, w, static_cast<std::size_t>(len), o));
}

/// shift_m(w) + shift_{2m-h}(w * pow_diff(v, w, h - m)), with operand order
/// following the orientation.
template <Ring R>
DensePoly<element_t<R>> step(const PolyRing<R>& ring, long h, const DensePoly<element_t<R>>& v,
                             const DensePoly<element_t<R>>& w, long m, long accurate, Orientation o,
                             const ShinvConfig& cfg = {}) {
  const auto diff = pow_diff(ring, v, w, h - m, accurate, o, cfg);
  return ring.add(ring.shift(w, m), ring.shift(ring.mul(w, diff, o), 2 * m - h));
}

/// Full-length iteration: w is scaled to its final length up front and
/// every pass works on all of it.
template <Ring R>
DensePoly<element_t<R>> refine1(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v, long h, long k,
                                DensePoly<element_t<R>> w, long accurate, const ShinvConfig& cfg,
                                Orientation o, IterationTrace* trace = nullptr) {
  const auto [g, d] = detail::margins(cfg);
  const long extra = cfg.extra_guard_steps.value_or(default_extra_guard_steps(ring));
  h += g;
  // The start value approximates shinv_{k+1}, so it sits one place above
  // the k + accurate alignment of the generic formulation.
  w = ring.shift(w, h - k - accurate + 1);
  while (h - k + 1 - d > accurate) {
    w = step(ring, h, v, w, 0, accurate, o, cfg);
    accurate = std::min(2 * accurate - d, h - k + 1 - d);
    detail::record(trace, {accurate, ring.prec(w), 0, 0});
  }
  for (long i = 0; i < extra; ++i) {
    w = step(ring, h, v, w, 0, accurate, o, cfg);
    if (trace) ++trace->guard_steps;
  }
  return w;
}

/// Growing iteration: w only ever holds its accurate places, which at
/// most double per pass.
template <Ring R>
DensePoly<element_t<R>> refine2(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v, long h, long k,
                                DensePoly<element_t<R>> w, long accurate, const ShinvConfig& cfg,
                                Orientation o, IterationTrace* trace = nullptr) {
  const auto [g, d] = detail::margins(cfg);
  w = ring.shift(w, g);
  while (h - k + 1 - d > accurate) {
    const long m = std::min(h - k + 1 - accurate, accurate);
    w = ring.shift(step(ring, k + accurate + m + d - 1 + g, v, w, m, accurate - g, o, cfg), -d);
    accurate += m - d;
    detail::record(trace, {accurate, ring.prec(w), m, 0});
  }
  return w;
}

/// As refine2, but early passes only look at the top coefficients of v
/// that can influence the places being computed.
template <Ring R>
DensePoly<element_t<R>> refine3(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v, long h, long k,
                                DensePoly<element_t<R>> w, long accurate, const ShinvConfig& cfg,
                                Orientation o, IterationTrace* trace = nullptr) {
  const auto [g, d] = detail::margins(cfg);
  w = ring.shift(w, g);
  while (h - k + 1 - d > accurate) {
    const long m = std::min(h - k + 1 - accurate, accurate);
    const long s = std::max(0L, k - 2 * accurate + 1 - g);
    w = ring.shift(step(ring, k + accurate + m - s - 1 + d + g, ring.shift(v, -s), w, m, accurate - g, o, cfg), -d);
    accurate += m - d;
    detail::record(trace, {accurate, ring.prec(w), m, s});
  }
  return ring.shift(w, -g);
}

/// shinv_h(v) = x^h quo v. Throws NotInvertible if lc(v) is not a unit.
template <Ring R>
DensePoly<element_t<R>> shinv(const PolyRing<R>& ring, const DensePoly<element_t<R>>& v, long h,
                              const ShinvConfig& cfg = {}, Orientation o = Orientation::Right,
                              IterationTrace* trace = nullptr) {
  if (ring.is_zero(v)) throw ZeroDivision("shifted inverse of the zero polynomial");
  if (h < 0) throw std::invalid_argument("shifted inverse needs h >= 0");
  const R& cr = ring.coefficient_ring();
  const long k = static_cast<long>(*ring.degree(v));
  const auto& lc = ring.leading(v);
  const auto ilc = cr.inv(lc);
  if (h < k) return ring.zero();
  if (k == 0 || h == k || ring.equal(v, ring.monomial(lc, static_cast<std::size_t>(k)))) {
    return ring.monomial(ilc, static_cast<std::size_t>(h - k));
  }
  auto [w, accurate] = shinv0(ring, v);
  switch (cfg.refine) {
    case RefineMethod::Refine1:
      return refine1(ring, v, h, k, std::move(w), accurate, cfg, o, trace);
    case RefineMethod::Refine2:
      return refine2(ring, v, h, k, std::move(w), accurate, cfg, o, trace);
    case RefineMethod::Refine3:
      return refine3(ring, v, h, k, std::move(w), accurate, cfg, o, trace);
  }
  throw std::invalid_argument("unknown refine method");
}

/// Quotient and remainder via the shifted inverse.
///
/// With h = deg u, uses shinv_{h+1}(v): Right gives q = shift_{-h-1}(u*s),
/// Left gives q = shift_{-h-1}(s*u). The remainder is u - q*v (Right) or
/// u - v*q (Left).
template <Ring R>
QuoRem<DensePoly<element_t<R>>> quo(const PolyRing<R>& ring, const DensePoly<element_t<R>>& u,
                                     const DensePoly<element_t<R>>& v, Orientation o,
                                     const ShinvConfig& cfg = {}, IterationTrace* trace = nullptr) {
  if (ring.is_zero(v)) throw ZeroDivision("polynomial division by zero");
  if (ring.is_zero(u)) {
    ring.coefficient_ring().inv(ring.leading(v));
    return {ring.zero(), ring.zero()};
  }
  const long h = static_cast<long>(*ring.degree(u));
  const auto iv = shinv(ring, v, h + 1, cfg, o, trace);
  auto q = ring.shift(ring.mul(u, iv, o), -(h + 1));
  auto r = ring.sub(u, ring.mul(q, v, o));
  return {std::move(q), std::move(r)};
}

}  // namespace ncquo
