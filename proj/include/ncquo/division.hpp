#pragma once

#include <cstddef>
#include <vector>

#include "ncquo/dense_poly.hpp"
#include "ncquo/errors.hpp"

namespace ncquo {

template <class P>
struct QuoRem {
  P quotient;
  P remainder;
};

/// Pseudodivision result. `multiplier` is m = v_k^(h-k+1); the identity
/// is m*u = v*q + r for Left and u*m = q*v + r for Right.
template <class P, class C>
struct PseudoQuoRem {
  P quotient;
  P remainder;
  C multiplier;
};

/// Classical O(N^2) division with an invertible leading coefficient.
///
/// Right gives u = q*v + r, Left gives u = v*q + r, with r = 0 or
/// deg r < deg v. Each pass cancels the current top coefficient of u with
/// the monomial (u_{i+k} *o v_k^-1) x^i.
template <Ring R>
QuoRem<DensePoly<element_t<R>>> classical_div(const PolyRing<R>& ring, const DensePoly<element_t<R>>& u,
                                               const DensePoly<element_t<R>>& v, Orientation o) {
  const R& cr = ring.coefficient_ring();
  if (ring.is_zero(v)) throw ZeroDivision("polynomial division by zero");
  const std::size_t k = *ring.degree(v);
  const auto vinv = cr.inv(ring.leading(v));
  if (ring.prec(u) <= k) return {ring.zero(), u};

  const std::size_t h = *ring.degree(u);
  std::vector<element_t<R>> rem = u.coeffs();
  std::vector<element_t<R>> q(h - k + 1, cr.zero());
  const auto& vc = v.coeffs();
  for (std::size_t i = h - k + 1; i-- > 0;) {
    const auto t = oriented_mul(cr, rem[i + k], vinv, o);
    q[i] = t;
    if (cr.is_zero(t)) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      rem[i + j] = cr.sub(rem[i + j], oriented_mul(cr, t, vc[j], o));
    }
  }
  rem.resize(k, cr.zero());
  return {ring.from_coeffs(std::move(q)), ring.from_coeffs(std::move(rem))};
}

/// Pseudodivision for a leading coefficient that commutes with the
/// divisor. No inverses are taken.
///
/// Only commutation with v's own coefficients is checked; NotCentral is
/// thrown when that fails.
template <Ring R>
PseudoQuoRem<DensePoly<element_t<R>>, element_t<R>> pseudo_div(const PolyRing<R>& ring,
                                                                const DensePoly<element_t<R>>& u,
                                                                const DensePoly<element_t<R>>& v,
                                                                Orientation o) {
  const R& cr = ring.coefficient_ring();
  if (ring.is_zero(v)) throw ZeroDivision("polynomial pseudodivision by zero");
  const std::size_t k = *ring.degree(v);
  const auto& vc = v.coeffs();
  const auto& lc = vc[k];
  for (std::size_t j = 0; j < k; ++j) {
    if (!cr.equal(cr.mul(lc, vc[j]), cr.mul(vc[j], lc))) {
      throw NotCentral("leading coefficient does not commute with coefficient " + std::to_string(j) +
                       " of the divisor");
    }
  }
  if (ring.prec(u) <= k) return {ring.zero(), u, cr.one()};

  const std::size_t h = *ring.degree(u);
  const std::size_t passes = h - k + 1;
  // lc_pow[i] = v_k^i
  std::vector<element_t<R>> lc_pow{cr.one()};
  for (std::size_t i = 1; i <= passes; ++i) lc_pow.push_back(cr.mul(lc_pow.back(), lc));

  std::vector<element_t<R>> rem = u.coeffs();
  std::vector<element_t<R>> q(passes, cr.zero());
  for (std::size_t i = passes; i-- > 0;) {
    const auto t = rem[i + k];
    // u <- u *o v_k - t x^i *o v
    for (auto& c : rem) c = oriented_mul(cr, c, lc, o);
    for (std::size_t j = 0; j <= k; ++j) {
      rem[i + j] = cr.sub(rem[i + j], oriented_mul(cr, t, vc[j], o));
    }
    q[i] = oriented_mul(cr, t, lc_pow[i], o);
  }
  rem.resize(k, cr.zero());
  return {ring.from_coeffs(std::move(q)), ring.from_coeffs(std::move(rem)), lc_pow[passes]};
}

}  // namespace ncquo
