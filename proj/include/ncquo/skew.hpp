#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncquo/division.hpp"
#include "ncquo/errors.hpp"
#include "ncquo/ring.hpp"

// Ore extensions R[x; sigma, delta], where x r = sigma(r) x + delta(r).
//
// Elements are kept as sums u_i x^i with every power of x on the right.
// Division and the left shifted inverse are only implemented for
// sigma = id (differential polynomial rings R[x, delta]).

namespace ncquo {

/// Endomorphism sigma and sigma-derivation delta on R. Both must be pure.
template <Ring R>
struct OrePair {
  using map_type = std::function<element_t<R>(const element_t<R>&)>;

  map_type sigma;
  map_type delta;
  bool sigma_is_identity = false;

  static OrePair differential(map_type delta) {
    return {[](const element_t<R>& r) { return r; }, std::move(delta), true};
  }
};

template <Ring R>
class SkewRing;

template <class C>
class SkewPoly {
 public:
  SkewPoly() = default;

  const std::vector<C>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  template <Ring R>
  friend class SkewRing;

  explicit SkewPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<C> coeffs_;
};

template <Ring R>
class SkewRing {
 public:
  using coeff_type = element_t<R>;
  using element_type = SkewPoly<coeff_type>;

  SkewRing(R coeffs, OrePair<R> ore) : coeffs_(std::move(coeffs)), ore_(std::move(ore)) {}

  const R& coefficient_ring() const noexcept { return coeffs_; }
  const OrePair<R>& ore() const noexcept { return ore_; }
  bool sigma_is_identity() const noexcept { return ore_.sigma_is_identity; }

  element_type from_coeffs(std::vector<coeff_type> c) const {
    while (!c.empty() && coeffs_.is_zero(c.back())) c.pop_back();
    return element_type(std::move(c));
  }
  element_type zero() const { return element_type{}; }
  element_type one() const { return constant(coeffs_.one()); }
  element_type constant(const coeff_type& c) const { return monomial(c, 0); }
  /// The operator variable x itself.
  element_type generator() const { return monomial(coeffs_.one(), 1); }
  /// c x^n
  element_type monomial(const coeff_type& c, std::size_t n) const {
    if (coeffs_.is_zero(c)) return zero();
    std::vector<coeff_type> v(n + 1, coeffs_.zero());
    v[n] = c;
    return element_type(std::move(v));
  }

  std::optional<std::size_t> degree(const element_type& p) const noexcept {
    if (p.empty()) return std::nullopt;
    return p.coeffs().size() - 1;
  }
  std::size_t prec(const element_type& p) const noexcept { return p.coeffs().size(); }
  coeff_type coeff(const element_type& p, std::size_t i) const {
    return i < p.coeffs().size() ? p.coeffs()[i] : coeffs_.zero();
  }
  const coeff_type& leading(const element_type& p) const {
    if (p.empty()) throw std::domain_error("leading coefficient of the zero skew polynomial");
    return p.coeffs().back();
  }

  element_type add(const element_type& a, const element_type& b) const {
    std::vector<coeff_type> out(std::max(a.coeffs().size(), b.coeffs().size()), coeffs_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_.add(coeff(a, i), coeff(b, i));
    return from_coeffs(std::move(out));
  }
  element_type sub(const element_type& a, const element_type& b) const {
    std::vector<coeff_type> out(std::max(a.coeffs().size(), b.coeffs().size()), coeffs_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_.sub(coeff(a, i), coeff(b, i));
    return from_coeffs(std::move(out));
  }
  element_type neg(const element_type& a) const { return sub(zero(), a); }

  /// c * p (c multiplies each coefficient from the left).
  element_type scale_left(const coeff_type& c, const element_type& p) const {
    std::vector<coeff_type> out;
    out.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) out.push_back(coeffs_.mul(c, x));
    return from_coeffs(std::move(out));
  }

  /// x * b = sum sigma(b_i) x^(i+1) + delta(b_i) x^i
  element_type mul_var_left(const element_type& b) const {
    const auto& c = b.coeffs();
    if (c.empty()) return zero();
    std::vector<coeff_type> out(c.size() + 1, coeffs_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[i + 1] = coeffs_.add(out[i + 1], ore_.sigma(c[i]));
      out[i] = coeffs_.add(out[i], ore_.delta(c[i]));
    }
    return from_coeffs(std::move(out));
  }

  /// Naive skew product: sum over a's monomials of a_i * (x^i * b), with
  /// x^i * b built up one application of the commutation rule at a time.
  element_type mul(const element_type& a, const element_type& b) const {
    element_type sum = zero();
    if (a.empty() || b.empty()) return sum;
    element_type xib = b;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (i > 0) xib = mul_var_left(xib);
      if (!coeffs_.is_zero(a.coeffs()[i])) sum = add(sum, scale_left(a.coeffs()[i], xib));
    }
    return sum;
  }
  element_type mul(const element_type& a, const element_type& b, Orientation o) const {
    return o == Orientation::Right ? mul(a, b) : mul(b, a);
  }

  /// Binary powering; a^0 = 1.
  element_type pow(element_type a, std::size_t n) const {
    element_type p = one();
    while (n > 0) {
      if (n & 1) p = mul(p, a);
      n >>= 1;
      if (n > 0) a = mul(a, a);
    }
    return p;
  }

  /// x^n * v. Negative n has no skew-polynomial meaning and is refused.
  element_type lshift(const element_type& v, long n) const {
    if (n < 0) throw NegativeLeftShift("left whole shift by a negative power is undefined");
    element_type out = v;
    for (long i = 0; i < n; ++i) out = mul_var_left(out);
    return out;
  }

  /// sum over i + n >= 0 of u_i x^(i+n): a pure index shift.
  element_type rshift(const element_type& v, long n) const {
    const auto& c = v.coeffs();
    if (c.empty() || n == 0) return v;
    if (n > 0) {
      std::vector<coeff_type> out(c.size() + static_cast<std::size_t>(n), coeffs_.zero());
      std::copy(c.begin(), c.end(), out.begin() + n);
      return element_type(std::move(out));
    }
    const auto drop = static_cast<std::size_t>(-n);
    if (drop >= c.size()) return zero();
    return element_type(std::vector<coeff_type>(c.begin() + static_cast<std::ptrdiff_t>(drop), c.end()));
  }

  /// The operator acting on R: sum c_i delta^i(p). Needs sigma = id.
  coeff_type apply(const element_type& op, const coeff_type& p) const {
    require_differential("apply");
    coeff_type result = coeffs_.zero();
    coeff_type dp = p;
    for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
      if (i > 0) dp = ore_.delta(dp);
      result = coeffs_.add(result, coeffs_.mul(op.coeffs()[i], dp));
    }
    return result;
  }

  bool equal(const element_type& a, const element_type& b) const {
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (!coeffs_.equal(a.coeffs()[i], b.coeffs()[i])) return false;
    }
    return true;
  }
  bool is_zero(const element_type& a) const noexcept { return a.empty(); }

  void require_differential(const char* what) const {
    if (!ore_.sigma_is_identity) {
      throw UnsupportedSigma(std::string(what) + " is only implemented for sigma = id");
    }
  }

 private:
  R coeffs_;
  OrePair<R> ore_;
};

/// Algorithm-1 style division in R[x, delta]. Right: u = q*v + r, Left:
/// u = v*q + r, with all products skew.
template <Ring R>
QuoRem<SkewPoly<element_t<R>>> skew_classical_div(const SkewRing<R>& ring, const SkewPoly<element_t<R>>& u,
                                                   const SkewPoly<element_t<R>>& v, Orientation o) {
  ring.require_differential("skew division");
  const R& cr = ring.coefficient_ring();
  if (ring.is_zero(v)) throw ZeroDivision("skew division by zero");
  const std::size_t k = *ring.degree(v);
  const auto vinv = cr.inv(ring.leading(v));
  if (ring.prec(u) <= k) return {ring.zero(), u};

  const std::size_t h = *ring.degree(u);
  std::vector<element_t<R>> q(h - k + 1, cr.zero());
  auto rem = u;
  // Right division subtracts c * (x^i v); keep x^i v for every i.
  std::vector<SkewPoly<element_t<R>>> xv;
  if (o == Orientation::Right) {
    xv.push_back(v);
    for (std::size_t i = 1; i <= h - k; ++i) xv.push_back(ring.mul_var_left(xv.back()));
  }
  for (std::size_t i = h - k + 1; i-- > 0;) {
    const auto top = ring.coeff(rem, i + k);
    if (cr.is_zero(top)) continue;
    const auto t = oriented_mul(cr, top, vinv, o);
    q[i] = t;
    const auto prod = o == Orientation::Right ? ring.scale_left(t, xv[i]) : ring.mul(v, ring.monomial(t, i));
    rem = ring.sub(rem, prod);
  }
  return {ring.from_coeffs(std::move(q)), std::move(rem)};
}

/// Per-call record of the left shifted inverse iteration: the residual
/// degree seen at each convergence check (nullopt for a zero residual).
struct LshinvTrace {
  std::vector<std::optional<std::size_t>> residual_degrees;

  /// Number of update steps taken.
  std::size_t iterations() const noexcept {
    return residual_degrees.empty() ? 0 : residual_degrees.size() - 1;
  }
};

/// x^h lquo v for monic v in R[x, delta].
///
/// Modified Newton-Schulz iteration from w = x^(h-k) - v_{k-1} x^(h-k-1):
/// w <- w + rshift_{-h}(w * (x^h - v*w)). Stops once the residual
/// x^h - v*w has degree below k. Each pass may fix only one more term,
/// so up to h - k + 1 passes are allowed before NoConvergence.
template <Ring R>
SkewPoly<element_t<R>> lshinv(const SkewRing<R>& ring, const SkewPoly<element_t<R>>& v, long h,
                              LshinvTrace* trace = nullptr) {
  ring.require_differential("lshinv");
  const R& cr = ring.coefficient_ring();
  if (ring.is_zero(v) || !cr.equal(ring.leading(v), cr.one())) {
    throw NotMonic("lshinv needs a monic divisor");
  }
  const long k = static_cast<long>(*ring.degree(v));
  if (h < k) return ring.zero();

  const auto xh = ring.monomial(cr.one(), static_cast<std::size_t>(h));
  auto w = ring.monomial(cr.one(), static_cast<std::size_t>(h - k));
  if (h > k && k > 0) {
    w = ring.sub(w, ring.monomial(v.coeffs()[static_cast<std::size_t>(k - 1)], static_cast<std::size_t>(h - k - 1)));
  }
  const long cap = h - k + 1;
  for (long it = 0;; ++it) {
    const auto residual = ring.sub(xh, ring.mul(v, w));
    const auto deg = ring.degree(residual);
    if (trace) trace->residual_degrees.push_back(deg);
    if (!deg || static_cast<long>(*deg) < k) return w;
    if (it == cap) {
      throw NoConvergence("lshinv did not converge within " + std::to_string(cap) + " iterations");
    }
    w = ring.add(w, ring.rshift(ring.mul(w, residual), -h));
  }
}

/// x^h rquo v, by classical right division.
template <Ring R>
SkewPoly<element_t<R>> rshinv(const SkewRing<R>& ring, const SkewPoly<element_t<R>>& v, long h) {
  if (ring.is_zero(v)) throw ZeroDivision("skew division by zero");
  if (h < static_cast<long>(*ring.degree(v))) {
    ring.require_differential("rshinv");
    ring.coefficient_ring().inv(ring.leading(v));
    return ring.zero();
  }
  const auto xh = ring.monomial(ring.coefficient_ring().one(), static_cast<std::size_t>(h));
  return skew_classical_div(ring, xh, v, Orientation::Right).quotient;
}

/// Right quotient from the left shifted inverse:
/// u rquo v = rshift_{-h}(u * lshinv_h(v)) with h = deg u.
template <Ring R>
QuoRem<SkewPoly<element_t<R>>> rquo_via_lshinv(const SkewRing<R>& ring, const SkewPoly<element_t<R>>& u,
                                                const SkewPoly<element_t<R>>& v, LshinvTrace* trace = nullptr) {
  ring.require_differential("rquo_via_lshinv");
  const R& cr = ring.coefficient_ring();
  if (ring.is_zero(v) || !cr.equal(ring.leading(v), cr.one())) {
    throw NotMonic("rquo_via_lshinv needs a monic divisor");
  }
  if (ring.is_zero(u)) return {ring.zero(), ring.zero()};
  const long h = static_cast<long>(*ring.degree(u));
  if (h < static_cast<long>(*ring.degree(v))) return {ring.zero(), u};
  auto q = ring.rshift(ring.mul(u, lshinv(ring, v, h, trace)), -h);
  auto r = ring.sub(u, ring.mul(q, v));
  return {std::move(q), std::move(r)};
}

}  // namespace ncquo
