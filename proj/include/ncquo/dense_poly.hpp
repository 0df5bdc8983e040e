#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncquo/errors.hpp"
#include "ncquo/ring.hpp"

namespace ncquo {

template <Ring R>
class PolyRing;

/// Dense univariate polynomial with a central variable x.
///
/// Coefficients are little-endian: coeffs()[i] multiplies x^i. The
/// sequence is always normalized, so the zero polynomial is the empty
/// sequence and has no degree. Values are only built through a PolyRing,
/// which owns the coefficient arithmetic needed to normalize.
template <class C>
class DensePoly {
 public:
  DensePoly() = default;

  const std::vector<C>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  template <Ring R>
  friend class PolyRing;

  explicit DensePoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<C> coeffs_;
};

/// The ring R[x] with x commuting with R.
///
/// Multiplication is schoolbook below `karatsuba_threshold()` coefficients
/// and Karatsuba above it. Every sub-product keeps the left operand's
/// pieces on the left, so Karatsuba stays valid for non-commutative R.
/// PolyRing itself satisfies Ring, which is how F_p[y] becomes the
/// coefficient ring of differential operators.
template <Ring R>
class PolyRing {
 public:
  using coeff_type = element_t<R>;
  using element_type = DensePoly<coeff_type>;

  static constexpr std::size_t kDefaultKaratsubaThreshold = 16;
  static constexpr std::size_t kNoKaratsuba = std::numeric_limits<std::size_t>::max();

  explicit PolyRing(R coeffs, std::size_t karatsuba_threshold = kDefaultKaratsubaThreshold)
      : coeffs_(std::move(coeffs)), karatsuba_threshold_(std::max<std::size_t>(karatsuba_threshold, 2)) {}

  const R& coefficient_ring() const noexcept { return coeffs_; }
  std::size_t karatsuba_threshold() const noexcept { return karatsuba_threshold_; }
  void set_karatsuba_threshold(std::size_t t) noexcept { karatsuba_threshold_ = std::max<std::size_t>(t, 2); }

  // --- construction -------------------------------------------------------

  element_type from_coeffs(std::vector<coeff_type> c) const {
    normalize(c);
    return element_type(std::move(c));
  }
  element_type zero() const { return element_type{}; }
  element_type one() const { return constant(coeffs_.one()); }
  element_type constant(const coeff_type& c) const { return monomial(c, 0); }
  element_type variable() const { return monomial(coeffs_.one(), 1); }
  /// c * x^n
  element_type monomial(const coeff_type& c, std::size_t n) const {
    if (coeffs_.is_zero(c)) return zero();
    std::vector<coeff_type> v(n + 1, coeffs_.zero());
    v[n] = c;
    return element_type(std::move(v));
  }

  // --- inspection ---------------------------------------------------------

  std::optional<std::size_t> degree(const element_type& p) const noexcept {
    if (p.empty()) return std::nullopt;
    return p.coeffs().size() - 1;
  }
  /// Number of coefficients: degree + 1, and 0 for the zero polynomial.
  std::size_t prec(const element_type& p) const noexcept { return p.coeffs().size(); }
  coeff_type coeff(const element_type& p, std::size_t i) const {
    return i < p.coeffs().size() ? p.coeffs()[i] : coeffs_.zero();
  }
  const coeff_type& leading(const element_type& p) const {
    if (p.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return p.coeffs().back();
  }

  // --- ring operations ----------------------------------------------------

  element_type add(const element_type& a, const element_type& b) const {
    return combine(a, b, [this](const auto& x, const auto& y) { return coeffs_.add(x, y); },
                   [](const auto& x) { return x; });
  }
  element_type sub(const element_type& a, const element_type& b) const {
    return combine(a, b, [this](const auto& x, const auto& y) { return coeffs_.sub(x, y); },
                   [this](const auto& y) { return coeffs_.neg(y); });
  }
  element_type neg(const element_type& a) const {
    std::vector<coeff_type> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(coeffs_.neg(c));
    return element_type(std::move(out));
  }

  element_type mul(const element_type& a, const element_type& b) const {
    if (a.empty() || b.empty()) return zero();
    std::vector<coeff_type> out(a.coeffs().size() + b.coeffs().size() - 1, coeffs_.zero());
    mul_into(a.coeffs(), b.coeffs(), out);
    return from_coeffs(std::move(out));
  }
  /// Right: a*b. Left: b*a.
  element_type mul(const element_type& a, const element_type& b, Orientation o) const {
    return o == Orientation::Right ? mul(a, b) : mul(b, a);
  }

  /// c * p
  element_type scale_left(const coeff_type& c, const element_type& p) const {
    std::vector<coeff_type> out;
    out.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) out.push_back(coeffs_.mul(c, x));
    return from_coeffs(std::move(out));
  }
  /// p * c
  element_type scale_right(const element_type& p, const coeff_type& c) const {
    std::vector<coeff_type> out;
    out.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) out.push_back(coeffs_.mul(x, c));
    return from_coeffs(std::move(out));
  }

  /// Only constant polynomials with an invertible coefficient are treated
  /// as units.
  element_type inv(const element_type& p) const {
    if (p.coeffs().size() != 1) throw NotInvertible("only nonzero constants are invertible in R[x]");
    return constant(coeffs_.inv(p.coeffs()[0]));
  }

  bool equal(const element_type& a, const element_type& b) const {
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      if (!coeffs_.equal(a.coeffs()[i], b.coeffs()[i])) return false;
    }
    return true;
  }
  bool is_zero(const element_type& a) const noexcept { return a.empty(); }
  bool is_commutative() const { return coeffs_.is_commutative(); }
  std::uint64_t mul_count() const { return coeffs_.mul_count(); }

  // --- shifts and truncated products --------------------------------------

  /// Whole n-shift: multiply by x^n, discarding terms whose exponent would
  /// become negative.
  element_type shift(const element_type& p, long n) const {
    if (p.empty() || n == 0) return p;
    const auto& c = p.coeffs();
    if (n > 0) {
      std::vector<coeff_type> out(c.size() + static_cast<std::size_t>(n), coeffs_.zero());
      std::copy(c.begin(), c.end(), out.begin() + n);
      return element_type(std::move(out));
    }
    const auto drop = static_cast<std::size_t>(-n);
    if (drop >= c.size()) return zero();
    return element_type(std::vector<coeff_type>(c.begin() + static_cast<std::ptrdiff_t>(drop), c.end()));
  }

  /// p rem x^n
  element_type truncate(const element_type& p, std::size_t n) const {
    if (p.coeffs().size() <= n) return p;
    return from_coeffs(std::vector<coeff_type>(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// The oriented product reduced mod x^n. Only coefficients below x^n are
  /// formed in the schoolbook path; above the Karatsuba threshold the
  /// operands are truncated first and the product cut afterwards.
  element_type mul_mod(const element_type& a, const element_type& b, std::size_t n, Orientation o) const {
    const element_type& l = o == Orientation::Right ? a : b;
    const element_type& r = o == Orientation::Right ? b : a;
    if (n == 0 || l.empty() || r.empty()) return zero();
    std::span<const coeff_type> ls(l.coeffs().data(), std::min(l.coeffs().size(), n));
    std::span<const coeff_type> rs(r.coeffs().data(), std::min(r.coeffs().size(), n));
    const std::size_t full = ls.size() + rs.size() - 1;
    if (std::min(ls.size(), rs.size()) < karatsuba_threshold_) {
      std::vector<coeff_type> out(std::min(full, n), coeffs_.zero());
      for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::size_t jmax = std::min(rs.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
          out[i + j] = coeffs_.add(out[i + j], coeffs_.mul(ls[i], rs[j]));
        }
      }
      return from_coeffs(std::move(out));
    }
    std::vector<coeff_type> out(full, coeffs_.zero());
    mul_into(ls, rs, out);
    if (out.size() > n) out.resize(n, coeffs_.zero());
    return from_coeffs(std::move(out));
  }

 private:
  void normalize(std::vector<coeff_type>& c) const {
    while (!c.empty() && coeffs_.is_zero(c.back())) c.pop_back();
  }

  template <class Both, class RightOnly>
  element_type combine(const element_type& a, const element_type& b, Both both, RightOnly right_only) const {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<coeff_type> out;
    out.reserve(std::max(x.size(), y.size()));
    const std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) out.push_back(both(x[i], y[i]));
    for (std::size_t i = common; i < x.size(); ++i) out.push_back(x[i]);
    for (std::size_t i = common; i < y.size(); ++i) out.push_back(right_only(y[i]));
    return from_coeffs(std::move(out));
  }

  void accumulate(std::span<coeff_type> out, std::span<const coeff_type> src) const {
    for (std::size_t i = 0; i < src.size(); ++i) out[i] = coeffs_.add(out[i], src[i]);
  }

  void schoolbook_into(std::span<const coeff_type> a, std::span<const coeff_type> b,
                       std::span<coeff_type> out) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = coeffs_.add(out[i + j], coeffs_.mul(a[i], b[j]));
      }
    }
  }

  // out += a * b; out must hold at least a.size() + b.size() - 1 slots.
  void mul_into(std::span<const coeff_type> a, std::span<const coeff_type> b, std::span<coeff_type> out) const {
    const std::size_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) < karatsuba_threshold_) {
      schoolbook_into(a, b, out);
      return;
    }
    const std::size_t m = (std::max(na, nb) + 1) / 2;
    if (nb <= m) {
      mul_into(a.first(m), b, out);
      mul_into(a.subspan(m), b, out.subspan(m));
      return;
    }
    if (na <= m) {
      mul_into(a, b.first(m), out);
      mul_into(a, b.subspan(m), out.subspan(m));
      return;
    }
    const auto a0 = a.first(m), a1 = a.subspan(m);
    const auto b0 = b.first(m), b1 = b.subspan(m);

    std::vector<coeff_type> z0(2 * m - 1, coeffs_.zero());
    std::vector<coeff_type> z2(a1.size() + b1.size() - 1, coeffs_.zero());
    mul_into(a0, b0, z0);
    mul_into(a1, b1, z2);

    std::vector<coeff_type> sa(a0.begin(), a0.end());
    std::vector<coeff_type> sb(b0.begin(), b0.end());
    accumulate(sa, a1);
    accumulate(sb, b1);
    std::vector<coeff_type> z1(2 * m - 1, coeffs_.zero());
    mul_into(sa, sb, z1);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = coeffs_.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = coeffs_.sub(z1[i], z2[i]);

    accumulate(out, z0);
    accumulate(out.subspan(m), z1);
    accumulate(out.subspan(2 * m), z2);
  }

  R coeffs_;
  std::size_t karatsuba_threshold_;
};

}  // namespace ncquo
