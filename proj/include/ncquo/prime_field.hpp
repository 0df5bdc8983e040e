#pragma once

#include <compare>
#include <cstdint>
#include <memory>

#include "ncquo/ring.hpp"

namespace ncquo {

/// Residue class in GF(p); always reduced to [0, p).
class GFpElement {
 public:
  constexpr GFpElement() = default;
  constexpr explicit GFpElement(std::uint32_t value) noexcept : value_(value) {}

  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr bool operator==(GFpElement, GFpElement) = default;
  friend constexpr auto operator<=>(GFpElement, GFpElement) = default;

 private:
  std::uint32_t value_ = 0;
};

/// The prime field GF(p), p < 2^31.
///
/// The modulus is trusted to be prime; nothing checks it. Every `mul`
/// bumps the shared multiplication counter by one.
class PrimeField {
 public:
  using element_type = GFpElement;

  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return p_; }

  /// Reduces any integer (including negatives) into the field.
  GFpElement element(std::int64_t x) const noexcept;

  GFpElement zero() const noexcept { return GFpElement{0}; }
  GFpElement one() const noexcept { return GFpElement{1}; }

  GFpElement add(GFpElement a, GFpElement b) const noexcept {
    std::uint32_t s = a.value() + b.value();
    return GFpElement{s >= p_ ? s - p_ : s};
  }
  GFpElement sub(GFpElement a, GFpElement b) const noexcept {
    return GFpElement{a.value() >= b.value() ? a.value() - b.value() : a.value() + p_ - b.value()};
  }
  GFpElement neg(GFpElement a) const noexcept {
    return GFpElement{a.value() == 0 ? 0 : p_ - a.value()};
  }
  GFpElement mul(GFpElement a, GFpElement b) const noexcept {
    counter_->add();
    return GFpElement{static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value()) * b.value() % p_)};
  }

  /// Throws ZeroDivision for 0.
  GFpElement inv(GFpElement a) const;

  bool equal(GFpElement a, GFpElement b) const noexcept { return a == b; }
  bool is_zero(GFpElement a) const noexcept { return a.value() == 0; }
  bool is_commutative() const noexcept { return true; }

  std::uint64_t mul_count() const noexcept { return counter_->value(); }
  const std::shared_ptr<MulCounter>& counter() const noexcept { return counter_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<MulCounter> counter_;
};

}  // namespace ncquo
