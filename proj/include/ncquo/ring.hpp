#pragma once

#include <atomic>
#include <concepts>
#include <cstdint>
#include <memory>

namespace ncquo {

/// Shared, thread-safe tally of base-field multiplications.
///
/// Ring contexts hold a shared_ptr to one of these; copies of a context
/// therefore accumulate into the same tally. Increments are relaxed since
/// only the final total is ever observed.
class MulCounter {
 public:
  void add(std::uint64_t n = 1) noexcept { count_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t value() const noexcept { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

/// Coefficient ring contract.
///
/// A ring is a context object; its elements are plain values that only
/// make sense together with the context that produced them. `mul` must
/// respect operand order, since none of the algorithms assume
/// commutativity unless `is_commutative()` says so.
template <class R>
concept Ring = std::copy_constructible<R> &&
    requires(const R& ring, const typename R::element_type& a, const typename R::element_type& b) {
      typename R::element_type;
      { ring.zero() } -> std::same_as<typename R::element_type>;
      { ring.one() } -> std::same_as<typename R::element_type>;
      { ring.add(a, b) } -> std::same_as<typename R::element_type>;
      { ring.sub(a, b) } -> std::same_as<typename R::element_type>;
      { ring.neg(a) } -> std::same_as<typename R::element_type>;
      { ring.mul(a, b) } -> std::same_as<typename R::element_type>;
      { ring.inv(a) } -> std::same_as<typename R::element_type>;
      { ring.equal(a, b) } -> std::convertible_to<bool>;
      { ring.is_zero(a) } -> std::convertible_to<bool>;
      { ring.is_commutative() } -> std::convertible_to<bool>;
      { ring.mul_count() } -> std::convertible_to<std::uint64_t>;
    };

template <Ring R>
using element_t = typename R::element_type;

/// Which side the divisor (or shifted inverse) multiplies from.
///
/// Right keeps products as written, a*b. Left swaps them to b*a, so that a
/// single routine computes both u = q*v + r and u = v*q + r.
enum class Orientation { Left, Right };

template <Ring R>
element_t<R> oriented_mul(const R& ring, const element_t<R>& a, const element_t<R>& b,
                          Orientation o) {
  return o == Orientation::Right ? ring.mul(a, b) : ring.mul(b, a);
}

constexpr const char* to_string(Orientation o) noexcept {
  return o == Orientation::Left ? "left" : "right";
}

}  // namespace ncquo
