#include "ncquo/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "ncquo/errors.hpp"

namespace ncquo {

PrimeField::PrimeField(std::uint32_t modulus)
    : p_(modulus), counter_(std::make_shared<MulCounter>()) {
  if (modulus < 2 || modulus >= (1u << 31)) {
    throw std::invalid_argument("prime field modulus must lie in [2, 2^31): " +
                                std::to_string(modulus));
  }
}

GFpElement PrimeField::element(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return GFpElement{static_cast<std::uint32_t>(r)};
}

GFpElement PrimeField::inv(GFpElement a) const {
  if (a.value() == 0) throw ZeroDivision("inverse of 0 in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p); t tracks the Bezout coefficient of a.
  std::int64_t r0 = p_, r1 = a.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw NotInvertible("element shares a factor with the modulus");
  return element(t0);
}

}  // namespace ncquo
