#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ncquo/dense_poly.hpp"
#include "ncquo/errors.hpp"
#include "ncquo/matrix.hpp"
#include "ncquo/prime_field.hpp"

// Seeded instance generators shared by the bench command, the fixture
// generator and the test suites. Values are drawn as `rng() % p` rather
// than through <random> distributions so that a given seed yields the same
// instance with every standard library.

namespace ncquo {

using Rng = std::mt19937_64;

inline GFpElement random_element(const PrimeField& f, Rng& rng) {
  return GFpElement{static_cast<std::uint32_t>(rng() % f.modulus())};
}

template <Ring Base>
SquareMatrix<element_t<Base>> random_element(const MatrixRing<Base>& m, Rng& rng) {
  std::vector<element_t<Base>> entries;
  entries.reserve(m.dimension() * m.dimension());
  for (std::size_t i = 0; i < m.dimension() * m.dimension(); ++i) entries.push_back(random_element(m.base(), rng));
  return m.from_entries(std::move(entries));
}

/// Random polynomial of degree < `max_prec` (possibly zero).
template <Ring R>
DensePoly<element_t<R>> random_element(const PolyRing<R>& ring, Rng& rng, std::size_t max_prec = 4) {
  std::vector<element_t<R>> c;
  const std::size_t n = rng() % (max_prec + 1);
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_element(ring.coefficient_ring(), rng));
  return ring.from_coeffs(std::move(c));
}

/// Random element that has a two-sided inverse (rejection sampling).
template <class R>
element_t<R> random_unit(const R& ring, Rng& rng) {
  for (;;) {
    auto a = random_element(ring, rng);
    if (ring.is_zero(a)) continue;
    try {
      ring.inv(a);
      return a;
    } catch (const NotInvertible&) {
    }
  }
}

/// Random polynomial of exact degree `deg`; the leading coefficient is a
/// unit when `unit_leading` is set and merely nonzero otherwise.
template <Ring R>
DensePoly<element_t<R>> random_poly(const PolyRing<R>& ring, std::size_t deg, Rng& rng, bool unit_leading = true) {
  const R& cr = ring.coefficient_ring();
  std::vector<element_t<R>> c;
  c.reserve(deg + 1);
  for (std::size_t i = 0; i < deg; ++i) c.push_back(random_element(cr, rng));
  if (unit_leading) {
    c.push_back(random_unit(cr, rng));
  } else {
    auto lc = random_element(cr, rng);
    while (cr.is_zero(lc)) lc = random_element(cr, rng);
    c.push_back(lc);
  }
  return ring.from_coeffs(std::move(c));
}

}  // namespace ncquo
