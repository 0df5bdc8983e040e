#pragma once

#include <utility>
#include <vector>

#include "cli/document.hpp"
#include "ncquo/dense_poly.hpp"
#include "ncquo/lodo.hpp"
#include "ncquo/matrix.hpp"
#include "ncquo/prime_field.hpp"
#include "ncquo/skew.hpp"

// Conversions between flattened document payloads and typed ring values.

namespace ncquo::cli {

using GfpPolyRing = PolyRing<PrimeField>;
using MatrixPolyRing = PolyRing<MatrixRing<PrimeField>>;
using NestedPolyRing = PolyRing<PolyRing<PrimeField>>;

inline GFpElement to_coefficient(const PrimeField&, const FlatCoefficient& c) { return GFpElement{c.at(0)}; }
inline SquareMatrix<GFpElement> to_coefficient(const MatrixRing<PrimeField>& m, const FlatCoefficient& c) {
  std::vector<GFpElement> e;
  e.reserve(c.size());
  for (auto x : c) e.emplace_back(x);
  return m.from_entries(std::move(e));
}
inline DensePoly<GFpElement> to_coefficient(const PolyRing<PrimeField>& r, const FlatCoefficient& c) {
  std::vector<GFpElement> e;
  e.reserve(c.size());
  for (auto x : c) e.emplace_back(x);
  return r.from_coeffs(std::move(e));
}

inline FlatCoefficient from_coefficient(const GFpElement& a) { return {a.value()}; }
inline FlatCoefficient from_coefficient(const SquareMatrix<GFpElement>& a) {
  FlatCoefficient c;
  for (const auto& x : a.entries()) c.push_back(x.value());
  return c;
}
inline FlatCoefficient from_coefficient(const DensePoly<GFpElement>& a) {
  FlatCoefficient c;
  for (const auto& x : a.coeffs()) c.push_back(x.value());
  return c;
}

template <Ring R>
DensePoly<element_t<R>> to_poly(const PolyRing<R>& ring, const FlatPoly& p) {
  std::vector<element_t<R>> c;
  c.reserve(p.size());
  for (const auto& x : p) c.push_back(to_coefficient(ring.coefficient_ring(), x));
  return ring.from_coeffs(std::move(c));
}

template <Ring R>
SkewPoly<element_t<R>> to_skew(const SkewRing<R>& ring, const FlatPoly& p) {
  std::vector<element_t<R>> c;
  c.reserve(p.size());
  for (const auto& x : p) c.push_back(to_coefficient(ring.coefficient_ring(), x));
  return ring.from_coeffs(std::move(c));
}

template <class P>
FlatPoly to_flat(const P& p) {
  FlatPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(from_coefficient(c));
  return out;
}

}  // namespace ncquo::cli
