#pragma once

#include <cstdint>
#include <string>

#include "ncquo/dense_poly.hpp"
#include "ncquo/prime_field.hpp"
#include "ncquo/skew.hpp"

namespace ncquo {

using LodoCoefficientRing = PolyRing<PrimeField>;
using LodoCoefficient = DensePoly<GFpElement>;
using LodoRing = SkewRing<LodoCoefficientRing>;
using LodoOperator = SkewPoly<LodoCoefficient>;

/// Linear ordinary differential operators F_p[y][Dy; id, d/dy], with the
/// names used when printing.
struct Lodo {
  LodoRing ring;
  std::string variable;
  std::string operator_name;
};

/// Formal derivative d/dy in F_p[y].
LodoCoefficient derivative(const LodoCoefficientRing& ring, const LodoCoefficient& p);

/// Builds F_p[y][Dy]: sigma = id, delta = d/dy. p is trusted to be prime.
Lodo make_lodo(std::uint32_t p, std::string variable = "y", std::string operator_name = "");

/// Human-readable form, e.g. "(44*y^2+50*y+93)*Dy^7 + ... + (y+1)".
std::string to_string(const Lodo& lodo, const LodoOperator& op);
std::string to_string(const LodoCoefficient& p, const std::string& variable);

}  // namespace ncquo
