#include "ncquo/lodo.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace ncquo {

LodoCoefficient derivative(const LodoCoefficientRing& ring, const LodoCoefficient& p) {
  const PrimeField& f = ring.coefficient_ring();
  const auto& c = p.coeffs();
  if (c.size() <= 1) return ring.zero();
  std::vector<GFpElement> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out.push_back(f.mul(f.element(static_cast<std::int64_t>(i)), c[i]));
  }
  return ring.from_coeffs(std::move(out));
}

Lodo make_lodo(std::uint32_t p, std::string variable, std::string operator_name) {
  LodoCoefficientRing coeffs{PrimeField{p}};
  auto ore = OrePair<LodoCoefficientRing>::differential(
      [coeffs](const LodoCoefficient& r) { return derivative(coeffs, r); });
  if (operator_name.empty()) operator_name = "D" + variable;
  return {LodoRing{coeffs, std::move(ore)}, std::move(variable), std::move(operator_name)};
}

std::string to_string(const LodoCoefficient& p, const std::string& variable) {
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    const auto v = c[i].value();
    if (v == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v << '*';
    os << variable;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string to_string(const Lodo& lodo, const LodoOperator& op) {
  const auto& c = op.coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].empty()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c[i].coeffs().size() == 1 && c[i].coeffs()[0].value() == 1;
    if (i == 0) {
      os << '(' << to_string(c[i], lodo.variable) << ')';
      continue;
    }
    if (!unit) os << '(' << to_string(c[i], lodo.variable) << ")*";
    os << lodo.operator_name;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace ncquo
