#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ncquo::cli {

/// Malformed input: bad JSON, unknown ring, wrong shapes, values out of
/// range. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Gfp, Matrix, PolyRing, Lodo };

std::string_view to_string(RingKind kind) noexcept;
RingKind ring_kind_from_string(std::string_view s);

/// Which coefficient ring the payload lives in.
///
///   gfp      : GF(p)[x]
///   matrix   : (GF(p)^{n x n})[x]
///   polyring : (GF(p)[y])[x], x central
///   lodo     : GF(p)[y][Dy; id, d/dy]
struct RingDescriptor {
  RingKind kind = RingKind::Gfp;
  std::uint32_t modulus = 2;
  std::size_t dimension = 1;             // matrix only
  std::string variable = "x";            // main variable (operator name for lodo)
  std::string coefficient_variable = "y";  // polyring and lodo only

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// One coefficient, flattened: [c] for gfp, the n*n entries row-major for
/// matrix, and little-endian coefficients in y for polyring/lodo.
using FlatCoefficient = std::vector<std::uint32_t>;
/// Little-endian in the main variable.
using FlatPoly = std::vector<FlatCoefficient>;

struct PolyDocument {
  RingDescriptor ring;
  std::map<std::string, FlatPoly> polys;
  nlohmann::json attributes = nlohmann::json::object();

  friend bool operator==(const PolyDocument&, const PolyDocument&) = default;
};

/// Parses and validates; throws ParseError.
PolyDocument parse_document(std::string_view text);
PolyDocument load_document(const std::filesystem::path& path);

/// Canonical text form: one coefficient per line, keys in fixed order.
std::string emit_document(const PolyDocument& doc);

const FlatPoly& require_poly(const PolyDocument& doc, const std::string& name);

}  // namespace ncquo::cli
