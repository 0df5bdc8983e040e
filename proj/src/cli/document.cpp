#include "cli/document.hpp"

#include <fstream>
#include <sstream>

namespace ncquo::cli {

using nlohmann::json;

namespace {

std::uint32_t read_residue(const json& j, std::uint32_t p, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v >= p) {
    throw ParseError(where + ": " + std::to_string(v) + " is not reduced mod " + std::to_string(p));
  }
  return static_cast<std::uint32_t>(v);
}

FlatCoefficient read_coefficient(const json& j, const RingDescriptor& ring, const std::string& where) {
  FlatCoefficient c;
  switch (ring.kind) {
    case RingKind::Gfp:
      c.push_back(read_residue(j, ring.modulus, where));
      break;
    case RingKind::Matrix: {
      const std::size_t n = ring.dimension;
      if (!j.is_array() || j.size() != n) {
        throw ParseError(where + ": expected " + std::to_string(n) + " matrix rows");
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != n) {
          throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
          c.push_back(read_residue(row[k], ring.modulus, where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
        }
      }
      break;
    }
    case RingKind::PolyRing:
    case RingKind::Lodo:
      if (!j.is_array()) throw ParseError(where + ": expected a coefficient list in " + ring.coefficient_variable);
      for (std::size_t i = 0; i < j.size(); ++i) {
        c.push_back(read_residue(j[i], ring.modulus, where + "[" + std::to_string(i) + "]"));
      }
      break;
  }
  return c;
}

json coefficient_json(const FlatCoefficient& c, const RingDescriptor& ring) {
  switch (ring.kind) {
    case RingKind::Gfp:
      return c.empty() ? json(0) : json(c[0]);
    case RingKind::Matrix: {
      json rows = json::array();
      for (std::size_t i = 0; i < ring.dimension; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < ring.dimension; ++k) row.push_back(c.at(i * ring.dimension + k));
        rows.push_back(std::move(row));
      }
      return rows;
    }
    case RingKind::PolyRing:
    case RingKind::Lodo:
      return json(c);
  }
  return json();
}

RingDescriptor read_ring(const json& j) {
  if (!j.is_object()) throw ParseError("\"ring\" must be an object");
  RingDescriptor r;
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("ring.kind is required");
  r.kind = ring_kind_from_string(j["kind"].get<std::string>());
  if (!j.contains("modulus") || !j["modulus"].is_number_unsigned()) {
    throw ParseError("ring.modulus must be a positive integer");
  }
  const auto p = j["modulus"].get<std::uint64_t>();
  if (p < 2 || p >= (1ull << 31)) throw ParseError("ring.modulus must lie in [2, 2^31)");
  r.modulus = static_cast<std::uint32_t>(p);
  if (r.kind == RingKind::Matrix) {
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned() || j["dimension"].get<std::uint64_t>() == 0) {
      throw ParseError("ring.dimension must be a positive integer for matrix rings");
    }
    r.dimension = j["dimension"].get<std::size_t>();
  }
  if (j.contains("coefficient_variable")) r.coefficient_variable = j["coefficient_variable"].get<std::string>();
  if (j.contains("variable")) {
    r.variable = j["variable"].get<std::string>();
  } else if (r.kind == RingKind::Lodo) {
    r.variable = "D" + r.coefficient_variable;
  }
  return r;
}

std::string indent_tail(const std::string& s, const std::string& pad) {
  std::string out;
  for (char ch : s) {
    out += ch;
    if (ch == '\n') out += pad;
  }
  return out;
}

}  // namespace

std::string_view to_string(RingKind kind) noexcept {
  switch (kind) {
    case RingKind::Gfp: return "gfp";
    case RingKind::Matrix: return "matrix";
    case RingKind::PolyRing: return "polyring";
    case RingKind::Lodo: return "lodo";
  }
  return "?";
}

RingKind ring_kind_from_string(std::string_view s) {
  if (s == "gfp") return RingKind::Gfp;
  if (s == "matrix") return RingKind::Matrix;
  if (s == "polyring") return RingKind::PolyRing;
  if (s == "lodo") return RingKind::Lodo;
  throw ParseError("unknown ring kind \"" + std::string(s) + "\"");
}

PolyDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    if (!j.contains("ring")) throw ParseError("document has no \"ring\"");
    PolyDocument doc;
    doc.ring = read_ring(j["ring"]);
    if (j.contains("polys")) {
      const auto& polys = j["polys"];
      if (!polys.is_object()) throw ParseError("\"polys\" must be an object");
      for (const auto& [name, arr] : polys.items()) {
        if (!arr.is_array()) throw ParseError("poly \"" + name + "\" must be an array of coefficients");
        FlatPoly p;
        for (std::size_t i = 0; i < arr.size(); ++i) {
          p.push_back(read_coefficient(arr[i], doc.ring, name + "[" + std::to_string(i) + "]"));
        }
        doc.polys.emplace(name, std::move(p));
      }
    }
    if (j.contains("attributes")) {
      if (!j["attributes"].is_object()) throw ParseError("\"attributes\" must be an object");
      doc.attributes = j["attributes"];
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

PolyDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string emit_document(const PolyDocument& doc) {
  const auto& r = doc.ring;
  std::ostringstream os;
  os << "{\n  \"ring\": {\"kind\": " << json(std::string(to_string(r.kind))).dump()
     << ", \"modulus\": " << r.modulus;
  if (r.kind == RingKind::Matrix) os << ", \"dimension\": " << r.dimension;
  os << ", \"variable\": " << json(r.variable).dump();
  if (r.kind == RingKind::PolyRing || r.kind == RingKind::Lodo) {
    os << ", \"coefficient_variable\": " << json(r.coefficient_variable).dump();
  }
  os << "},\n  \"polys\": {";
  bool first_poly = true;
  for (const auto& [name, p] : doc.polys) {
    os << (first_poly ? "\n" : ",\n") << "    " << json(name).dump() << ": [";
    first_poly = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      os << (i == 0 ? "\n" : ",\n") << "      " << coefficient_json(p[i], r).dump();
    }
    os << (p.empty() ? "]" : "\n    ]");
  }
  os << (doc.polys.empty() ? "}" : "\n  }");
  if (!doc.attributes.empty()) {
    os << ",\n  \"attributes\": " << indent_tail(doc.attributes.dump(2), "  ");
  }
  os << "\n}\n";
  return os.str();
}

const FlatPoly& require_poly(const PolyDocument& doc, const std::string& name) {
  const auto it = doc.polys.find(name);
  if (it == doc.polys.end()) throw ParseError("document has no poly named \"" + name + "\"");
  return it->second;
}

}  // namespace ncquo::cli
