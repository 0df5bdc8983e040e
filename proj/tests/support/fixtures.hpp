#pragma once

#include <filesystem>
#include <string>

#include "cli/convert.hpp"
#include "cli/document.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return NCQUO_FIXTURE_DIR; }

inline ncquo::cli::PolyDocument load(const std::string& relative) {
  return ncquo::cli::load_document(dir() / relative);
}

inline ncquo::cli::MatrixPolyRing matrix_ring() {
  return ncquo::cli::MatrixPolyRing(ncquo::MatrixRing<ncquo::PrimeField>(ncquo::PrimeField(127), 3));
}

inline auto matrix_poly(const ncquo::cli::MatrixPolyRing& ring, const std::string& file, const std::string& name) {
  return ncquo::cli::to_poly(ring, ncquo::cli::require_poly(load(file), name));
}

}  // namespace fixtures
