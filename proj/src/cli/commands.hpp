#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/document.hpp"

namespace ncquo::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kResidualFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kAlgebra = 3;
}  // namespace exit_code

struct DivideOptions {
  std::filesystem::path input;
  std::string side = "right";        // left | right
  std::string method = "classical";  // classical | fast | pseudo
  int refine = 3;
  std::optional<std::filesystem::path> output;
};

struct ShinvOptions {
  std::filesystem::path input;
  long h = 0;
  int refine = 3;
  bool trace = false;
  std::optional<std::filesystem::path> output;
};

/// `ring` is gfp:P, matrix:N:P or polyring:P.
struct GenerateOptions {
  std::string ring = "gfp:127";
  std::size_t deg_u = 0;
  std::size_t deg_v = 0;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output;
};

/// `ring` is gfp:P or matrix:N:P.
struct BenchOptions {
  std::vector<std::size_t> degrees{64, 128, 256, 512};
  std::string ring = "gfp:127";
  std::size_t repeat = 1;
  std::uint64_t seed = 1;
  bool timing = true;
};

// Each command writes its document (or CSV) to `out` unless an output file
// is given, diagnostics to `err`, and returns an exit code.
int run_divide(const DivideOptions& opts, std::ostream& out, std::ostream& err);
int run_shinv(const ShinvOptions& opts, std::ostream& out, std::ostream& err);
int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// Parses gfp:P, matrix:N:P or polyring:P; throws on anything else.
RingDescriptor parse_ring_spec(const std::string& spec);

/// Benchmark rows in the order they are printed.
struct BenchRow {
  std::string method;
  std::size_t n;
  std::size_t iterations;
  std::uint64_t mul_count;
  std::uint64_t nanos;
};
std::vector<BenchRow> bench_rows(const BenchOptions& opts);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace ncquo::cli
