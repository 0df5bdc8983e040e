#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cli/commands.hpp"
#include "cli/convert.hpp"
#include "ncquo/division.hpp"
#include "ncquo/random.hpp"
#include "ncquo/shinv.hpp"

namespace ncquo::cli {

namespace {

// Instances are u of degree 2N and v of degree N, so every method produces
// a quotient with N + 1 coefficients.
template <class PR>
void bench_ring(const PR& ring, const BenchOptions& opts, std::vector<BenchRow>& rows) {
  using Clock = std::chrono::steady_clock;
  const auto& cr = ring.coefficient_ring();
  for (const std::size_t n : opts.degrees) {
    Rng rng(opts.seed * 1000003u + n);
    const auto u = random_poly(ring, 2 * n, rng, false);
    const auto v = random_poly(ring, n, rng, true);

    auto measure = [&](const std::string& method, auto&& run) {
      BenchRow row{method, n, 0, 0, std::numeric_limits<std::uint64_t>::max()};
      for (std::size_t rep = 0; rep < std::max<std::size_t>(opts.repeat, 1); ++rep) {
        const auto before = cr.mul_count();
        const auto t0 = Clock::now();
        row.iterations = run();
        const auto t1 = Clock::now();
        row.mul_count = cr.mul_count() - before;
        const auto ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        row.nanos = std::min(row.nanos, ns);
      }
      if (!opts.timing) row.nanos = 0;
      rows.push_back(row);
    };

    measure("classical", [&] {
      const auto qr = classical_div(ring, u, v, Orientation::Right);
      return ring.prec(qr.quotient);
    });
    for (int r = 1; r <= 3; ++r) {
      measure("refine" + std::to_string(r), [&] {
        ShinvConfig cfg;
        cfg.refine = static_cast<RefineMethod>(r);
        IterationTrace trace;
        quo(ring, u, v, Orientation::Right, cfg, &trace);
        return trace.loop_count();
      });
    }
  }
}

}  // namespace

std::vector<BenchRow> bench_rows(const BenchOptions& opts) {
  const auto d = parse_ring_spec(opts.ring);
  std::vector<BenchRow> rows;
  const PrimeField field(d.modulus);
  switch (d.kind) {
    case RingKind::Gfp:
      bench_ring(GfpPolyRing(field), opts, rows);
      break;
    case RingKind::Matrix:
      bench_ring(MatrixPolyRing(MatrixRing<PrimeField>(field, d.dimension)), opts, rows);
      break;
    default:
      throw std::invalid_argument("bench supports gfp:P and matrix:N:P rings");
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "method,N,iterations,mulCount,nanos\n";
  for (const auto& r : rows) {
    os << r.method << ',' << r.n << ',' << r.iterations << ',' << r.mul_count << ',' << r.nanos << '\n';
  }
  return os.str();
}

}  // namespace ncquo::cli
