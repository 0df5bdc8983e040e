#include "cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cli/convert.hpp"
#include "cli/document.hpp"
#include "ncquo/division.hpp"
#include "ncquo/errors.hpp"
#include "ncquo/lodo.hpp"
#include "ncquo/random.hpp"
#include "ncquo/shinv.hpp"
#include "ncquo/skew.hpp"

namespace ncquo::cli {

using nlohmann::json;

namespace {

/// Thrown for flag combinations that make no sense; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Orientation parse_side(const std::string& s) {
  if (s == "left") return Orientation::Left;
  if (s == "right") return Orientation::Right;
  throw UsageError("--side must be left or right, got \"" + s + "\"");
}

RefineMethod parse_refine(int r) {
  if (r < 1 || r > 3) throw UsageError("--refine must be 1, 2 or 3");
  return static_cast<RefineMethod>(r);
}

void write_output(const std::string& text, const std::optional<std::filesystem::path>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw UsageError("cannot write " + path->string());
  f << text;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kAlgebra;
  }
}

/// Calls f(ring) with the typed polynomial ring named by the descriptor.
template <class F>
auto with_poly_ring(const RingDescriptor& d, F&& f) {
  const PrimeField field(d.modulus);
  switch (d.kind) {
    case RingKind::Gfp:
      return f(GfpPolyRing(field));
    case RingKind::Matrix:
      return f(MatrixPolyRing(MatrixRing<PrimeField>(field, d.dimension)));
    case RingKind::PolyRing:
      return f(NestedPolyRing(PolyRing<PrimeField>(field)));
    case RingKind::Lodo:
      break;
  }
  throw UsageError("not a commutative-variable ring");
}

template <class P, class Ring>
bool remainder_small(const Ring& ring, const P& r, const P& v) {
  return ring.is_zero(r) || *ring.degree(r) < *ring.degree(v);
}

json trace_json(const IterationTrace& t) {
  json records = json::array();
  for (const auto& r : t.iterations) {
    records.push_back({{"accurate", r.accurate}, {"prec", r.prec}, {"grow", r.grow}, {"prefix_drop", r.prefix_drop}});
  }
  return records;
}

PolyDocument divide_poly(const PolyDocument& in, const DivideOptions& opts, bool& ok) {
  const Orientation o = parse_side(opts.side);
  PolyDocument res{in.ring, {}, json::object()};
  res.attributes["side"] = opts.side;
  res.attributes["method"] = opts.method;
  with_poly_ring(in.ring, [&](const auto& ring) {
    const auto u = to_poly(ring, require_poly(in, "u"));
    const auto v = to_poly(ring, require_poly(in, "v"));
    const auto& cr = ring.coefficient_ring();
    if (opts.method == "classical" || opts.method == "fast") {
      QuoRem<std::decay_t<decltype(u)>> qr;
      if (opts.method == "classical") {
        qr = classical_div(ring, u, v, o);
      } else {
        ShinvConfig cfg;
        cfg.refine = parse_refine(opts.refine);
        res.attributes["refine"] = opts.refine;
        qr = quo(ring, u, v, o, cfg);
      }
      const auto back = ring.add(ring.mul(qr.quotient, v, o), qr.remainder);
      ok = ring.equal(back, u) && remainder_small(ring, qr.remainder, v);
      res.polys["q"] = to_flat(qr.quotient);
      res.polys["r"] = to_flat(qr.remainder);
    } else if (opts.method == "pseudo") {
      const auto pr = pseudo_div(ring, u, v, o);
      // Left: m*u = v*q + r.  Right: u*m = q*v + r.
      const auto scaled = o == Orientation::Left ? ring.scale_left(pr.multiplier, u) : ring.scale_right(u, pr.multiplier);
      const auto back = ring.add(ring.mul(pr.quotient, v, o), pr.remainder);
      ok = ring.equal(back, scaled) && remainder_small(ring, pr.remainder, v);
      res.polys["q"] = to_flat(pr.quotient);
      res.polys["r"] = to_flat(pr.remainder);
      res.polys["m"] = FlatPoly{from_coefficient(pr.multiplier)};
      (void)cr;
    } else {
      throw UsageError("--method must be classical, fast or pseudo");
    }
    return 0;
  });
  return res;
}

PolyDocument divide_lodo(const PolyDocument& in, const DivideOptions& opts, bool& ok) {
  const Orientation o = parse_side(opts.side);
  const Lodo lodo = make_lodo(in.ring.modulus, in.ring.coefficient_variable, in.ring.variable);
  const auto& ring = lodo.ring;
  const auto u = to_skew(ring, require_poly(in, "u"));
  const auto v = to_skew(ring, require_poly(in, "v"));
  QuoRem<LodoOperator> qr;
  if (opts.method == "classical") {
    qr = skew_classical_div(ring, u, v, o);
  } else if (opts.method == "fast") {
    if (o != Orientation::Right) throw UsageError("operators support --method fast only with --side right");
    qr = rquo_via_lshinv(ring, u, v);
  } else if (opts.method == "pseudo") {
    throw UsageError("operators do not support --method pseudo");
  } else {
    throw UsageError("--method must be classical, fast or pseudo");
  }
  const auto back = ring.add(ring.mul(qr.quotient, v, o), qr.remainder);
  ok = ring.equal(back, u) && (ring.is_zero(qr.remainder) || *ring.degree(qr.remainder) < *ring.degree(v));
  PolyDocument res{in.ring, {}, json::object()};
  res.attributes["side"] = opts.side;
  res.attributes["method"] = opts.method;
  res.polys["q"] = to_flat(qr.quotient);
  res.polys["r"] = to_flat(qr.remainder);
  return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::uint32_t parse_u32(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size() || v > 0xffffffffull) throw std::out_of_range(what);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + what + " \"" + s + "\"");
  }
}

}  // namespace

RingDescriptor parse_ring_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  RingDescriptor d;
  if (parts.size() == 2 && parts[0] == "gfp") {
    d.kind = RingKind::Gfp;
    d.modulus = parse_u32(parts[1], "modulus");
  } else if (parts.size() == 3 && parts[0] == "matrix") {
    d.kind = RingKind::Matrix;
    d.dimension = parse_u32(parts[1], "dimension");
    d.modulus = parse_u32(parts[2], "modulus");
    if (d.dimension == 0) throw UsageError("matrix dimension must be positive");
  } else if (parts.size() == 2 && parts[0] == "polyring") {
    d.kind = RingKind::PolyRing;
    d.modulus = parse_u32(parts[1], "modulus");
  } else {
    throw UsageError("ring spec must be gfp:P, matrix:N:P or polyring:P, got \"" + spec + "\"");
  }
  if (d.modulus < 2 || d.modulus >= (1u << 31)) throw UsageError("modulus must lie in [2, 2^31)");
  return d;
}

int run_divide(const DivideOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_document(opts.input);
    bool ok = false;
    auto res = in.ring.kind == RingKind::Lodo ? divide_lodo(in, opts, ok) : divide_poly(in, opts, ok);
    if (!ok) {
      err << "error: residual check failed; no quotient emitted\n";
      return exit_code::kResidualFailure;
    }
    res.attributes["residual_ok"] = true;
    write_output(emit_document(res), opts.output, out);
    return exit_code::kOk;
  });
}

int run_shinv(const ShinvOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto in = load_document(opts.input);
    PolyDocument res{in.ring, {}, json::object()};
    res.attributes["h"] = opts.h;
    if (in.ring.kind == RingKind::Lodo) {
      const Lodo lodo = make_lodo(in.ring.modulus, in.ring.coefficient_variable, in.ring.variable);
      const auto v = to_skew(lodo.ring, require_poly(in, "v"));
      LshinvTrace trace;
      res.polys["shinv"] = to_flat(lshinv(lodo.ring, v, opts.h, &trace));
      if (opts.trace) {
        json degs = json::array();
        for (const auto& d : trace.residual_degrees) degs.push_back(d ? json(*d) : json(nullptr));
        res.attributes["residual_degrees"] = degs;
      }
    } else {
      ShinvConfig cfg;
      cfg.refine = parse_refine(opts.refine);
      res.attributes["refine"] = opts.refine;
      with_poly_ring(in.ring, [&](const auto& ring) {
        const auto v = to_poly(ring, require_poly(in, "v"));
        IterationTrace trace;
        res.polys["shinv"] = to_flat(shinv(ring, v, opts.h, cfg, Orientation::Right, &trace));
        if (opts.trace) {
          res.attributes["trace"] = trace_json(trace);
          res.attributes["guard_steps"] = trace.guard_steps;
        }
        return 0;
      });
    }
    write_output(emit_document(res), opts.output, out);
    return exit_code::kOk;
  });
}

int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ring_desc = parse_ring_spec(opts.ring);
    PolyDocument doc{ring_desc, {}, json::object()};
    doc.attributes["seed"] = opts.seed;
    with_poly_ring(ring_desc, [&](const auto& ring) {
      Rng rng(opts.seed);
      doc.polys["u"] = to_flat(random_poly(ring, opts.deg_u, rng, false));
      doc.polys["v"] = to_flat(random_poly(ring, opts.deg_v, rng, true));
      return 0;
    });
    write_output(emit_document(doc), opts.output, out);
    return exit_code::kOk;
  });
}

int run_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << bench_csv(bench_rows(opts));
    return exit_code::kOk;
  });
}

}  // namespace ncquo::cli
