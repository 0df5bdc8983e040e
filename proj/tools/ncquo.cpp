#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace ncquo::cli;

  CLI::App app{"Exact quotients over non-commutative coefficient rings"};
  app.require_subcommand(1);

  DivideOptions div;
  auto* divide = app.add_subcommand("divide", "Divide polynomial u by v from a document");
  divide->add_option("input", div.input, "Document holding polys u and v")->required()->check(CLI::ExistingFile);
  divide->add_option("--side", div.side, "left (u = v*q + r) or right (u = q*v + r)")
      ->check(CLI::IsMember({"left", "right"}));
  divide->add_option("--method", div.method, "classical, fast or pseudo")
      ->check(CLI::IsMember({"classical", "fast", "pseudo"}));
  divide->add_option("--refine", div.refine, "Refinement variant for --method fast")->check(CLI::Range(1, 3));
  divide->add_option("-o,--output", div.output, "Write the result here instead of stdout");

  ShinvOptions sh;
  auto* shinv = app.add_subcommand("shinv", "Whole shifted inverse x^h quo v");
  shinv->set_help_flag("--help", "Print this help message and exit");
  shinv->add_option("input", sh.input, "Document holding poly v")->required()->check(CLI::ExistingFile);
  shinv->add_option("--h", sh.h, "Shift h")->required()->check(CLI::NonNegativeNumber);
  shinv->add_option("--refine", sh.refine, "Refinement variant")->check(CLI::Range(1, 3));
  shinv->add_flag("--trace", sh.trace, "Record the per-iteration accuracy, length, growth and prefix drop");
  shinv->add_option("-o,--output", sh.output, "Write the result here instead of stdout");

  BenchOptions bo;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "Operation counts of classical and fast division as CSV");
  bench->add_option("--degrees", bo.degrees, "Quotient degrees N (u has degree 2N, v degree N)")->delimiter(',');
  bench->add_option("--ring", bo.ring, "gfp:P or matrix:N:P");
  bench->add_option("--repeat", bo.repeat, "Runs per instance; the fastest is reported");
  bench->add_option("--seed", bo.seed, "Instance seed");
  bench->add_flag("--no-timing", no_timing, "Report nanos as 0 so output is reproducible byte for byte");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Random dividend/divisor document");
  generate->add_option("--ring", gen.ring, "gfp:P, matrix:N:P or polyring:P");
  generate->add_option("--deg-u", gen.deg_u, "Degree of u")->required();
  generate->add_option("--deg-v", gen.deg_v, "Degree of v (its leading coefficient is a unit)")->required();
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("-o,--output", gen.output, "Write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  if (*divide) return run_divide(div, std::cout, std::cerr);
  if (*shinv) return run_shinv(sh, std::cout, std::cerr);
  if (*bench) {
    bo.timing = !no_timing;
    return run_bench(bo, std::cout, std::cerr);
  }
  return run_generate(gen, std::cout, std::cerr);
}
