#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using maxmin::cli::Options;
  CLI::App app{"Exact max-min eigenspaces, Kleene stars, Bellman equations and coverings"};
  app.require_subcommand(1);

  Options opts;
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"star", "metric matrix A+ and Kleene star A*"},
      {"bellman", "least solution and full solution set of x = A x + b"},
      {"cover", "minimal coverings for A z + b = lambda 1 (entries <= lambda)"},
      {"eigen", "lambda-eigenspace pieces: pure, background and (K,L)"},
      {"verify", "check A x = lambda x row by row"},
      {"plot-data", "bounding boxes and sampled points of every piece (n = 2 or 3)"},
      {"validate", "cross-validate the eigenspace against a brute-force grid"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", opts.input, "problem file (JSON); '-' for stdin")->capture_default_str();
    sub->add_option("--lambda", opts.lambda, "eigenvalue / right-hand level as a decimal");
    sub->add_option("--out", opts.out, "write the result to this file");
    sub->add_option("--seed", opts.seed, "seed for sampled members")->capture_default_str();
    sub->add_option("--samples", opts.samples, "sampled members per piece")->capture_default_str();
    sub->add_option("--grid-cap", opts.grid_cap, "maximum oracle grid size")->capture_default_str();
    if (std::string(s.name) == "eigen") {
      sub->add_flag("--all", opts.all, "every piece (default)");
      sub->add_flag("--pure", opts.pure, "pure eigenvectors only");
      sub->add_flag("--background", opts.background, "background eigenvectors only");
      sub->add_option("--partition", opts.partition, "K as a comma-separated list of 1-based indices");
    }
    if (std::string(s.name) == "validate") {
      sub->add_option("--description", opts.description, "validate this description file instead");
    }
    sub->callback([&opts, name = std::string(s.name)] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : maxmin::cli::kInputError;
  }
  return maxmin::cli::run(opts, std::cin, std::cout, std::cerr);
}
