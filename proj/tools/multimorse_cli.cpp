// Command-line front end: parses flags into a RunConfig and hands off to run().

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "multimorse/driver.hpp"
#include "multimorse/error.hpp"

namespace {

struct Flags {
  std::string input;
  std::string preset;
  std::string values;
  std::string variant = "strict";
  std::string indexing = "lex";
  std::string order = "generation";
  std::string ring = "z2";
  std::string out;
};

void add_common(CLI::App* sub, Flags& flags, multimorse::RunConfig& config) {
  sub->add_option("mesh", flags.input, "OFF or OBJ triangle mesh")->required()->check(CLI::ExistingFile);
  auto* preset = sub->add_option("--preset", flags.preset, "measuring-function preset (abs-xy)")
                     ->check(CLI::IsMember({"abs-xy"}));
  auto* values = sub->add_option("--values", flags.values, "per-vertex grade file")->check(CLI::ExistingFile);
  preset->excludes(values);
  values->excludes(preset);
  sub->add_option("--variant", flags.variant, "lower link variant")->check(CLI::IsMember({"strict", "weak"}));
  sub->add_option("--indexing", flags.indexing, "vertex indexing")->check(CLI::IsMember({"lex", "kahn"}));
  sub->add_option("--order", flags.order, "reduction order")->check(CLI::IsMember({"generation", "dim-desc"}));
  sub->add_option("--ring", flags.ring, "coefficient ring")->check(CLI::IsMember({"z2", "q", "z"}));
  sub->add_option("--qmax", config.q_max, "highest homology degree checked (default: complex dimension)");
  sub->add_flag("--verify", config.verify, "certify persistence with the homology oracle");
  sub->add_option("--max-cells", config.max_cells, "largest complex certified as a whole")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--samples", config.samples, "vertex-star submeshes certified above the cap");
  sub->add_option("--submesh-cells", config.submesh_cells, "cell budget of each sampled submesh");
  sub->add_option("--seed", config.seed, "seed for submesh sampling");
  sub->add_option("--out", flags.out, "output file");
  sub->add_option("--threads", config.threads, "worker threads for matching")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic Morse matchings and persistence-preserving reduction of multifiltered meshes"};
  app.require_subcommand(1);

  Flags flags;
  multimorse::RunConfig config;
  const std::map<std::string, std::string> help = {
      {"sort", "print vertices in index order"},
      {"match", "compute the acyclic partial matching"},
      {"reduce", "reduce the complex to its critical cells"},
      {"verify", "reduce and certify persistent homology ranks"},
      {"stats", "print the reduction table"},
  };
  for (const auto& [name, text] : help) add_common(app.add_subcommand(name, text), flags, config);

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = multimorse::parse_command(app.get_subcommands().front()->get_name());
    config.input = flags.input;
    if (!flags.preset.empty()) config.preset = flags.preset;
    if (!flags.values.empty()) config.values_path = flags.values;
    if (!config.preset && !config.values_path) config.preset = "abs-xy";
    config.variant = multimorse::parse_variant(flags.variant);
    config.indexing = multimorse::parse_indexing(flags.indexing);
    config.order = multimorse::parse_order(flags.order);
    config.ring = multimorse::parse_ring(flags.ring);
    if (!flags.out.empty()) config.out = flags.out;
  } catch (const multimorse::Error& e) {
    std::cerr << e.what() << '\n';
    return multimorse::kUsageError;
  }
  return multimorse::run(config, std::cout, std::cerr);
}
