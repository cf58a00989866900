#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forge/cli/commands.hpp"

using namespace forge::cli;

int main(int argc, char** argv) {
  CLI::App app{"Build and verify the chiral 4-polytope family of the 4-cube"};
  app.require_subcommand(1);

  Options opts;
  std::string seed = "lex";
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opts.out, "Output path (stdout when omitted)");
  app.add_option("--cap", opts.cap, "Closure and coset enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed-labels", seed, "Label assignment policy")->check(CLI::IsMember({"lex", "table"}));

  std::string target;
  auto* build = app.add_subcommand("build", "Build one object and print its certificate");
  build->add_option("target", target, "cube|hemi|map|roli|enantiomorph|cover|mk")->required();

  bool all = false;
  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_flag("--all", all, "Run every claim");
  verify->add_option("ids", ids, "Claim ids");

  std::string preset_name = "coxeter";
  double scale = 100.0;
  std::vector<int> colours;
  bool labelled_only = false;
  auto* project = app.add_subcommand("project", "Render a plane projection of the 4-cube as SVG");
  project->add_option("--preset", preset_name, "coxeter|coxeter-complement|lambda")
      ->check(CLI::IsMember({"coxeter", "coxeter-complement", "lambda"}));
  project->add_option("--scale", scale, "Pixels per unit");
  project->add_option("--colours", colours, "Edge directions to draw (1-4)");
  project->add_flag("--labelled-only", labelled_only, "Draw only the 8 labelled vertices");

  for (auto* sub : {build, verify, project}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  opts.seed = seed == "table" ? forge::LabelSeed::Table : forge::LabelSeed::Lex;

  if (*build) return cmd_build(target, opts, std::cout, std::cerr);
  if (*verify) return cmd_verify(ids, all, opts, std::cout, std::cerr);
  ProjectionSpec spec = *preset(preset_name);
  spec.scale = scale;
  if (!colours.empty()) spec.colours = colours;
  spec.labelled_only = labelled_only;
  return cmd_project(spec, opts, std::cout, std::cerr);
}
