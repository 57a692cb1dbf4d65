#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "xmodkit/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Crossed modules, categorical groups and extensions of co-type B -> D"};
  app.require_subcommand(1, 1);

  xmodkit::CommandOptions opts;
  std::string out;
  std::pair<char const*, char const*> const commands[] = {
      {"check", "validate a named object"},
      {"reduce", "reduction cocycle of a crossed module"},
      {"cohomology", "cohomology of a module or of a crossed module's (Coker d, Ker d)"},
      {"obstruction", "obstruction class of a zeta-kernel"},
      {"classify", "extensions of a zeta-kernel up to equivalence"},
      {"prolong", "coverings of a pre-prolongation"},
  };
  for (auto const& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("manifest", opts.manifest, "manifest JSON file")->required();
    sub->add_option("--name", opts.name, "object to operate on")->required();
    sub->add_option("--stick", opts.stick, "canonical or seed:<n>");
    sub->add_option("--budget", opts.budget, "log2 of the enumeration budget");
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_option("--threads", opts.threads, "worker threads (output does not depend on it)");
    if (std::string_view(name) == "cohomology")
      sub->add_option("--degree", opts.degree, "cohomological degree 1..3");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : xmodkit::kParseError;
  }
  opts.command = app.get_subcommands().front()->get_name();

  auto const result = xmodkit::run_command(opts);
  std::string const text = xmodkit::render_report(result.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return xmodkit::kParseError;
    }
    f << text;
  }
  return result.exit_code;
}
