#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tnorm/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace tnorm::cli;

  CLI::App app{"Trace norm on H2 of pseudo-Anosov mapping tori"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string subcommand;
  Options opt;
  double tol = 0;
  long box = 0, levels = 0, stage = 0;
  std::string element, klass, fiber, vec;

  std::string names;
  for (auto n : kSubcommands) names += (names.empty() ? "" : ", ") + std::string(n);
  app.add_option("subcommand", subcommand, "One of: " + names)->required();
  app.add_option("--input", opt.input, "Input document")->required();
  auto* tol_opt = app.add_option("--tol", tol, "Numerical tolerance (default 1e-12; 1e-8 for trace)");
  app.add_option("--max-iter", opt.max_iter, "Power iteration cap")->capture_default_str();
  app.add_option("--prime-budget", opt.prime_budget, "Reduction primes for irreducibility")->capture_default_str();
  auto* element_opt = app.add_option("--element", element, "Order element [a0,...]");
  auto* class_opt = app.add_option("--class", klass, "Homology class [z1,...]");
  auto* fiber_opt = app.add_option("--fiber-class", fiber, "Fiber class [z1,...]");
  auto* box_opt = app.add_option("--box", box, "Lattice box radius");
  auto* levels_opt = app.add_option("--levels", levels, "Bratteli floors");
  auto* stage_opt = app.add_option("--stage", stage, "Dimension-group stage");
  auto* vector_opt = app.add_option("--vector", vec, "Dimension-group vector [v1,...]");
  app.add_option("--format", opt.format, "text or dot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    std::cout << "error = UsageError\n";
    return kParseError;
  }

  if (*tol_opt) opt.tol = tol;
  if (*element_opt) opt.element = element;
  if (*class_opt) opt.klass = klass;
  if (*fiber_opt) opt.fiber_class = fiber;
  if (*box_opt) opt.box = box;
  if (*levels_opt) opt.levels = levels;
  if (*stage_opt) opt.stage = stage;
  if (*vector_opt) opt.vector = vec;

  CommandResult r = run_file(subcommand, opt);
  std::cout << r.out;
  std::cerr << r.err;
  if (r.exit_code == kParseError && !is_subcommand(subcommand)) std::cerr << app.help();
  return r.exit_code;
}
