// Command-line front end: validate | flow <config> | yamabe <config> |
// eigen <config> | report <dir>.

#include <CLI11.hpp>
#include <iostream>

#include "yamabe/cli/commands.hpp"
#include "yamabe/cli/config.hpp"

using namespace yamabe::cli;

int main(int argc, char** argv) {
  CLI::App app{"Normalized Yamabe flow and Yamabe-type diagnostics on the compactified "
               "Eguchi-Hanson orbifold"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand

  CommonOptions opts;
  std::string output_dir;
  bool dump_default = false;
  app.add_option("--output-dir", output_dir, "Directory for artifacts (overrides [output] dir)");
  app.add_option("--seed", opts.seed, "Seed for the [init] noise perturbation");
  app.add_flag("--quiet", opts.quiet, "Suppress output on stdout");
  app.add_flag("--dump-default-config", dump_default, "Print the default configuration and exit");

  double tolerance_scale = 1.0;
  auto* validate = app.add_subcommand("validate", "Run the closed-form check suite");
  validate->add_option("--tolerance-scale", tolerance_scale, "Multiply every check tolerance");

  std::string config_path, run_dir;
  auto* flow = app.add_subcommand("flow", "Integrate the reduced flow");
  flow->add_option("config", config_path, "Scenario config")->required();
  auto* yamabe = app.add_subcommand("yamabe", "Minimize the Yamabe quotient");
  yamabe->add_option("config", config_path, "Scenario config")->required();
  auto* eigen = app.add_subcommand("eigen", "First nonzero Laplace eigenvalue");
  eigen->add_option("config", config_path, "Scenario config")->required();
  auto* report = app.add_subcommand("report", "Dichotomy report for a flow run directory");
  report->add_option("dir", run_dir, "Run directory written by 'flow'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }
  if (!output_dir.empty()) opts.output_dir = output_dir;

  if (dump_default) {
    std::cout << dump_config(ScenarioConfig{});
    return exit_ok;
  }

  return guarded(
      [&]() -> int {
        if (*validate) return cmd_validate(tolerance_scale, opts, std::cout);
        if (*flow) return cmd_flow(config_path, opts, std::cout);
        if (*yamabe) return cmd_yamabe(config_path, opts, std::cout);
        if (*eigen) return cmd_eigen(config_path, opts, std::cout);
        if (*report) return cmd_report(run_dir, opts, std::cout);
        std::cerr << app.help();
        return exit_input_error;
      },
      std::cerr);
}
