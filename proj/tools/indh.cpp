#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indh/cli.hpp"
#include "indh/error.hpp"

namespace {

template <class T>
void override_with(CLI::Option* opt, const T& value, T& target) {
  if (opt->count() > 0) target = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indh: induced-representation Fourier analysis on finite and Z x F groups"};
  app.require_subcommand(0, 1);

  indh::cli::RunConfig flags;
  std::string config_path;
  std::vector<std::string> p_values;

  app.add_option("--config", config_path, "JSON RunConfig; command-line flags override it");
  auto* o_group = app.add_option("--group,-g", flags.group, "builtin:NAME, cayley:[[...]] or group JSON");
  auto* o_sub = app.add_option("--subgroup,-k", flags.subgroup, "normal subgroup K");
  auto* o_sigma = app.add_option("--sigma,-s", flags.sigma, "irrep labels or positions of K");
  auto* o_tau = app.add_option("--tau", flags.tau, "second irrep for cross integrals");
  auto* o_irreps = app.add_option("--irreps", flags.irreps, "dual object JSON");
  auto* o_measure = app.add_option("--measure", flags.measure, "vector measure JSON");
  auto* o_function = app.add_option("--function", flags.function, "density or function JSON");
  auto* o_method = app.add_option("--method", flags.method, "direct, gram or both");
  auto* o_p = app.add_option("--p", p_values, "exponents for norms; 'inf' allowed");
  auto* o_random = app.add_option("--random", flags.random, "number of random inputs");
  auto* o_alg = app.add_option("--algebra-dim", flags.algebra_dim, "k for random k x k inputs");
  auto* o_ts = app.add_option("--tol-structural", flags.tol_structural, "structural tolerance");
  auto* o_td = app.add_option("--tol-decision", flags.tol_decision, "decision tolerance");
  auto* o_seed = app.add_option("--seed", flags.seed, "seed for all randomness");
  auto* o_out = app.add_option("--output,-o", flags.output, "report path; stdout if absent");
  auto* o_verb = app.add_flag("-v,--verbose", flags.verbosity, "log progress to stderr");

  std::vector<CLI::App*> subs;
  for (const std::string& name : indh::cli::kCommands) {
    CLI::App* sub = app.add_subcommand(name, "run " + name);
    sub->fallthrough();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  indh::cli::RunConfig config;
  try {
    if (!config_path.empty())
      config = indh::cli::config_from_json(indh::io::read_json_file(config_path));
    if (!p_values.empty()) {
      flags.p.clear();
      for (const std::string& s : p_values)
        flags.p.push_back(s == "inf" || s == "infinity" ? -1.0 : std::stod(s));
    }
  } catch (const indh::Error& e) {
    std::cerr << "indh: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "indh: bad --p value: " << e.what() << "\n";
    return 1;
  }

  for (CLI::App* sub : subs)
    if (sub->parsed()) config.command = sub->get_name();
  if (config.command.empty()) {
    std::cerr << "indh: no subcommand given\n" << app.help();
    return 1;
  }

  override_with(o_group, flags.group, config.group);
  override_with(o_sub, flags.subgroup, config.subgroup);
  override_with(o_sigma, flags.sigma, config.sigma);
  override_with(o_tau, flags.tau, config.tau);
  override_with(o_irreps, flags.irreps, config.irreps);
  override_with(o_measure, flags.measure, config.measure);
  override_with(o_function, flags.function, config.function);
  override_with(o_method, flags.method, config.method);
  override_with(o_p, flags.p, config.p);
  override_with(o_random, flags.random, config.random);
  override_with(o_alg, flags.algebra_dim, config.algebra_dim);
  override_with(o_ts, flags.tol_structural, config.tol_structural);
  override_with(o_td, flags.tol_decision, config.tol_decision);
  override_with(o_seed, flags.seed, config.seed);
  override_with(o_out, flags.output, config.output);
  override_with(o_verb, flags.verbosity, config.verbosity);

  return indh::cli::run(config, std::cout, std::cerr);
}
