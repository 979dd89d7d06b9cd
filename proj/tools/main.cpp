// e2fock verify <suite> [flags]   run a check suite, one record per parameter tuple
// e2fock table <kind> [flags]     emit u-matrix, irrep, basis or profile tables

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "e2fock/table.hpp"
#include "e2fock/verify.hpp"

namespace {

const std::vector<std::pair<std::string, std::string>> kParamFlags{
    {"k", "winding / order index"},
    {"n", "second index (irrep columns, Kummer-limit degree)"},
    {"m", "identity-b degree"},
    {"lambda", "irrep weight"},
    {"lambda2", "second weight (orthogonality)"},
    {"r", "translation modulus"},
    {"psi", "translation angle"},
    {"phi", "rotation angle"},
    {"x", "identity argument x"},
    {"y", "Hille-Hardy argument y"},
    {"zq", "Hille-Hardy ratio"},
    {"b", "Kummer second parameter"},
    {"c", "Kummer argument"},
    {"zmax", "radial cutoff"},
    {"sigma", "classical-limit deformation list"},
    {"samples", "random elements for lie-algebra"},
};

struct Options {
  std::optional<int> dim;
  std::vector<std::string> tols;
  std::string format = "json";
  std::uint64_t seed = e2fock::RunConfig{}.seed;
  int threads = 1;
  std::map<std::string, std::string> raw;
};

void add_common(CLI::App* app, Options& opt) {
  app->add_option("--dim", opt.dim, "Fock truncation in [8, 512] (default: $E2FOCK_DIM or 64)");
  app->add_option("--tol", opt.tols, "tolerance override name=value (repeatable)");
  app->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--seed", opt.seed, "seed for random finite-support elements");
  app->add_option("--threads", opt.threads, "worker threads for grid records")
      ->check(CLI::Range(1, 256));
  for (const auto& [name, help] : kParamFlags) {
    app->add_option("--" + name, opt.raw[name], help + " (a..b or comma list)");
  }
}

e2fock::RunConfig to_config(const Options& opt) {
  e2fock::RunConfig c;
  c.dim = opt.dim;
  c.format = e2fock::parse_format(opt.format);
  c.seed = opt.seed;
  c.threads = opt.threads;
  for (const auto& t : opt.tols) c.tol_overrides.insert(e2fock::parse_tolerance(t));
  for (const auto& [name, text] : opt.raw) {
    if (!text.empty()) c.grid[name] = e2fock::parse_grid_values(text);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E(2) on the Heisenberg algebra: verification suites and tables"};
  app.require_subcommand(1);

  Options opt;
  std::string suite;
  std::string kind;

  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suites_help;
  for (const auto& s : e2fock::suite_names()) suites_help += (suites_help.empty() ? "" : ", ") + s;
  verify->add_option("suite", suite, suites_help)->required();
  add_common(verify, opt);

  auto* table = app.add_subcommand("table", "emit a table");
  table->add_option("kind", kind, "u-matrix, irrep, basis, profile")->required();
  add_common(table, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : e2fock::kExitUsage;
  }

  try {
    const e2fock::RunConfig config = to_config(opt);
    if (verify->parsed()) return e2fock::run_verify(suite, config, std::cout);
    e2fock::run_table(kind, config, std::cout);
    return e2fock::kExitPass;
  } catch (const e2fock::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return e2fock::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return e2fock::kExitUsage;
  }
}
