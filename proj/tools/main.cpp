// opuc: exact identity checks and asymptotic experiments for Geronimus
// polynomials on the unit circle.
//
//   opuc identities --alpha -1/2 --max-n 20
//   opuc eval --alpha -0.5 --n-list 1,2,3 --z-grid 1,2i
//   opuc universality --alpha -1/2 --n-list 400,4000
//   opuc asymptotics --alpha -1/2 --n-list 50,200,500
//   opuc kernel --alpha -1/2 --n-list 100 --z-grid 2,0.5i
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

struct RawFlags {
  std::string alpha;
  std::size_t max_n = 20;
  std::string n_list;
  std::string z_grid;
  std::string ab_grid;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
  double tol = -1.0;
};

void add_shared_flags(CLI::App* sub, RawFlags& f) {
  sub->add_option("--alpha", f.alpha, "Verblunsky parameter: p/q+r/si (exact) or decimal")->required();
  sub->add_option("--max-n", f.max_n, "Largest degree for exact identities");
  sub->add_option("--n-list", f.n_list, "Comma-separated degrees");
  sub->add_option("--z-grid", f.z_grid, "Comma-separated complex points, e.g. 2,3i,-2-1i");
  sub->add_option("--ab-grid", f.ab_grid, "Values (product grid) and a:b pairs, comma-separated");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", f.out, "Output path (default stdout)");
  sub->add_option("--seed", f.seed, "Seed for randomized sequences");
  sub->add_option("--tol", f.tol, "Override the pass/fail tolerance");
}

opuc::cli::RunConfig to_config(std::string_view command, const RawFlags& f) {
  using namespace opuc::cli;
  RunConfig c;
  c.command = parse_command(command);
  c.alpha = parse_alpha(f.alpha);
  c.max_n = f.max_n;
  if (!f.n_list.empty()) c.n_list = parse_size_list(f.n_list);
  if (!f.z_grid.empty()) c.z_grid = parse_complex_list(f.z_grid);
  if (!f.ab_grid.empty()) c.ab_grid = parse_ab_grid(f.ab_grid);
  c.format = f.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  c.out_path = f.out;
  c.seed = f.seed;
  if (f.tol >= 0.0) c.tol = f.tol;
  return finalize(std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geronimus polynomial identities and asymptotics"};
  app.require_subcommand(1);
  RawFlags flags;
  const std::pair<const char*, const char*> subcommands[] = {
      {"identities", "Exact algebraic identities; exit 0 iff all hold"},
      {"eval", "phi_n, phi_n^*, Phi_n, Phi_n^* on an n-list x z-grid"},
      {"universality", "Scaled kernel ratios at the arc edge against the Bessel limit"},
      {"asymptotics", "Schur-limit, ratio-limit and edge-growth errors per n"},
      {"kernel", "Christoffel-Darboux formula against the direct kernel sum"},
  };
  for (const auto& [name, about] : subcommands) add_shared_flags(app.add_subcommand(name, about), flags);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : opuc::cli::kExitUsage;
  }

  try {
    const auto config = to_config(app.get_subcommands().front()->get_name(), flags);
    if (config.out_path.empty()) return opuc::cli::run(config, std::cout, std::cerr);
    std::ofstream file(config.out_path);
    if (!file) {
      std::cerr << "error: cannot open " << config.out_path << '\n';
      return opuc::cli::kExitUsage;
    }
    return opuc::cli::run(config, file, std::cerr);
  } catch (const opuc::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return opuc::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return opuc::cli::kExitCheckFailed;
  }
}
