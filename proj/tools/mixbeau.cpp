#include <iostream>

#include "CLI11.hpp"
#include "mixbeau/cli.hpp"

namespace cli = mixbeau::cli;

int main(int argc, char** argv) {
  CLI::App app{"Verify mixed Beauville structures on the 2-groups G_k, H_k"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string format = "text";
  std::string cache_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "level k (start of the range with --k-max)")->check(CLI::Range(1, mixbeau::kMaxLevel));
    sub->add_option("--k-max", cfg.k_max, "last level of the range")->check(CLI::Range(1, mixbeau::kMaxLevel));
    sub->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", cfg.budget, "maximum group order to enumerate");
    sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--cache-dir", cache_dir, "directory for cached group enumerations");
  };

  auto* verify = app.add_subcommand("verify", "check conditions (A), (B), (C) for u_k");
  common(verify);
  verify->add_flag("--bprime", cfg.bprime, "also test (B) for every g outside H_k");
  verify->add_flag("--timings", cfg.timings, "report elapsed time");

  auto* orders = app.add_subcommand("orders", "order ladder |G_k| and ratios");
  common(orders);

  auto* powers = app.add_subcommand("powers", "classify powers of a generator");
  common(powers);
  powers->add_option("--gen", cfg.gen, "x0 | x1 | x | y0 | y1 | y | all")
      ->check(CLI::IsMember({"x0", "x1", "x", "y0", "y1", "y", "all"}));

  auto* schemes = app.add_subcommand("schemes", "conjugation schemes of second diagonals");
  common(schemes);
  schemes->add_option("--pair", cfg.pair, "x,y | x0,y0 | x1,y1 | all");
  schemes->add_option("--regime", cfg.regime, "base | cube | odd | even | all");

  auto* surface = app.add_subcommand("surface", "invariants of the associated surface");
  common(surface);

  auto* homcheck = app.add_subcommand("homcheck", "homomorphism extension checks");
  common(homcheck);
  homcheck->add_flag("--psi", cfg.psi, "check the reality automorphism of G_k");

  auto* sigma = app.add_subcommand("sigma", "sizes of the Sigma sets");
  common(sigma);

  CLI11_PARSE(app, argc, argv);
  cfg.format = *cli::parse_format(format);
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  if (cfg.k_max && *cfg.k_max < cfg.k) {
    std::cerr << "error: --k-max must be at least --k\n";
    return 2;
  }

  try {
    cli::CommandResult r;
    if (*verify) r = cli::cmd_verify(cfg);
    else if (*orders) r = cli::cmd_orders(cfg);
    else if (*powers) r = cli::cmd_powers(cfg);
    else if (*schemes) r = cli::cmd_schemes(cfg);
    else if (*surface) r = cli::cmd_surface(cfg);
    else if (*homcheck) r = cli::cmd_homcheck(cfg);
    else r = cli::cmd_sigma(cfg);
    std::cout << r.out;
    return r.exit_code;
  } catch (const mixbeau::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
