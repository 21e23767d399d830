#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sps/experiment.hpp"
#include "sps/filters.hpp"

namespace {

void print_filter(const char* name, const sps::DigitalFilter& f) {
  std::printf("%-6s offset %3d  taps [", name, f.offset);
  for (int i = 0; i < f.size(); ++i)
    std::printf("%s%.12g", i ? ", " : "", f.taps[i]);
  std::printf("]\n");
}

int run_filters(int n01, int n02) {
  using namespace sps;
  std::printf("sparse component, order %d\n", n01);
  print_filter("d", fd_filter(n01));
  std::printf("smooth component, order %d\n", n02);
  print_filter("d", fd_filter(n02));
  print_filter("b", sampled_kernel(n02));
  print_filter("bhalf", spectral_factor(sampled_kernel(n02)));
  print_filter("g", autocorrelation_factor(n02));
  print_filter("rho", autocorrelation_filter(n02));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse-plus-smooth signal reconstruction from cosine measurements"};
  app.require_subcommand(1);
  app.set_config("--config")->description("flat key=value config file; flags override");

  sps::ExperimentConfig cfg;
  app.add_option("--T", cfg.T, "grid cells on [0,1]");
  app.add_option("--M", cfg.M, "number of measurements");
  app.add_option("--omega-max", cfg.omega_max, "largest cosine pulsation");
  app.add_option("--n01", cfg.n01, "derivative order of the sparse penalty");
  app.add_option("--n02", cfg.n02, "derivative order of the smooth penalty");
  app.add_option("--k-jumps", cfg.k_jumps, "ground-truth jump count");
  app.add_option("--sigma1", cfg.sigma1, "jump amplitude scale");
  app.add_option("--sigma2", cfg.sigma2, "smooth innovation scale");
  app.add_option("--margin", cfg.margin, "keep-out margin for ground-truth jumps");
  app.add_option("--snr-db", cfg.snr_db, "measurement SNR; >= 300 means noiseless");
  app.add_option("--lambda1", cfg.lambda1, "sparse regularization weight (run)");
  app.add_option("--lambda2", cfg.lambda2, "smooth regularization weight (run)");
  app.add_option("--grid1-lo", cfg.grid1.lo, "sweep: lambda1 grid lower end");
  app.add_option("--grid1-hi", cfg.grid1.hi, "sweep: lambda1 grid upper end");
  app.add_option("--grid1-count", cfg.grid1.count, "sweep: lambda1 grid size (0 = auto)");
  app.add_option("--grid2-lo", cfg.grid2.lo, "sweep: lambda2 grid lower end");
  app.add_option("--grid2-hi", cfg.grid2.hi, "sweep: lambda2 grid upper end");
  app.add_option("--grid2-count", cfg.grid2.count, "sweep: lambda2 grid size (0 = auto)");
  app.add_option("--gt-seed", cfg.gt_seed, "ground-truth seed");
  app.add_option("--model-seed", cfg.model_seed, "measurement-model seed");
  app.add_option("--noise-seed", cfg.noise_seed, "noise seed");
  app.add_option("--models", cfg.models, "subset of composite,sparse_only,smooth_only")
      ->delimiter(',');
  app.add_option("--output-dir", cfg.output_dir, "directory for signals.csv and report.json");

  CLI::App* cmd_run = app.add_subcommand("run", "single experiment at fixed lambdas");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "lambda grid search per model");
  CLI::App* cmd_filters = app.add_subcommand("filters", "print the discrete filters");
  for (CLI::App* c : {cmd_run, cmd_sweep, cmd_filters}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_filters->parsed()) return run_filters(cfg.n01, cfg.n02);
    sps::RunReport rep =
        cmd_sweep->parsed() ? sps::sweep_experiment(cfg) : sps::run_experiment(cfg);
    for (const auto& m : rep.models) {
      if (!m.error.empty()) {
        std::printf("%-12s FAILED: %s\n", m.name.c_str(), m.error.c_str());
        continue;
      }
      std::printf("%-12s snr %8.3f dB  lambda1 %.3e  lambda2 %.3e  iters %6d%s\n",
                  m.name.c_str(), m.snr, m.lambda1, m.lambda2, m.iterations,
                  m.converged ? "" : "  (not converged)");
    }
    std::printf("outputs in %s (wall %.2fs)\n", rep.cfg.output_dir.c_str(),
                rep.wall_time_sec);
    if (!sps::all_converged(rep)) return 3;
    (void)cmd_run;
    return 0;
  } catch (const sps::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
