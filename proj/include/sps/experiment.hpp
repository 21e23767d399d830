#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sps/admm.hpp"
#include "sps/grid.hpp"
#include "sps/linalg.hpp"
#include "sps/measurement.hpp"
#include "sps/signal_gen.hpp"

namespace sps {

// Invalid configuration (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Log-spaced regularization grid. count == 0 resolves to 7 points per
// decade (rounded) plus the endpoint.
struct LambdaGrid {
  double lo = 1e-12;
  double hi = 1e-4;
  int count = 0;

  int resolved_count() const;
  Vec values() const;
};

struct ExperimentConfig {
  int T = 128;
  int M = 50;
  double omega_max = 100.0;
  int n01 = 1;
  int n02 = 2;
  int k_jumps = 5;
  double sigma1 = 1.0;
  double sigma2 = 10.0;
  double margin = 0.05;
  double snr_db = 50.0;
  double lambda1 = 8e-7;
  double lambda2 = 5e-10;
  LambdaGrid grid1;
  LambdaGrid grid2;
  std::uint64_t gt_seed = 1;
  std::uint64_t model_seed = 1;
  std::uint64_t noise_seed = 1;
  std::vector<std::string> models = {"composite", "sparse_only", "smooth_only"};
  std::string output_dir = ".";

  void validate() const;  // throws ConfigError
};

// Everything assembled once per configuration: bases, matrices, ground
// truth, noisy measurements, and the evaluation grid (16T points j*h/16).
struct Workspace {
  ExperimentConfig cfg;
  GridSpec grid{2};
  PiecewisePoly basis1, basis2;
  IndexRanges range1, range2;
  MeasurementModel model;
  Mat H1, H2, L1, L2;
  BoundaryConstraint boundary;
  GroundTruth gt;
  Vec y_clean, y;
  Vec ts;
  Vec gt_total;
};

Workspace build_workspace(const ExperimentConfig& cfg);

struct ModelReport {
  std::string name;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double snr = 0.0;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  int knot_count = -1;  // -1 when the model has no sparse part
  bool lp_optimal = false;
  bool lp_replaced = false;
  std::string error;  // nonempty when the model failed outright
  Vec s1, s2;         // reconstructions on the evaluation grid
};

// Solves one model at fixed regularization weights and evaluates it.
// name is one of composite / sparse_only / smooth_only.
ModelReport run_model(const Workspace& ws, const std::string& name,
                      double lambda1, double lambda2);

struct GridSearchOutcome {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double snr = 0.0;
  Vec axis1, axis2;         // grids actually swept (may be empty)
  std::vector<double> cells;  // row-major over axis1 x axis2
};

// Exhaustive search maximizing reconstruction SNR against the ground
// truth; equal SNRs resolve toward larger weights. Cells run concurrently.
GridSearchOutcome grid_search(const Workspace& ws, const std::string& name,
                              const LambdaGrid& g1, const LambdaGrid& g2);

struct RunReport {
  ExperimentConfig cfg;
  std::vector<ModelReport> models;
  Vec ts;
  Vec gt_total;
  bool swept = false;
  std::vector<GridSearchOutcome> sweeps;  // parallel to models when swept
  double wall_time_sec = 0.0;
};

// Single experiment at the configured lambdas; writes signals.csv and
// report.json into cfg.output_dir.
RunReport run_experiment(const ExperimentConfig& cfg);

// Per-model grid search, then a final run at the winners; writes the same
// outputs plus the sweep tables.
RunReport sweep_experiment(const ExperimentConfig& cfg);

std::string report_json(const RunReport& rep);
std::string signals_csv(const RunReport& rep);
void write_outputs(const RunReport& rep);

// True when every requested model ran and converged.
bool all_converged(const RunReport& rep);

}  // namespace sps
