#include "sps/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sps/bspline.hpp"
#include "sps/filters.hpp"
#include "sps/regularization.hpp"
#include "sps/sparsify.hpp"

namespace sps {

namespace {

constexpr std::uint64_t kSmoothSeedOffset = 0x9e3779b97f4a7c15ULL;

bool known_model(const std::string& name) {
  return name == "composite" || name == "sparse_only" || name == "smooth_only";
}

}  // namespace

int LambdaGrid::resolved_count() const {
  if (count > 0) return count;
  double decades = std::log10(hi / lo);
  return static_cast<int>(std::lround(7.0 * decades)) + 1;
}

Vec LambdaGrid::values() const {
  int n = resolved_count();
  Vec v;
  if (n == 1) {
    v.push_back(lo);
    return v;
  }
  double r = std::log(hi / lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) v.push_back(lo * std::exp(r * i));
  v.back() = hi;
  return v;
}

void ExperimentConfig::validate() const {
  if (T < 2) throw ConfigError("T must be >= 2");
  if (M < 1) throw ConfigError("M must be >= 1");
  if (!(omega_max > 0.0)) throw ConfigError("omega_max must be positive");
  if (n01 < 1 || n01 > 8) throw ConfigError("n01 must lie in [1, 8]");
  if (n02 < 1 || n02 > 4) throw ConfigError("n02 must lie in [1, 4]");
  if (T < n01 + 1 || T < 2 * n02 + 1)
    throw ConfigError("grid too short for the basis supports");
  if (k_jumps < 0) throw ConfigError("k_jumps must be >= 0");
  if (sigma1 < 0.0 || sigma2 < 0.0) throw ConfigError("sigmas must be >= 0");
  if (margin < 0.0 || margin >= 0.5) throw ConfigError("margin must lie in [0, 0.5)");
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) throw ConfigError("lambdas must be positive");
  for (const LambdaGrid* g : {&grid1, &grid2}) {
    if (!(g->lo > 0.0) || g->hi < g->lo) throw ConfigError("bad lambda grid range");
    if (g->count < 0) throw ConfigError("grid count must be >= 1");
    if (g->resolved_count() < 1) throw ConfigError("grid count must be >= 1");
  }
  if (models.empty()) throw ConfigError("no models requested");
  for (const auto& m : models)
    if (!known_model(m)) throw ConfigError("unknown model: " + m);
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = i + 1; j < models.size(); ++j)
      if (models[i] == models[j]) throw ConfigError("duplicate model: " + models[i]);
}

Workspace build_workspace(const ExperimentConfig& cfg) {
  cfg.validate();
  Workspace ws;
  ws.cfg = cfg;
  ws.grid = GridSpec(cfg.T);
  ws.basis1 = bspline(cfg.n01);
  ws.basis2 = centered_bspline(2 * cfg.n02);
  ws.range1 = active_range(ws.grid, ws.basis1);
  ws.range2 = active_range(ws.grid, ws.basis2);
  ws.model = make_cosine_model(cfg.M, cfg.omega_max, cfg.model_seed);
  ws.H1 = assemble_system_matrix(ws.model, ws.basis1, ws.range1, ws.grid);
  ws.H2 = assemble_system_matrix(ws.model, ws.basis2, ws.range2, ws.grid);
  ws.L1 = sparse_reg_matrix(cfg.T, cfg.n01);
  ws.L2 = smooth_reg_matrix(cfg.T, cfg.n02);
  ws.boundary = boundary_constraint(cfg.n01, cfg.n02);

  double step = ws.grid.h() / 16.0;
  ws.gt.sparse = make_sparse_gt(cfg.k_jumps, cfg.sigma1, cfg.n01, cfg.margin, cfg.gt_seed);
  ws.gt.smooth = make_smooth_gt(cfg.sigma2, cfg.n02, step, cfg.gt_seed + kSmoothSeedOffset);

  Vec m1 = measure_sparse(ws.gt.sparse, ws.model);
  Vec m2 = measure_smooth(ws.gt.smooth, ws.model);
  ws.y_clean.resize(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) ws.y_clean[i] = m1[i] + m2[i];
  ws.y = add_noise(ws.y_clean, cfg.snr_db, cfg.noise_seed);

  int npts = 16 * cfg.T;
  ws.ts.resize(npts);
  ws.gt_total.resize(npts);
  for (int j = 0; j < npts; ++j) {
    ws.ts[j] = static_cast<double>(j) * step;
    ws.gt_total[j] = ws.gt.sparse.eval(ws.ts[j]) + ws.gt.smooth.samples[j];
  }
  return ws;
}

namespace {

ModelReport run_model_impl(const Workspace& ws, const std::string& name,
                           double lambda1, double lambda2) {
  ModelReport rep;
  rep.name = name;
  if (name == "composite") {
    CompositeProblem p{ws.H1, ws.H2, ws.L1, ws.L2, ws.y, lambda1, lambda2, ws.boundary};
    AdmmResult r = solve_composite(p);
    SparsifyOutcome sp = sparsify_composite(p, r);
    rep.lambda1 = lambda1;
    rep.lambda2 = lambda2;
    rep.iterations = r.iterations;
    rep.converged = r.converged;
    rep.knot_count = sp.knot_count;
    rep.lp_optimal = sp.lp_optimal;
    rep.lp_replaced = sp.replaced;
    rep.objective = composite_objective(p, sp.c1, r.c2);
    rep.s1 = evaluate_component(sp.c1, ws.range1, ws.basis1, ws.grid, ws.ts);
    rep.s2 = evaluate_component(r.c2, ws.range2, ws.basis2, ws.grid, ws.ts);
  } else if (name == "sparse_only") {
    SparseProblem p{ws.H1, ws.L1, ws.y, lambda1};
    AdmmResult r = solve_sparse_only(p);
    SparsifyOutcome sp = sparsify_sparse_only(p, r);
    rep.lambda1 = lambda1;
    rep.iterations = r.iterations;
    rep.converged = r.converged;
    rep.knot_count = sp.knot_count;
    rep.lp_optimal = sp.lp_optimal;
    rep.lp_replaced = sp.replaced;
    rep.objective = sparse_objective(p, sp.c1);
    rep.s1 = evaluate_component(sp.c1, ws.range1, ws.basis1, ws.grid, ws.ts);
    rep.s2.assign(ws.ts.size(), 0.0);
  } else if (name == "smooth_only") {
    SmoothProblem p{ws.H2, ws.L2, ws.y, lambda2};
    Vec c2 = solve_smooth_only(p);
    rep.lambda2 = lambda2;
    rep.iterations = 1;
    rep.converged = true;
    rep.objective = smooth_objective(p, c2);
    rep.s1.assign(ws.ts.size(), 0.0);
    rep.s2 = evaluate_component(c2, ws.range2, ws.basis2, ws.grid, ws.ts);
  } else {
    throw ConfigError("unknown model: " + name);
  }
  Vec total(ws.ts.size());
  for (std::size_t i = 0; i < total.size(); ++i) total[i] = rep.s1[i] + rep.s2[i];
  rep.snr = snr_db(ws.gt_total, total);
  return rep;
}

}  // namespace

ModelReport run_model(const Workspace& ws, const std::string& name,
                      double lambda1, double lambda2) {
  try {
    return run_model_impl(ws, name, lambda1, lambda2);
  } catch (const std::exception& e) {
    ModelReport rep;
    rep.name = name;
    rep.lambda1 = lambda1;
    rep.lambda2 = lambda2;
    rep.error = e.what();
    rep.converged = false;
    rep.s1.assign(ws.ts.size(), 0.0);
    rep.s2.assign(ws.ts.size(), 0.0);
    rep.snr = -1e9;
    return rep;
  }
}

GridSearchOutcome grid_search(const Workspace& ws, const std::string& name,
                              const LambdaGrid& g1, const LambdaGrid& g2) {
  GridSearchOutcome out;
  if (name == "composite") {
    out.axis1 = g1.values();
    out.axis2 = g2.values();
  } else if (name == "sparse_only") {
    out.axis1 = g1.values();
  } else if (name == "smooth_only") {
    out.axis2 = g2.values();
  } else {
    throw ConfigError("unknown model: " + name);
  }

  const std::size_t n1 = out.axis1.empty() ? 1 : out.axis1.size();
  const std::size_t n2 = out.axis2.empty() ? 1 : out.axis2.size();
  struct Cell {
    double l1, l2, snr;
  };
  std::vector<Cell> cells(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      Cell& c = cells[i * n2 + j];
      c.l1 = out.axis1.empty() ? ws.cfg.lambda1 : out.axis1[i];
      c.l2 = out.axis2.empty() ? ws.cfg.lambda2 : out.axis2[j];
      c.snr = 0.0;
    }

  auto eval_cell = [&](Cell& c) {
    ModelReport rep = run_model(ws, name, c.l1, c.l2);
    c.snr = (rep.error.empty() && rep.converged) ? rep.snr : -1e9;
  };

  unsigned hw = std::thread::hardware_concurrency();
  unsigned nthreads = std::min<unsigned>(hw ? hw : 1, cells.size());
  if (nthreads <= 1) {
    for (auto& c : cells) eval_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) eval_cell(cells[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const Cell* best = &cells[0];
  for (const Cell& c : cells) {
    bool better = c.snr > best->snr;
    bool tied = c.snr == best->snr &&
                (c.l1 > best->l1 || (c.l1 == best->l1 && c.l2 > best->l2));
    if (better || tied) best = &c;
  }
  out.lambda1 = best->l1;
  out.lambda2 = best->l2;
  out.snr = best->snr;
  out.cells.reserve(cells.size());
  for (const Cell& c : cells) out.cells.push_back(c.snr);
  return out;
}

namespace {

RunReport finish_report(const Workspace& ws, RunReport rep,
                        std::chrono::steady_clock::time_point t0) {
  rep.cfg = ws.cfg;
  rep.ts = ws.ts;
  rep.gt_total = ws.gt_total;
  rep.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(rep);
  return rep;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Workspace ws = build_workspace(cfg);
  RunReport rep;
  for (const auto& name : cfg.models)
    rep.models.push_back(run_model(ws, name, cfg.lambda1, cfg.lambda2));
  return finish_report(ws, std::move(rep), t0);
}

RunReport sweep_experiment(const ExperimentConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Workspace ws = build_workspace(cfg);
  RunReport rep;
  rep.swept = true;
  for (const auto& name : cfg.models) {
    GridSearchOutcome sw = grid_search(ws, name, cfg.grid1, cfg.grid2);
    rep.sweeps.push_back(sw);
    rep.models.push_back(run_model(ws, name, sw.lambda1, sw.lambda2));
  }
  return finish_report(ws, std::move(rep), t0);
}

bool all_converged(const RunReport& rep) {
  for (const auto& m : rep.models)
    if (!m.error.empty() || !m.converged) return false;
  return true;
}

std::string signals_csv(const RunReport& rep) {
  // Decomposition columns come from the first model that can supply them.
  const ModelReport* pick = nullptr;
  for (const char* pref : {"composite", "sparse_only", "smooth_only"}) {
    for (const auto& m : rep.models)
      if (m.name == pref && m.error.empty()) {
        pick = &m;
        break;
      }
    if (pick) break;
  }

  std::string out = "t,s_gt,s1,s2,s_total\n";
  char buf[160];
  for (std::size_t j = 0; j < rep.ts.size(); ++j) {
    double s1 = pick ? pick->s1[j] : 0.0;
    double s2 = pick ? pick->s2[j] : 0.0;
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", rep.ts[j],
                  rep.gt_total[j], s1, s2, s1 + s2);
    out += buf;
  }
  return out;
}

std::string report_json(const RunReport& rep) {
  using nlohmann::json;
  json j;
  const ExperimentConfig& c = rep.cfg;
  j["config"] = {
      {"T", c.T},
      {"M", c.M},
      {"omega_max", c.omega_max},
      {"n01", c.n01},
      {"n02", c.n02},
      {"k_jumps", c.k_jumps},
      {"sigma1", c.sigma1},
      {"sigma2", c.sigma2},
      {"margin", c.margin},
      {"snr_db", c.snr_db},
      {"lambda1", c.lambda1},
      {"lambda2", c.lambda2},
      {"grid1", {{"lo", c.grid1.lo}, {"hi", c.grid1.hi}, {"count", c.grid1.resolved_count()}}},
      {"grid2", {{"lo", c.grid2.lo}, {"hi", c.grid2.hi}, {"count", c.grid2.resolved_count()}}},
      {"gt_seed", c.gt_seed},
      {"model_seed", c.model_seed},
      {"noise_seed", c.noise_seed},
      {"models", c.models},
      {"output_dir", c.output_dir},
  };
  j["seeds"] = {{"gt", c.gt_seed}, {"model", c.model_seed}, {"noise", c.noise_seed}};
  json models = json::object();
  for (const auto& m : rep.models) {
    json e;
    e["snr_db"] = m.snr;
    e["objective"] = m.objective;
    e["iterations"] = m.iterations;
    e["converged"] = m.converged;
    if (m.name != "smooth_only") e["lambda1"] = m.lambda1;
    if (m.name != "sparse_only") e["lambda2"] = m.lambda2;
    if (m.knot_count >= 0) {
      e["knot_count"] = m.knot_count;
      e["lp_optimal"] = m.lp_optimal;
      e["lp_replaced"] = m.lp_replaced;
    }
    if (!m.error.empty()) e["error"] = m.error;
    models[m.name] = e;
  }
  j["models"] = models;
  if (rep.swept) {
    json sweeps = json::object();
    for (std::size_t i = 0; i < rep.sweeps.size(); ++i) {
      const GridSearchOutcome& s = rep.sweeps[i];
      json e;
      e["lambda1"] = s.lambda1;
      e["lambda2"] = s.lambda2;
      e["snr_db"] = s.snr;
      e["axis1"] = s.axis1;
      e["axis2"] = s.axis2;
      e["cells"] = s.cells;
      sweeps[rep.models[i].name] = e;
    }
    j["sweep"] = sweeps;
  }
  j["wall_time_sec"] = rep.wall_time_sec;
  return j.dump(2) + "\n";
}

void write_outputs(const RunReport& rep) {
  namespace fs = std::filesystem;
  fs::path dir(rep.cfg.output_dir);
  if (!dir.empty()) fs::create_directories(dir);
  {
    std::ofstream f(dir / "signals.csv", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write signals.csv");
    f << signals_csv(rep);
  }
  {
    std::ofstream f(dir / "report.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write report.json");
    f << report_json(rep);
  }
}

}  // namespace sps
