#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "anneal.hpp"
#include "errors.hpp"
#include "iterate.hpp"
#include "poly_io.hpp"
#include "trigpoly.hpp"
#include "zeros.hpp"

#ifndef ZETAFREE_DATA_DIR
#define ZETAFREE_DATA_DIR "data"
#endif

namespace zetafree {

namespace {

namespace fs = std::filesystem;

std::string out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

double tail_bound_from_env() {
  if (const char* s = std::getenv("ZETAFREE_TAIL_INV_SQ")) {
    return std::atof(s);
  }
  return kZeroInvSqTailBound;
}

ZeroSumProvider make_provider(const std::string& zeros_path, bool fallback) {
  if (!zeros_path.empty()) {
    ZeroTable t = load_zeros(zeros_path);
    std::fprintf(stderr, "zeros: table %s (%zu ordinates, max %.3f); tail bound %.6g\n",
                 zeros_path.c_str(), t.count(), t.max_gamma, tail_bound_from_env());
    return ZeroSumProvider::from_table(std::move(t), tail_bound_from_env());
  }
  if (fallback) {
    std::fprintf(stderr, "zeros: no table; published height-zero constant (t0 = 1e5 only)\n");
    return ZeroSumProvider::fallback();
  }
  throw std::runtime_error("need --zeros <path> or --fallback-c30");
}

void write_trace_csv(const std::string& path, const std::vector<IterationRow>& rows) {
  std::ofstream out(path);
  out << "R,r,eta0x1e3,eta1x1e3,kappa,delta,R0\n";
  char buf[256];
  for (const IterationRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.7f,%.5f,%.5f,%.6f,%.6f,%.6f,%.7f\n", row.R, row.r,
                  row.eta0 * 1e3, row.eta1 * 1e3, row.kappa, row.delta, row.R0);
    out << buf;
  }
}

struct GoldenRow {
  double R, r, eta0x1e3, eta1x1e3, kappa, delta, R0;
};

// reference trace for the default configuration (F16, T0 = 3.06e10,
// t0 = 1e5, theta = 1.85573)
const GoldenRow kGoldenTable3[7] = {
    {5.7000000, 5.58682, 7.41347, 0.861315, 0.440100, 0.620251, 5.5868212},
    {5.5868212, 5.57486, 7.42938, 0.876546, 0.439964, 0.620293, 5.5748558},
    {5.5748558, 5.57357, 7.43109, 0.878187, 0.439949, 0.620298, 5.5735676},
    {5.5735676, 5.57343, 7.43128, 0.878364, 0.439948, 0.620298, 5.5734286},
    {5.5734286, 5.57341, 7.43130, 0.878383, 0.439948, 0.620298, 5.5734136},
    {5.5734136, 5.57341, 7.43130, 0.878385, 0.439948, 0.620298, 5.5734120},
    {5.5734120, 5.57341, 7.43130, 0.878386, 0.439948, 0.620298, 5.5734118},
};

int cmd_objective(const std::string& poly_path) {
  PolynomialFile pf = read_polynomial(poly_path);
  MembershipReport rep = membership_check(pf.poly);
  std::printf("degree        %d\n", pf.poly.n);
  std::printf("A             %.15g\n", pf.poly.A);
  std::printf("member of P_n %s\n", rep.is_member ? "yes" : "no");
  if (rep.first_negative_index) {
    std::printf("first negative coefficient at k = %d\n", *rep.first_negative_index);
  }
  if (!rep.a1_exceeds_a0) std::printf("a_1 <= a_0\n");
  if (!rep.is_member) return 1;
  std::printf("objective G   %.15g\n", landau_objective(pf.poly));
  return 0;
}

int cmd_plot(const std::string& poly_path, int samples, const std::string& out_dir) {
  PolynomialFile pf = read_polynomial(poly_path);
  std::string path = out_path(out_dir, "plot.csv");
  std::ofstream out(path);
  out << "phi,value\n";
  char buf[80];
  for (int i = 0; i < samples; ++i) {
    double phi = M_PI_2 + (M_PI - M_PI_2) * i / (samples - 1);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", phi, evaluate(pf.poly, phi));
    out << buf;
  }
  std::printf("wrote %d samples on [pi/2, pi] to %s\n", samples, path.c_str());
  return 0;
}

int cmd_r0(const std::string& poly_path, const RegionParams& params, int rounds,
           const std::string& zeros_path, bool fallback, const std::string& out_dir) {
  PolynomialFile pf = read_polynomial(poly_path);
  ZeroSumProvider zeros = make_provider(zeros_path, fallback);
  IterationResult res = run_iteration(pf.poly, params, zeros, rounds);
  write_trace_csv(out_path(out_dir, "trace.csv"), res.rows);
  for (const IterationRow& row : res.rows) {
    std::printf("R=%.7f  r=%.5f  eta0=%.5fe-3  eta1=%.6fe-3  kappa=%.6f  delta=%.6f  R0=%.7f\n",
                row.R, row.r, row.eta0 * 1e3, row.eta1 * 1e3, row.kappa, row.delta, row.R0);
  }
  std::printf("rounds        %zu\n", res.rows.size());
  std::printf("R0            %.9f\n", res.R0);
  std::printf("R0 (theorem)  %.6f\n", theorem_round_up(res.R0));
  return res.converged ? 0 : 1;
}

int cmd_sweep(const std::string& poly_path, RegionParams params, double T0_min, double T0_max,
              int points, const std::string& zeros_path, bool fallback,
              const std::string& out_dir) {
  PolynomialFile pf = read_polynomial(poly_path);
  ZeroSumProvider zeros = make_provider(zeros_path, fallback);
  std::vector<double> grid;
  if (points == 1) {
    grid.push_back(T0_min);
  } else {
    double l0 = std::log(T0_min), l1 = std::log(T0_max);
    for (int i = 0; i < points; ++i) grid.push_back(std::exp(l0 + (l1 - l0) * i / (points - 1)));
  }
  SweepResult res = t0_sweep(pf.poly, grid, params, zeros);

  std::string path = out_path(out_dir, "sweep.csv");
  std::ofstream out(path);
  out << "T0,R0,status\n";
  char buf[160];
  for (const SweepPoint& pt : res.points) {
    std::snprintf(buf, sizeof buf, "%.6e,%.7f,%s\n", pt.T0, pt.R0, pt.ok ? "ok" : "failed");
    out << buf;
    if (!pt.ok) std::fprintf(stderr, "T0 = %.3e failed: %s\n", pt.T0, pt.error.c_str());
  }
  if (!res.fit_ok) {
    std::printf("fit: degenerate (need >= 2 successful points)\n");
    return 1;
  }
  double max_res = 0.0;
  for (double r : res.residuals) max_res = std::max(max_res, std::abs(r));
  std::printf("fit: R0 ~ %.4f + %.4f / log T0   (max residual %.2e over %zu points)\n",
              res.a_fit, res.b_fit, max_res, res.residuals.size());
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int cmd_anneal(int degree, int chains, bool jitter, const AnnealSchedule& sched,
               const std::string& start_path, const std::string& out_dir) {
  MultiChainResult res;
  if (!start_path.empty()) {
    PolynomialFile pf = read_polynomial(start_path);
    if (!pf.factor) throw std::runtime_error("polish start file has no spectral factor lines");
    res.chains.push_back(polish(*pf.factor, sched));
    res.best = res.chains.front();
  } else {
    res = run_chains(degree, sched, chains, jitter);
  }

  std::string log_path = out_path(out_dir, "anneal_log.csv");
  {
    std::ofstream log(log_path);
    log << "chain,seed,B,Z0,dZ,Kz,M,S0,lambda,S_min,best_objective,accepted,rejected,"
           "constraint_rejections,status\n";
    char buf[512];
    for (std::size_t i = 0; i < res.chains.size(); ++i) {
      const ChainResult& c = res.chains[i];
      const AnnealSchedule& s = c.schedule;
      std::snprintf(buf, sizeof buf,
                    "%zu,%llu,%.6g,%.6g,%.6g,%d,%ld,%.6g,%.6g,%.6g,%.12g,%ld,%ld,%ld,%s\n", i,
                    static_cast<unsigned long long>(c.seed), s.B, s.Z0, s.dZ, s.Kz,
                    s.trials(degree), s.S0_init, s.lambda, s.S_min, c.best_objective,
                    c.accepted_steps, c.rejected_steps, c.constraint_rejections,
                    c.failed ? c.error.c_str() : "ok");
      log << buf;
    }
  }
  std::string poly_path = out_path(out_dir, "best.poly");
  write_polynomial(poly_path, res.best.best_poly, &res.best.best_factor);

  long failures = 0;
  for (const ChainResult& c : res.chains) failures += c.failed ? 1 : 0;
  std::printf("chains        %zu (%ld failed)\n", res.chains.size(), failures);
  std::printf("best seed     %llu\n", static_cast<unsigned long long>(res.best.seed));
  std::printf("best G        %.12f\n", res.best.best_objective);
  std::printf("wrote %s and %s\n", poly_path.c_str(), log_path.c_str());
  return 2 * failures >= static_cast<long>(res.chains.size()) && failures > 0 ? 1 : 0;
}

bool check(double got, double want, double tol, const char* what, int row, bool verbose) {
  if (std::abs(got - want) <= tol) return true;
  if (verbose) {
    std::printf("  row %d %s: got %.8g, reference %.8g (|diff| %.2e > %.2e)\n", row + 1, what,
                got, want, std::abs(got - want), tol);
  }
  return false;
}

int cmd_tables(const std::string& f16_path, const std::string& f40_path, double tol_scale,
               const std::string& zeros_path, bool fallback, const std::string& out_dir) {
  ZeroSumProvider zeros = make_provider(zeros_path, fallback);
  int bad = 0;

  if (!f16_path.empty()) {
    PolynomialFile f16 = read_polynomial(f16_path);
    RegionParams params;  // defaults plus the reference window cutoff
    params.t0_window = 1e4;
    IterationResult res = run_iteration(f16.poly, params, zeros);
    write_trace_csv(out_path(out_dir, "table3.csv"), res.rows);
    int rows_ok = 0;
    std::size_t nrows = std::min<std::size_t>(res.rows.size(), 7);
    for (std::size_t i = 0; i < nrows; ++i) {
      const IterationRow& row = res.rows[i];
      const GoldenRow& g = kGoldenTable3[i];
      bool ok = true;
      ok &= check(row.R, g.R, 5e-7 * tol_scale, "R", i, true);
      ok &= check(row.r, g.r, 1e-5 * tol_scale, "r", i, true);
      ok &= check(row.eta0 * 1e3, g.eta0x1e3, 5e-6 * tol_scale, "eta0", i, true);
      ok &= check(row.eta1 * 1e3, g.eta1x1e3, 1e-6 * tol_scale, "eta1", i, true);
      ok &= check(row.kappa, g.kappa, 1e-6 * tol_scale, "kappa", i, true);
      ok &= check(row.delta, g.delta, 1e-6 * tol_scale, "delta", i, true);
      ok &= check(row.R0, g.R0, 5e-7 * tol_scale, "R0", i, true);
      rows_ok += ok ? 1 : 0;
    }
    std::printf("reference trace: %d/7 rows match (%zu rounds run)\n", rows_ok, res.rows.size());
    if (rows_ok != 7 || res.rows.size() != 7) ++bad;
    double g16 = landau_objective(f16.poly);
    bool g_ok = std::abs(g16 - 34.49997) <= std::max(5e-5, 5e-5 * tol_scale);
    std::printf("objective(F16) = %.7f  [%s]\n", g16, g_ok ? "ok" : "MISMATCH");
    if (!g_ok) ++bad;
  }

  if (!f40_path.empty()) {
    PolynomialFile f40 = read_polynomial(f40_path);
    double g40 = landau_objective(f40.poly);
    bool le = g40 <= 34.488992000856 + 1e-9 * tol_scale;
    std::printf("objective(F40) = %.12f (reference bound 34.488992000856)  [%s]\n", g40,
                le ? "ok" : "MISMATCH");
    if (!le) ++bad;
    RegionParams params;
    params.theta = 1.855;
    params.t0_window = 1e4;
    IterationResult res = run_iteration(f40.poly, params, zeros);
    bool r0_ok = std::abs(res.R0 - 5.57724) <= std::max(1e-4, 1e-4 * tol_scale);
    std::printf("R0(F40, theta = 1.855) = %.7f (reference 5.57724)  [%s]\n", res.R0,
                r0_ok ? "ok" : "MISMATCH");
    if (!r0_ok) ++bad;
  }

  return bad == 0 ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"nonnegative cosine polynomial search and zeta zero-free region constants"};
  app.require_subcommand(1);

  std::string out_dir = ".";

  // anneal
  auto* an = app.add_subcommand("anneal", "simulated-annealing search over spectral factors");
  int degree = 16, chains = 1;
  bool jitter = false;
  AnnealSchedule sched;
  std::string start_path;
  an->add_option("--degree", degree, "polynomial degree n")->required();
  an->add_option("--chains", chains, "independent chains")->capture_default_str();
  an->add_flag("--jitter", jitter, "sample per-chain schedules from the standard intervals");
  an->add_option("--seed", sched.seed, "master seed")->capture_default_str();
  an->add_option("--B", sched.B, "initial coefficient bound")->capture_default_str();
  an->add_option("--Z0", sched.Z0, "initial inverse temperature")->capture_default_str();
  an->add_option("--dZ", sched.dZ, "inverse-temperature increment")->capture_default_str();
  an->add_option("--K", sched.Kz, "number of Z values per step size")->capture_default_str();
  an->add_option("--M", sched.M, "trials per Z value (0 = 300 n)")->capture_default_str();
  an->add_option("--S0", sched.S0_init, "initial max step size")->capture_default_str();
  an->add_option("--lambda", sched.lambda, "step decay parameter")->capture_default_str();
  an->add_option("--S-min", sched.S_min, "terminal max step size")->capture_default_str();
  an->add_option("--start", start_path, "polish this polynomial file instead of a random start");
  an->add_option("--out", out_dir, "output directory")->capture_default_str();

  // objective
  auto* ob = app.add_subcommand("objective", "Landau objective and membership of a polynomial");
  std::string poly_path;
  ob->add_option("--poly", poly_path, "polynomial file")->required();

  // r0
  auto* r0 = app.add_subcommand("r0", "zero-free region constant for a polynomial");
  RegionParams params;
  params.t0_window = 1e4;  // reference-configuration default
  std::string zeros_path;
  bool fallback = false;
  int rounds = 0;
  auto add_region_flags = [&](CLI::App* cmd) {
    cmd->add_option("--T0", params.T0, "RH verification height")->capture_default_str();
    cmd->add_option("--t0", params.t0, "scale-parameter and k = 0 window cutoff")
        ->capture_default_str();
    cmd->add_option("--t0-window", params.t0_window,
                    "k >= 1 far-zero window cutoff (0 = same as --t0)")
        ->capture_default_str();
    cmd->add_option("--theta", params.theta, "kernel parameter")->capture_default_str();
    cmd->add_option("--r", params.r_init, "inner-loop restart value")->capture_default_str();
    cmd->add_option("--R", params.R_init, "established region constant")->capture_default_str();
    cmd->add_option("--Delta", params.Delta, "inner stop tolerance")->capture_default_str();
    cmd->add_option("--v", params.v, "outer improvement threshold")->capture_default_str();
    cmd->add_option("--eps-eta1", params.eps_eta1, "balance tolerance")->capture_default_str();
    cmd->add_option("--eps-window", params.eps_window, "far-window split parameter")
        ->capture_default_str();
    cmd->add_option("--zeros", zeros_path, "zeros table file");
    cmd->add_flag("--fallback-c30", fallback, "use the published height-zero constant (t0 = 1e5)");
  };
  r0->add_option("--poly", poly_path, "polynomial file")->required();
  r0->add_option("--rounds", rounds, "run exactly this many outer rounds (0 = until converged)")
      ->capture_default_str();
  r0->add_option("--out", out_dir, "output directory")->capture_default_str();
  add_region_flags(r0);

  // tables
  auto* tb = app.add_subcommand("tables", "regenerate the reference tables and diff them");
  std::string f16_path = std::string(ZETAFREE_DATA_DIR) + "/f16.poly";
  std::string f40_path = std::string(ZETAFREE_DATA_DIR) + "/f40.poly";
  double tol_scale = 1.0;
  tb->add_option("--f16", f16_path, "degree-16 polynomial file")->capture_default_str();
  tb->add_option("--f40", f40_path, "degree-40 polynomial file (empty to skip)")
      ->capture_default_str();
  tb->add_option("--tol", tol_scale, "tolerance scale factor (0 demands exact match)")
      ->capture_default_str();
  tb->add_option("--zeros", zeros_path, "zeros table file");
  tb->add_flag("--fallback-c30", fallback, "use the published height-zero constant");
  tb->add_option("--out", out_dir, "output directory")->capture_default_str();

  // plot
  auto* pl = app.add_subcommand("plot", "sample a polynomial on [pi/2, pi] as CSV");
  int samples = 2000;
  pl->add_option("--poly", poly_path, "polynomial file")->required();
  pl->add_option("--samples", samples, "sample count")->capture_default_str();
  pl->add_option("--out", out_dir, "output directory")->capture_default_str();

  // sweep
  auto* sw = app.add_subcommand("sweep", "R0 across a log-spaced T0 grid plus linear fit");
  double T0_min = 3.06e10, T0_max = 1e300;
  int points = 20;
  sw->add_option("--poly", poly_path, "polynomial file")->required();
  sw->add_option("--T0-min", T0_min, "grid start")->capture_default_str();
  sw->add_option("--T0-max", T0_max, "grid end")->capture_default_str();
  sw->add_option("--points", points, "grid size")->capture_default_str();
  sw->add_option("--out", out_dir, "output directory")->capture_default_str();
  add_region_flags(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (an->parsed()) return cmd_anneal(degree, chains, jitter, sched, start_path, out_dir);
    if (ob->parsed()) return cmd_objective(poly_path);
    if (r0->parsed()) return cmd_r0(poly_path, params, rounds, zeros_path, fallback, out_dir);
    if (tb->parsed()) return cmd_tables(f16_path, f40_path, tol_scale, zeros_path, fallback, out_dir);
    if (pl->parsed()) return cmd_plot(poly_path, samples, out_dir);
    if (sw->parsed()) {
      return cmd_sweep(poly_path, params, T0_min, T0_max, points, zeros_path, fallback, out_dir);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace zetafree
