#pragma once

#include <string>
#include <vector>

#include "kadiri.hpp"
#include "trigpoly.hpp"
#include "zeros.hpp"

namespace zetafree {

struct RegionParams {
  double T0 = 3.06e10;      // height to which RH is verified
  double t0 = 1e5;          // cutoff in the scale parameters and the k = 0 window
  double t0_window = 0.0;   // cutoff of the k >= 1 far-zero windows; 0 means t0
  double theta = 1.85573;   // kernel parameter
  double r_init = 5.0;      // inner-loop lower bound restart value
  double R_init = 5.7;      // established region constant
  double Delta = 1e-6;      // inner stop: |R0 - r| < Delta
  double v = 5e-7;          // outer stop: improvement <= v
  double eps_eta1 = 1e-3;   // balance tolerance for the eta1 search
  double eps_window = 1e-3; // window split parameter in the far-zero bound
  double k_tol = 1e-10;     // quadrature tolerance for K(w, theta)
};

ScaleParams scale_params(double r, double R, double T0, double t0, int n);

// w1 = (1 / (R eta1)) / log(n exp(1/(r eta1)) + t0), evaluated in log space
// when exp would overflow.
double w1_of(double eta1, double r, double R, int n, double t0);

struct Eta1Result {
  double eta1 = 0.0;
  double k_w1 = 0.0;
  double k_w0_minus_c = 0.0;
  double denominator = 0.0;  // min of the two branches
  double balance_gap = 0.0;  // |K(w1) - (K(w0) - C(eta1))|
  bool balanced = false;     // gap within eps_eta1
};

struct R0Round {
  double R0 = 0.0;
  ScaleParams scale;
  KappaDelta kd;
  Eta1Result eta1;
  double k_w0 = 0.0;
};

struct IterationRow {
  double R = 0.0, r = 0.0, eta0 = 0.0, eta1 = 0.0, kappa = 0.0, delta = 0.0, R0 = 0.0;
};

struct IterationResult {
  double R0 = 0.0;
  std::vector<IterationRow> rows;
  bool converged = false;
};

// Caches the theta table and the c30 values for one (polynomial, params,
// zeros) configuration, then runs the two-level iteration.
class R0Computer {
 public:
  R0Computer(const CosinePolynomial& f, const RegionParams& params,
             const ZeroSumProvider& zeros);

  // One evaluation of the improved bound at fixed (r, R).
  R0Round compute(double r, double R) const;

  // Inner loop: r <- (r + R0)/2 until |R0 - r| < Delta.  Outer loop: R <- R0
  // until the improvement is <= v (that round is still emitted).  When
  // forced_rounds > 0 runs exactly that many outer rounds instead.
  IterationResult run(int forced_rounds = 0) const;

  const ThetaTable& table() const { return table_; }
  const std::vector<double>& c30_values() const { return c30_; }
  const RegionParams& params() const { return params_; }

 private:
  CosinePolynomial f_;
  RegionParams params_;
  ThetaTable table_;
  std::vector<double> c30_;
};

IterationResult run_iteration(const CosinePolynomial& f, const RegionParams& params,
                              const ZeroSumProvider& zeros, int forced_rounds = 0);

struct SweepPoint {
  double T0 = 0.0;
  double R0 = 0.0;
  bool ok = false;
  std::string error;
};

struct SweepResult {
  double a_fit = 0.0;  // R0 ~ a_fit + b_fit / log T0
  double b_fit = 0.0;
  bool fit_ok = false;
  std::vector<SweepPoint> points;
  std::vector<double> residuals;  // for successful points, in point order
};

// Runs the iteration per T0 (in parallel) and fits R0 against 1/log T0.
SweepResult t0_sweep(const CosinePolynomial& f, const std::vector<double>& T0_list,
                     const RegionParams& params, const ZeroSumProvider& zeros);

// Zero-free-region constants must err upward: round up at `decimals`.
double theorem_round_up(double R0, int decimals = 6);

}  // namespace zetafree
