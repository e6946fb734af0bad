#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rng.hpp"
#include "trigpoly.hpp"

namespace zetafree {

struct AnnealSchedule {
  double B = 150.0;        // initial coefficient bound, c_k ~ U[0, B]
  double Z0 = 12.0;        // initial inverse temperature
  double dZ = 1.0;         // inverse-temperature increment
  int Kz = 10;             // number of Z values per step size
  long M = 0;              // trials per Z value; 0 means 300 * n
  double S0_init = 3.0;    // initial max step size
  double lambda = 0.03;    // step decay: S /= (1 + lambda)
  double S_min = 1e-5;     // outer loop runs while S > S_min
  std::uint64_t seed = 1;
  long retry_cap = 1000000;        // random_member retry budget
  long resync_interval = 100000;   // accepted steps between full recomputes

  long trials(int n) const { return M > 0 ? M : 300L * n; }
};

struct ChainResult {
  SpectralFactor best_factor;
  CosinePolynomial best_poly;  // normalized, a_0 = 1
  double best_objective = 0.0;
  long accepted_steps = 0;
  long rejected_steps = 0;
  long constraint_rejections = 0;
  std::uint64_t seed = 0;
  AnnealSchedule schedule;  // as run (after jitter, if any)
  bool failed = false;
  std::string error;
};

// Draws c_k ~ U[0, B] (c_0 = 1) until the autocorrelation lands in P_n;
// fails after sched.retry_cap draws.
struct MemberDraw {
  SpectralFactor factor;
  CosinePolynomial poly;
  long retries = 0;
};
MemberDraw random_member(int n, double B, Rng& rng, long retry_cap = 1000000);

// The acceptance rule in isolation: improvements always kept, otherwise
// kept with probability exp(-Z dG); Z = +inf is greedy descent.
bool metropolis_accept(double dG, double Z, Rng& rng);

// Mutable state of one annealing chain, exposed for tests of the stepping
// contract (revert on constraint violation is bit-exact).
class ChainState {
 public:
  ChainState(SpectralFactor factor, CosinePolynomial poly);

  // One proposal at index k with step s: returns true if kept.  Constraint
  // violations restore the previous state exactly and count separately.
  bool metropolis_step(int k, double s, double Z, Rng& rng);

  double objective() const { return objective_; }
  const SpectralFactor& factor() const { return factor_; }
  const std::vector<double>& coefficients() const { return a_; }
  long accepted() const { return accepted_; }
  long rejected() const { return rejected_; }
  long constraint_rejections() const { return constraint_rejections_; }

  // Full recomputation of a from c, capping incremental drift.
  void resynchronize();
  void set_resync_interval(long interval);

 private:
  SpectralFactor factor_;
  std::vector<double> a_;
  double tail_ = 0.0;
  double objective_ = 0.0;
  std::vector<double> scratch_;
  long accepted_ = 0, rejected_ = 0, constraint_rejections_ = 0;
  long steps_since_resync_ = 0;
  long resync_interval_ = 100000;
};

// Full schedule from a random member.  Deterministic in (n, sched).
ChainResult run_chain(int n, const AnnealSchedule& sched);

// Same loop from a given starting factor (must be a member).
ChainResult polish(const SpectralFactor& start, const AnnealSchedule& sched);

struct MultiChainResult {
  ChainResult best;
  std::vector<ChainResult> chains;
};

// Independent chains with seeds chain_seed(sched.seed, i); when jitter is
// on, each chain samples its own schedule from the prescribed intervals.
// Failures are recorded per chain, not fatal.
MultiChainResult run_chains(int n, const AnnealSchedule& sched_template, int chains,
                            bool parameter_jitter);

}  // namespace zetafree
