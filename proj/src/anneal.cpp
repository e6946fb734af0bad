#include "anneal.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

namespace zetafree {

MemberDraw random_member(int n, double B, Rng& rng, long retry_cap) {
  if (n < 2) {
    // a_1 = 2c_1 <= 1 + c_1^2 = a_0 for n = 1, so membership is impossible;
    // fail the same way as an exhausted retry budget
    throw std::runtime_error("random_member: retry cap exhausted (degree " +
                             std::to_string(n) + " admits no member)");
  }
  MemberDraw draw;
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (long attempt = 0; attempt < retry_cap; ++attempt) {
    for (int k = 1; k <= n; ++k) c[k] = rng.uniform(0.0, B);
    SpectralFactor f = SpectralFactor::from(c);
    CosinePolynomial p = cosine_from_factor(f);
    if (membership_check(p).is_member) {
      draw.factor = std::move(f);
      draw.poly = std::move(p);
      draw.retries = attempt;
      return draw;
    }
  }
  throw std::runtime_error("random_member: retry cap exhausted at n = " + std::to_string(n) +
                           ", B = " + std::to_string(B));
}

bool metropolis_accept(double dG, double Z, Rng& rng) {
  if (dG <= 0.0) return true;
  if (std::isinf(Z)) return false;  // greedy descent
  return rng.uniform53() < std::exp(-Z * dG);
}

ChainState::ChainState(SpectralFactor factor, CosinePolynomial poly)
    : factor_(std::move(factor)), a_(poly.a), tail_(poly.A) {
  scratch_.resize(a_.size());
  objective_ = landau_objective(a_[0], a_[1], tail_);
}

bool ChainState::metropolis_step(int k, double s, double Z, Rng& rng) {
  scratch_ = a_;
  const double old_ck = factor_.c[k];
  const double old_tail = tail_;
  const double old_obj = objective_;

  tail_ += apply_step(factor_, a_, k, s);

  // membership: all coefficients nonnegative and a_1 > a_0
  bool ok = a_[1] > a_[0];
  if (ok) {
    for (double v : a_) {
      if (v < 0.0) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    a_ = scratch_;
    factor_.c[k] = old_ck;
    tail_ = old_tail;
    ++constraint_rejections_;
    return false;
  }

  const double g = landau_objective(a_[0], a_[1], tail_);
  if (metropolis_accept(g - old_obj, Z, rng)) {
    objective_ = g;
    ++accepted_;
    if (++steps_since_resync_ >= resync_interval_) resynchronize();
    return true;
  }
  a_ = scratch_;
  factor_.c[k] = old_ck;
  tail_ = old_tail;
  ++rejected_;
  return false;
}

void ChainState::set_resync_interval(long interval) {
  resync_interval_ = interval > 0 ? interval : 1;
}

void ChainState::resynchronize() {
  CosinePolynomial p = cosine_from_factor(factor_);
  a_ = p.a;
  tail_ = p.A;
  objective_ = landau_objective(a_[0], a_[1], tail_);
  steps_since_resync_ = 0;
}

namespace {

// The annealing schedule proper: for each step size S, a sweep of rising Z
// blocks followed by one greedy block, M trials each; then S shrinks.
ChainResult anneal_loop(ChainState state, int n, const AnnealSchedule& sched, Rng& rng) {
  state.set_resync_interval(sched.resync_interval);
  SpectralFactor best_factor = state.factor();
  double best = state.objective();

  const long M = sched.trials(n);
  const double inf = std::numeric_limits<double>::infinity();
  for (double S = sched.S0_init; S > sched.S_min; S /= (1.0 + sched.lambda)) {
    double Z = sched.Z0;
    for (int kz = 0; kz <= sched.Kz; ++kz) {
      const double z_now = (kz == sched.Kz) ? inf : Z;  // final block is greedy
      for (long t = 0; t < M; ++t) {
        int k = rng.uniform_int(1, n);
        double s = rng.uniform(-S, S);
        if (state.metropolis_step(k, s, z_now, rng) && state.objective() < best) {
          best = state.objective();
          best_factor = state.factor();
        }
      }
      Z += sched.dZ;
    }
  }

  ChainResult out;
  out.seed = sched.seed;
  out.schedule = sched;
  out.best_factor = std::move(best_factor);
  out.best_poly = normalized(cosine_from_factor(out.best_factor));
  out.best_objective = best;
  out.accepted_steps = state.accepted();
  out.rejected_steps = state.rejected();
  out.constraint_rejections = state.constraint_rejections();
  return out;
}

}  // namespace

ChainResult run_chain(int n, const AnnealSchedule& sched) {
  Rng rng(sched.seed);
  MemberDraw draw = random_member(n, sched.B, rng, sched.retry_cap);
  return anneal_loop(ChainState(std::move(draw.factor), std::move(draw.poly)), n, sched, rng);
}

ChainResult polish(const SpectralFactor& start, const AnnealSchedule& sched) {
  CosinePolynomial poly = cosine_from_factor(start);
  if (!membership_check(poly).is_member) {
    throw std::domain_error("polish: starting factor is not a member of P_n");
  }
  Rng rng(sched.seed);
  return anneal_loop(ChainState(start, std::move(poly)), start.n, sched, rng);
}

namespace {

AnnealSchedule jittered(const AnnealSchedule& base, int n, std::uint64_t seed) {
  // per-chain schedule sampled from the prescribed intervals
  Rng rng(splitmix64(seed ^ 0x6a09e667f3bcc908ULL));
  AnnealSchedule s = base;
  s.B = rng.uniform(100.0, 200.0);
  s.Z0 = rng.uniform(8.0, 16.0);
  s.dZ = rng.uniform(0.5, 2.0);
  s.Kz = rng.uniform53() < 0.5 ? 10 : 11;
  s.M = static_cast<long>(rng.uniform(250.0, 350.0) * n);
  s.S0_init = rng.uniform(2.5, 4.0);
  s.lambda = rng.uniform(0.015, 0.05);
  s.S_min = rng.uniform53() < 0.5 ? 1e-5 : 1e-6;
  return s;
}

}  // namespace

MultiChainResult run_chains(int n, const AnnealSchedule& sched_template, int chains,
                            bool parameter_jitter) {
  if (chains < 1) throw std::invalid_argument("run_chains: need at least one chain");
  MultiChainResult out;
  out.chains.resize(chains);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= chains) return;
      AnnealSchedule sched = sched_template;
      sched.seed = chain_seed(sched_template.seed, static_cast<std::uint64_t>(i));
      if (parameter_jitter) {
        std::uint64_t s = sched.seed;
        sched = jittered(sched_template, n, s);
        sched.seed = s;
      }
      ChainResult& slot = out.chains[i];
      try {
        slot = run_chain(n, sched);
      } catch (const std::exception& e) {
        slot.failed = true;
        slot.error = e.what();
        slot.seed = sched.seed;
        slot.schedule = sched;
      }
    }
  };
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 1; w < std::min<unsigned>(workers, static_cast<unsigned>(chains)); ++w) {
    jobs.push_back(std::async(std::launch::async, worker));
  }
  worker();
  for (auto& j : jobs) j.get();

  const ChainResult* best = nullptr;
  for (const ChainResult& c : out.chains) {
    if (c.failed) continue;
    if (best == nullptr || c.best_objective < best->best_objective) best = &c;
  }
  if (best == nullptr) throw std::runtime_error("run_chains: every chain failed");
  out.best = *best;
  return out;
}

}  // namespace zetafree
