#include "iterate.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "errors.hpp"

namespace zetafree {

ScaleParams scale_params(double r, double R, double T0, double t0, int n) {
  if (!(r > 0.0 && r < R)) throw std::domain_error("scale_params: requires 0 < r < R");
  ScaleParams s;
  s.eta0 = 1.0 / (r * std::log(T0));
  s.sigma0 = 1.0 - 1.0 / (R * std::log(n * T0 + t0));
  s.w0 = (1.0 - s.sigma0) / s.eta0;
  return s;
}

double w1_of(double eta1, double r, double R, int n, double t0) {
  if (!(eta1 > 0.0)) throw std::domain_error("w1_of: eta1 must be positive");
  const double x = 1.0 / (r * eta1);
  double log_term;
  if (x > 700.0) {
    log_term = x + std::log(n + t0 * std::exp(-x));  // exp(x) would overflow
  } else {
    log_term = std::log(n * std::exp(x) + t0);
  }
  return (1.0 / (R * eta1)) / log_term;
}

R0Computer::R0Computer(const CosinePolynomial& f, const RegionParams& params,
                       const ZeroSumProvider& zeros)
    : f_(f), params_(params), table_(theta_table(params.theta)) {
  MembershipReport rep = membership_check(f);
  if (!rep.is_member) {
    throw std::domain_error("R0Computer: polynomial is not a member of P_n");
  }
  if (!(params.T0 > params.t0 && params.t0 > 0.0)) {
    throw std::domain_error("R0Computer: requires T0 > t0 > 0");
  }
  const double window = params.t0_window > 0.0 ? params.t0_window : params.t0;
  c30_.reserve(f.n + 1);
  c30_.push_back(zeros.c30(0, params.T0, params.t0));
  for (int k = 1; k <= f.n; ++k) c30_.push_back(zeros.c30(k, params.T0, window));
}

R0Round R0Computer::compute(double r, double R) const {
  const int n = f_.n;
  R0Round round;
  round.scale = scale_params(r, R, params_.T0, params_.t0, n);
  round.kd = kappa_delta(round.scale.sigma0, round.scale.eta0, table_);

  ErrorContext ctx{f_,      table_,    round.scale, round.kd,  params_.T0,
                   params_.t0, r,      R,           c30_,      params_.eps_window};
  const ErrorCoeffs C = error_coeffs(ctx);

  const double a0 = f_.a[0], a1 = f_.a[1];
  const double k_w0 = k_integral(round.scale.w0, table_, a0, a1, params_.k_tol);
  round.k_w0 = k_w0;

  const double eta0 = round.scale.eta0;
  auto k_at = [&](double eta1) {
    return k_integral(w1_of(eta1, r, R, n, params_.t0), table_, a0, a1, params_.k_tol);
  };
  // balance defect: zero where K(w1) = K(w0) - C(eta1); positive for small
  // eta1 (w1 sits above w0) and nonpositive at eta0 since C(eta0) <= 0
  auto defect = [&](double eta1) { return k_at(eta1) - (k_w0 - C.at(eta1)); };

  Eta1Result er;
  double hi = eta0, d_hi = defect(hi);
  if (std::abs(d_hi) <= params_.eps_eta1) {
    er.eta1 = hi;  // includes the degenerate eps = infinity case
  } else {
    double lo = eta0 * 1e-6, d_lo = defect(lo);
    if (!(d_lo > 0.0) || !(d_hi < 0.0)) {
      // no crossing: fall back to the endpoint with the larger denominator
      double den_lo = std::min(k_at(lo), k_w0 - C.at(lo));
      double den_hi = std::min(k_at(hi), k_w0 - C.at(hi));
      er.eta1 = den_lo > den_hi ? lo : hi;
      er.balanced = false;
    } else {
      for (int it = 0; it < 200 && (hi - lo) > 1e-12 * eta0; ++it) {
        double mid = 0.5 * (lo + hi);
        if (defect(mid) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      er.eta1 = 0.5 * (lo + hi);
    }
  }
  er.k_w1 = k_at(er.eta1);
  er.k_w0_minus_c = k_w0 - C.at(er.eta1);
  er.denominator = std::min(er.k_w1, er.k_w0_minus_c);
  er.balance_gap = std::abs(er.k_w1 - er.k_w0_minus_c);
  er.balanced = er.balance_gap <= params_.eps_eta1;
  round.eta1 = er;

  if (!(er.denominator > 0.0)) {
    throw ConstraintError("r0: denominator K(w1) / K(w0) - C(eta1) not positive");
  }
  round.R0 = 0.5 * f_.A * table_.g1 * (1.0 - round.kd.kappa) / er.denominator;
  return round;
}

IterationResult R0Computer::run(int forced_rounds) const {
  IterationResult out;
  double R = params_.R_init;
  double prev = 0.0;
  bool have_prev = false;
  const int max_outer = 100;
  while (true) {
    double r = params_.r_init;
    R0Round round;
    for (int inner = 0;; ++inner) {
      round = compute(r, R);
      if (std::abs(round.R0 - r) < params_.Delta) break;
      if (inner >= 200) {
        throw std::runtime_error("run_iteration: inner loop failed to converge in 200 steps");
      }
      r = 0.5 * (r + round.R0);
    }
    out.rows.push_back({R, r, round.scale.eta0, round.eta1.eta1, round.kd.kappa,
                        round.kd.delta, round.R0});
    out.R0 = round.R0;
    if (forced_rounds > 0) {
      if (static_cast<int>(out.rows.size()) >= forced_rounds) {
        out.converged = true;
        return out;
      }
    } else if (have_prev && prev - round.R0 <= params_.v) {
      out.converged = true;
      return out;
    }
    if (static_cast<int>(out.rows.size()) >= max_outer) {
      out.converged = false;
      return out;
    }
    prev = round.R0;
    have_prev = true;
    R = round.R0;
  }
}

IterationResult run_iteration(const CosinePolynomial& f, const RegionParams& params,
                              const ZeroSumProvider& zeros, int forced_rounds) {
  return R0Computer(f, params, zeros).run(forced_rounds);
}

SweepResult t0_sweep(const CosinePolynomial& f, const std::vector<double>& T0_list,
                     const RegionParams& params, const ZeroSumProvider& zeros) {
  if (T0_list.empty()) throw std::invalid_argument("t0_sweep: empty T0 list");
  SweepResult out;
  out.points.resize(T0_list.size());

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= T0_list.size()) return;
      SweepPoint& pt = out.points[i];
      pt.T0 = T0_list[i];
      try {
        if (!(pt.T0 > params.t0)) throw std::domain_error("T0 must exceed t0");
        RegionParams p = params;
        p.T0 = pt.T0;
        pt.R0 = run_iteration(f, p, zeros).R0;
        pt.ok = true;
      } catch (const std::exception& e) {
        pt.ok = false;
        pt.error = e.what();
      }
    }
  };
  for (unsigned w = 1; w < workers; ++w) jobs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& j : jobs) j.get();

  // least squares for R0 = a + b x with x = 1 / log T0
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long m = 0;
  for (const SweepPoint& pt : out.points) {
    if (!pt.ok) continue;
    double x = 1.0 / std::log(pt.T0);
    sx += x;
    sy += pt.R0;
    sxx += x * x;
    sxy += x * pt.R0;
    ++m;
  }
  double det = m * sxx - sx * sx;
  if (m >= 2 && std::abs(det) > 1e-30) {
    out.a_fit = (sy * sxx - sx * sxy) / det;
    out.b_fit = (m * sxy - sx * sy) / det;
    out.fit_ok = true;
    for (const SweepPoint& pt : out.points) {
      if (pt.ok) out.residuals.push_back(pt.R0 - (out.a_fit + out.b_fit / std::log(pt.T0)));
    }
  }
  return out;
}

double theorem_round_up(double R0, int decimals) {
  double scale = std::pow(10.0, decimals);
  return std::ceil(R0 * scale) / scale;
}

}  // namespace zetafree
