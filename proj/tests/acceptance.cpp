// Acceptance suite: checks the artifact's headline numbers end to end and
// prints one PASS/FAIL line per criterion.  Exit status 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstdarg>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "anneal.hpp"
#include "iterate.hpp"
#include "kadiri.hpp"
#include "poly_io.hpp"
#include "quadrature.hpp"
#include "rng.hpp"
#include "trigpoly.hpp"
#include "zeros.hpp"

using namespace zetafree;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string data(const char* name) { return std::string(ZETAFREE_DATA_DIR) + "/" + name; }

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

RegionParams reference_params() {
  RegionParams p;
  p.t0_window = 1e4;
  return p;
}

// ---- criterion 1: Landau objective golden values ----
void criterion_1(const PolynomialFile& f16, const PolynomialFile& f40) {
  double g16 = landau_objective(f16.poly);
  double g40 = landau_objective(f40.poly);
  bool ok = std::abs(g16 - 34.49997) <= 5e-5;
  ok &= g40 <= 34.488992000856;
  ok &= std::abs(g40 - 34.488992000856) <= 1e-9;
  ok &= std::abs(f16.poly.A - 3.523323140225021) <= 1e-10;
  ok &= std::abs(f40.poly.A - 3.490002852278399) <= 1e-10;
  report(1, ok,
         fmt("objective goldens: G16 = %.7f, G40 = %.12f, A16 = %.15f, A40 = %.15f", g16, g40,
             f16.poly.A, f40.poly.A));
}

// ---- criterion 2: spectral-factor consistency ----
void criterion_2(const PolynomialFile& f16, const PolynomialFile& f40) {
  bool ok = true;
  double worst = 0.0;
  for (const PolynomialFile* pf : {&f16, &f40}) {
    CosinePolynomial from_c = normalized(cosine_from_factor(*pf->factor));
    for (int k = 0; k <= pf->poly.n; ++k) {
      // relative error with a unit floor: the printed 15-digit c values
      // cannot pin coefficients below ~1e-13 of the polynomial scale
      double err = std::abs(from_c.a[k] - pf->poly.a[k]) / std::max(std::abs(pf->poly.a[k]), 1.0);
      worst = std::max(worst, err);
      ok &= err <= 1e-9;
    }
  }
  report(2, ok, fmt("factor-derived coefficients match printed tables, worst %.3e", worst));
}

// ---- criterion 3: reference trace reproduction ----
void criterion_3(const PolynomialFile& f16, const ZeroSumProvider& zeros) {
  struct Row {
    double R, r, eta0, eta1, kappa, delta, R0;
  };
  const Row golden[7] = {
      {5.7000000, 5.58682, 7.41347, 0.861315, 0.440100, 0.620251, 5.5868212},
      {5.5868212, 5.57486, 7.42938, 0.876546, 0.439964, 0.620293, 5.5748558},
      {5.5748558, 5.57357, 7.43109, 0.878187, 0.439949, 0.620298, 5.5735676},
      {5.5735676, 5.57343, 7.43128, 0.878364, 0.439948, 0.620298, 5.5734286},
      {5.5734286, 5.57341, 7.43130, 0.878383, 0.439948, 0.620298, 5.5734136},
      {5.5734136, 5.57341, 7.43130, 0.878385, 0.439948, 0.620298, 5.5734120},
      {5.5734120, 5.57341, 7.43130, 0.878386, 0.439948, 0.620298, 5.5734118},
  };
  IterationResult res = run_iteration(f16.poly, reference_params(), zeros);
  bool ok = res.rows.size() == 7 && res.converged;
  if (ok) {
    for (int i = 0; i < 7; ++i) {
      const IterationRow& row = res.rows[i];
      ok &= std::abs(row.R - golden[i].R) < 5e-7;          // 7 significant digits
      ok &= std::abs(row.eta0 * 1e3 - golden[i].eta0) < 5e-6;  // 6 significant digits
      ok &= std::abs(row.eta1 * 1e3 - golden[i].eta1) < 1e-6;  // 6 significant digits
      ok &= std::abs(row.kappa - golden[i].kappa) < 1e-6;      // 6 decimals
      ok &= std::abs(row.delta - golden[i].delta) < 1e-6;      // 6 decimals
      ok &= std::abs(row.R0 - golden[i].R0) < 5e-7;            // 7 significant digits
    }
  }
  ok &= std::abs(res.R0 - 5.5734118) <= 1e-6;
  IterationResult extra = run_iteration(f16.poly, reference_params(), zeros, 8);
  ok &= std::abs(extra.R0 - 5.57341178) <= 2e-7;
  report(3, ok,
         fmt("reference trace: %zu rows, final R0 = %.9f, 8th round %.9f", res.rows.size(),
             res.R0, extra.R0));
}

// ---- criterion 4: theorem constant ----
void criterion_4(const PolynomialFile& f16, const ZeroSumProvider& zeros) {
  IterationResult res = run_iteration(f16.poly, reference_params(), zeros);
  double rounded = theorem_round_up(res.R0);
  bool ok = std::abs(rounded - 5.573412) < 1e-12;
  report(4, ok, fmt("theorem-rounded constant = %.6f", rounded));
}

// ---- criterion 5: alternate configurations ----
void criterion_5(const PolynomialFile& f16, const PolynomialFile& f40,
                 const ZeroSumProvider& zeros) {
  RegionParams p40 = reference_params();
  p40.theta = 1.855;
  IterationResult r40 = run_iteration(f40.poly, p40, zeros);
  bool ok40 = std::abs(r40.R0 - 5.57724) <= 1e-4;

  RegionParams p11 = reference_params();
  p11.T0 = 3e11;
  p11.theta = 1.85567;
  IterationResult r11 = run_iteration(f16.poly, p11, zeros);
  bool ok11 = std::abs(r11.R0 - 5.5666305) <= 1e-6;
  report(5, ok40 && ok11,
         fmt("alternates: R0(F40, 1.855) = %.7f, R0(F16, 3e11) = %.7f", r40.R0, r11.R0));
}

// ---- criterion 6: sweep fit ----
void criterion_6(const PolynomialFile& f16, const ZeroSumProvider& zeros) {
  RegionParams p = reference_params();
  p.theta = 1.8552;
  std::vector<double> grid;
  const double l0 = std::log(3e10), l1 = std::log(1e300);
  for (int i = 0; i < 20; ++i) grid.push_back(std::exp(l0 + (l1 - l0) * i / 19.0));
  SweepResult res = t0_sweep(f16.poly, grid, p, zeros);
  bool ok = res.fit_ok;
  ok &= std::abs(res.a_fit - 5.4912) <= 0.01;
  ok &= std::abs(res.b_fit - 2.0185) <= 0.05;
  // internal consistency: residual at the low end below 0.01
  double lo_res = 0.0;
  for (const SweepPoint& pt : res.points) {
    if (pt.ok && pt.T0 == grid.front()) lo_res = pt.R0 - (res.a_fit + res.b_fit / std::log(pt.T0));
  }
  ok &= std::abs(lo_res) < 0.01;
  report(6, ok,
         fmt("sweep fit: R0 ~ %.4f + %.4f / log T0 (20 points, low-end residual %.2e)", res.a_fit,
             res.b_fit, lo_res));
}

// ---- criterion 7: zero-sum bound ----
void criterion_7() {
  bool ok = true;
  std::string detail;
  const char* big = std::getenv("ZETAFREE_BIG_ZEROS");
  if (big != nullptr && std::strlen(big) > 0) {
    ZeroTable t = load_zeros(big);
    double c30 = sigma_zero_bound(1e5, t);
    ok &= c30 <= 0.00027;
    ok &= c30 >= 0.00027 * 0.9;
    detail = fmt("covering table: c30(0, 1e5) = %.6f vs published 0.00027", c30);
  } else {
    // desk-scale substitute: monotonicity plus hand-computed partial sums
    ZeroTable t = load_zeros(data("zeros_first120.txt"));
    double g1 = t.gammas[0], g2 = t.gammas[1];
    ok &= std::abs(sigma_zero_bound(15.0, t) - 2.0 * (0.023105 - 1.0 / (g1 * g1))) <= 1e-12;
    ok &= std::abs(sigma_zero_bound(22.0, t) -
                   2.0 * (0.023105 - 1.0 / (g1 * g1) - 1.0 / (g2 * g2))) <= 1e-12;
    double prev = sigma_zero_bound(1.0, t);
    for (double t0 = 5.0; t0 <= t.max_gamma; t0 += 3.7) {
      double now = sigma_zero_bound(t0, t);
      ok &= now <= prev + 1e-18;
      prev = now;
    }
    ok &= ZeroSumProvider::fallback().c30(0, 3.06e10, 1e5) == 0.00027;
    detail = "substitute property (bundled 120 zeros): partial sums to 1e-12, monotone in t0";
  }
  report(7, ok, detail);
}

// ---- criterion 8: property suites ----
void criterion_8(const PolynomialFile& f16) {
  bool ok = true;
  std::string fails;

  // h'' finite differences, normalized by the sup of |h''| (pointwise
  // relative error is dominated by cancellation noise near its zeros)
  {
    const double theta = 1.85573, d1 = d1_of(theta), step = 1e-5;
    const double scale = find_max_abs([&](double u) { return h2_theta(theta, u); }, 0.0, d1, 2000);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      double u = d1 * i / 100.0;
      double fd =
          (h_theta(theta, u + step) - 2.0 * h_theta(theta, u) + h_theta(theta, u - step)) /
          (step * step);
      worst = std::max(worst, std::abs(fd - h2_theta(theta, u)) / scale);
    }
    if (worst >= 1e-5) {
      ok = false;
      fails += " h''-fd";
    }
  }

  // incremental vs batch autocorrelation
  {
    Rng rng(424242);
    std::vector<double> c(17, 0.0);
    c[0] = 1.0;
    for (int k = 1; k <= 16; ++k) c[k] = rng.uniform(-2.0, 2.0);
    SpectralFactor f = SpectralFactor::from(c);
    std::vector<double> a = cosine_from_factor(f).a;
    for (int i = 0; i < 10000; ++i) {
      apply_step(f, a, rng.uniform_int(1, 16), rng.uniform(-0.05, 0.05));
    }
    CosinePolynomial exact = cosine_from_factor(f);
    double amax = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      amax = std::max(amax, std::abs(exact.a[i]));
      diff = std::max(diff, std::abs(a[i] - exact.a[i]));
    }
    if (diff >= 1e-9 * amax) {
      ok = false;
      fails += " incremental";
    }
  }

  const ThetaTable table = theta_table(1.85573);
  ScaleParams scale = scale_params(5.5734118, 5.5734120, 3.06e10, 1e5, 16);
  KappaDelta kd = kappa_delta(scale.sigma0, scale.eta0, table);

  // K monotone in w on [w0, w0 + 1]
  {
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 50; ++i) {
      double w = scale.w0 + i / 50.0;
      double k = k_integral(w, table, f16.poly.a[0], f16.poly.a[1]);
      if (k <= prev) {
        ok = false;
        fails += " K-monotone";
        break;
      }
      prev = k;
    }
  }

  // C(eta) nonpositive and decreasing on (0, eta0]
  {
    ZeroSumProvider zp = ZeroSumProvider::fallback();
    std::vector<double> c30s;
    c30s.push_back(zp.c30(0, 3.06e10, 1e5));
    for (int k = 1; k <= 16; ++k) c30s.push_back(zp.c30(k, 3.06e10, 1e4));
    ErrorContext ctx{f16.poly, table, scale, kd, 3.06e10, 1e5, 5.5734118, 5.5734120, c30s, 1e-3};
    ErrorCoeffs coeffs = error_coeffs(ctx);
    double prev = 0.0;
    for (int i = 1; i <= 50; ++i) {
      double eta = scale.eta0 * i / 50.0;
      double v = coeffs.at(eta);
      if (v > 0.0 || v > prev + 1e-18) {
        ok = false;
        fails += " C-sign";
        break;
      }
      prev = v;
    }
  }

  // m_star dominates direct quadrature for 20 random z
  {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      double z = -rng.uniform53() * 0.999;
      double direct =
          integrate_abs([&](double u) { return h2_theta(1.85573, u) * std::exp(-z * u); }, 0.0,
                        table.d1, 1e-11)
              .value;
      if (m_star(z, table) < direct * (1.0 - 1e-9)) {
        ok = false;
        fails += " m_star";
        break;
      }
    }
  }

  // kappa/delta constraint displays at solved points
  {
    for (double R : {5.7, 5.5868212, 5.5734120}) {
      ScaleParams s = scale_params(5.0, R, 3.06e10, 1e5, 16);
      KappaDelta k = kappa_delta(s.sigma0, s.eta0, table);
      double inv = 1.0 / k.kappa;
      bool c1 = 1.0 / k.delta + 1.0 / (0.99 + k.delta) <= inv;
      bool c2 = inv <= 1.0 / std::pow(k.delta, 3) + 1.0 / std::pow(1.0 + k.delta, 3);
      bool c3 = k.delta >= 0.5 * (std::sqrt(5.0) - 1.0) && k.delta <= 0.866;
      if (!(c1 && c2 && c3)) {
        ok = false;
        fails += " kappa-delta";
        break;
      }
    }
  }

  // Metropolis acceptance frequency within 3 sigma over 1e4 stub trials
  {
    Rng rng(1009);
    const double Z = 1.7, dG = 0.9, p = std::exp(-Z * dG);
    int kept = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) kept += metropolis_accept(dG, Z, rng) ? 1 : 0;
    double sigma = std::sqrt(p * (1.0 - p) * trials);
    if (std::abs(kept - p * trials) > 3.0 * sigma) {
      ok = false;
      fails += " metropolis";
    }
  }

  report(8, ok, ok ? "property suites: all hold" : "property suites failed:" + fails);
}

// ---- criterion 9: stochastic search (flaky-tolerant bands) ----
void criterion_9() {
  AnnealSchedule sched8;
  sched8.seed = 20;
  MultiChainResult r8 = run_chains(8, sched8, 20, false);
  bool ok8 = r8.best.best_objective <= 34.60;

  AnnealSchedule sched16;
  sched16.seed = 16;
  MultiChainResult r16 = run_chains(16, sched16, 32, true);
  bool ok16 = r16.best.best_objective <= 34.52;
  report(9, ok8 && ok16,
         fmt("search: best(n=8, 20 chains) = %.8f (<= 34.60), best(n=16, 32 jittered) = %.8f "
             "(<= 34.52)",
             r8.best.best_objective, r16.best.best_objective));
}

// ---- criterion 10: classical configuration sanity ----
void criterion_10() {
  PolynomialFile p4 = read_polynomial(data("poly4_kadiri.poly"));
  ZeroTable t = load_zeros(data("zeros_first120.txt"));
  RegionParams p;
  p.T0 = 3330657430.697;
  p.t0 = 10.0;
  p.t0_window = 0.0;
  p.theta = 1.848;
  p.R_init = 9.645908801;
  p.Delta = 1e-5;
  p.v = 5e-6;
  IterationResult res = run_iteration(p4.poly, p, ZeroSumProvider::from_table(std::move(t)));
  bool ok = res.converged && res.R0 <= 5.697 && res.R0 > 5.0;
  report(10, ok, fmt("classical degree-4 configuration converges to R0 = %.7f <= 5.697", res.R0));
}

}  // namespace

int main() {
  try {
    PolynomialFile f16 = read_polynomial(data("f16.poly"));
    PolynomialFile f40 = read_polynomial(data("f40.poly"));
    ZeroSumProvider zeros = ZeroSumProvider::fallback();

    criterion_1(f16, f40);
    criterion_2(f16, f40);
    criterion_3(f16, zeros);
    criterion_4(f16, zeros);
    criterion_5(f16, f40, zeros);
    criterion_6(f16, zeros);
    criterion_7();
    criterion_8(f16);
    criterion_9();
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", g_failures);
  return 1;
}
