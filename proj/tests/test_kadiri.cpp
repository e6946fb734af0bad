#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "iterate.hpp"
#include "kadiri.hpp"
#include "poly_io.hpp"
#include "quadrature.hpp"
#include "rng.hpp"
#include "zeros.hpp"

using namespace zetafree;

namespace {

const double kTheta = 1.85573;

const ThetaTable& table_1_85573() {
  static const ThetaTable t = theta_table(kTheta);
  return t;
}

CosinePolynomial f16() {
  return read_polynomial(std::string(ZETAFREE_DATA_DIR) + "/f16.poly").poly;
}

// context pieces for the reference configuration at given (r, R)
struct Config {
  ScaleParams scale;
  KappaDelta kd;
  std::vector<double> c30;
  CosinePolynomial poly;

  Config(double r, double R) : poly(f16()) {
    scale = scale_params(r, R, 3.06e10, 1e5, 16);
    kd = kappa_delta(scale.sigma0, scale.eta0, table_1_85573());
    ZeroSumProvider zp = ZeroSumProvider::fallback();
    c30.push_back(zp.c30(0, 3.06e10, 1e5));
    for (int k = 1; k <= 16; ++k) c30.push_back(zp.c30(k, 3.06e10, 1e4));
  }

  ErrorContext ctx(double r, double R) const {
    return ErrorContext{poly, table_1_85573(), scale, kd, 3.06e10, 1e5, r, R, c30, 1e-3};
  }
};

}  // namespace

TEST_CASE("h and g1 closed forms agree at u = 0") {
  for (double theta : {1.85573, 1.855, 1.9, 2.2, 3.0}) {
    CHECK(h_theta(theta, 0.0) == doctest::Approx(g1_closed(theta)).epsilon(1e-12));
  }
  // tan(3pi/4) = cot(3pi/4) = -1, so g1 = 2 (3 + 3 pi)
  CHECK(g1_closed(3.0 * M_PI / 4.0) == doctest::Approx(6.0 + 6.0 * M_PI).epsilon(1e-14));
  CHECK_THROWS_AS(h_theta(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(h_theta(3.2, 0.0), std::domain_error);
}

TEST_CASE("h'' matches central finite differences of h") {
  // At step 1e-5 the second difference of O(10)-sized h values carries
  // ~3e-4 of cancellation noise, so the comparison is normalized by the
  // sup of |h''| rather than pointwise (h'' crosses zero on [0, d1]).
  const double d1 = d1_of(kTheta);
  const double step = 1e-5;
  const double scale = find_max_abs([&](double u) { return h2_theta(kTheta, u); }, 0.0, d1, 2000);
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    double u = d1 * i / 100.0;
    double fd = (h_theta(kTheta, u + step) - 2.0 * h_theta(kTheta, u) + h_theta(kTheta, u - step)) /
                (step * step);
    worst = std::max(worst, std::abs(fd - h2_theta(kTheta, u)) / scale);
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("theta_table: fields and domain guard") {
  const ThetaTable& t = table_1_85573();
  CHECK(t.d1 == doctest::Approx(-2.0 * kTheta / std::tan(kTheta)).epsilon(1e-15));
  CHECK(t.d1 > 0.0);
  CHECK(t.d1 <= 1.91094);
  CHECK(t.g1 == doctest::Approx(h_theta(kTheta, 0.0)).epsilon(1e-12));
  CHECK(t.t_star == doctest::Approx(2.2054244317).epsilon(1e-9));
  CHECK(t.c_const == doctest::Approx(0.462935).epsilon(1e-5));
  CHECK(t.m > 0.0);
  CHECK(t.M0 >= 0.0);
  // moments shrink against the interval length: M_{k+1} <= M_k d1
  CHECK(t.M1 <= t.M0 * t.d1 * (1.0 + 1e-12));
  CHECK(t.M2 <= t.M1 * t.d1 * (1.0 + 1e-12));
  CHECK(t.M3 <= t.M2 * t.d1 * (1.0 + 1e-12));
  // m dominates |h''| on a dense grid
  for (int i = 0; i <= 20000; ++i) {
    double u = t.d1 * i / 20000.0;
    CHECK(std::abs(h2_theta(kTheta, u)) <= t.m * (1.0 + 1e-12));
  }
  CHECK_THROWS_AS(theta_table(1.8), std::domain_error);
}

TEST_CASE("theta_table: stable under quadrature tolerance tightening") {
  ThetaTable coarse = theta_table(1.855, 1e-10);
  ThetaTable fine = theta_table(1.855, 1e-12);
  CHECK(coarse.M0 == doctest::Approx(fine.M0).epsilon(1e-9));
  CHECK(coarse.M1 == doctest::Approx(fine.M1).epsilon(1e-9));
  CHECK(coarse.M2 == doctest::Approx(fine.M2).epsilon(1e-9));
  CHECK(coarse.M3 == doctest::Approx(fine.M3).epsilon(1e-9));
  CHECK(coarse.m == doctest::Approx(fine.m).epsilon(1e-9));
}

TEST_CASE("m_star: collapse at z = 0 and upper-bound property") {
  const ThetaTable& t = table_1_85573();
  CHECK(m_star(0.0, t) == doctest::Approx(t.M0).epsilon(1e-11));
  CHECK(m_star(-0.5, t) >= t.M0);
  CHECK_THROWS_AS(m_star(0.5, t), std::domain_error);
  CHECK_THROWS_AS(m_star(-1.5, t), std::domain_error);

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    double z = -rng.uniform53() * 0.999;  // z in (-1, 0]
    double direct = integrate_abs(
                        [&](double u) { return h2_theta(kTheta, u) * std::exp(-z * u); }, 0.0,
                        t.d1, 1e-11)
                        .value;
    double bound = m_star(z, t);
    CHECK(bound >= direct * (1.0 - 1e-9));
  }
  // tightness probe at z = -0.9: the cubic majorant overshoots by little
  double direct09 = integrate_abs(
                        [&](double u) { return h2_theta(kTheta, u) * std::exp(0.9 * u); }, 0.0,
                        t.d1, 1e-11)
                        .value;
  double margin = m_star(-0.9, t) / direct09 - 1.0;
  CHECK(margin >= 0.0);
  CHECK(margin < 2e-2);
}

TEST_CASE("kappa_delta: reference values and constraint displays") {
  // converged-round configuration
  Config c7(5.5734118, 5.5734120);
  CHECK(c7.kd.delta == doctest::Approx(0.620298).epsilon(1e-6));
  CHECK(c7.kd.kappa == doctest::Approx(0.439948).epsilon(1e-6));

  Config c1(5.58682, 5.7);
  CHECK(c1.kd.delta == doctest::Approx(0.620251).epsilon(1e-6));
  CHECK(c1.kd.kappa == doctest::Approx(0.440100).epsilon(1e-6));
  CHECK(c1.scale.eta0 * 1e3 == doctest::Approx(7.41347).epsilon(1e-6));

  // solved point: kappa2 = kappa3 and both admissibility displays hold
  for (const Config* c : {&c1, &c7}) {
    double k2 = kappa2_of(c->kd.delta, c->scale.sigma0, c->scale.eta0, table_1_85573());
    double k3 = kappa3_of(c->kd.delta, c->scale.sigma0, c->scale.eta0, table_1_85573());
    CHECK(std::abs(k2 - k3) < 1e-9);
    double inv = 1.0 / c->kd.kappa;
    CHECK(1.0 / c->kd.delta + 1.0 / (0.99 + c->kd.delta) <= inv);
    CHECK(inv <= 1.0 / std::pow(c->kd.delta, 3) + 1.0 / std::pow(1.0 + c->kd.delta, 3));
    CHECK(c->kd.delta >= 0.5 * (std::sqrt(5.0) - 1.0));
    CHECK(c->kd.delta <= 0.866);
  }
}

TEST_CASE("kappa_delta: delta varies continuously as eta0 shrinks") {
  Config c(5.58682, 5.7);
  KappaDelta kd_half = kappa_delta(c.scale.sigma0, 0.5 * c.scale.eta0, table_1_85573());
  CHECK(std::abs(kd_half.delta - c.kd.delta) < 1e-3);
}

TEST_CASE("k_integral: sign at degenerate inputs and monotone in w") {
  const ThetaTable& t = table_1_85573();
  // a1 = a0, w = 0: integrand a0 (e^-u - 1) h <= 0
  CHECK(k_integral(0.0, t, 1.0, 1.0) < 0.0);

  Config c(5.58682, 5.7);
  double w0 = c.scale.w0;
  double prev = k_integral(w0, t, c.poly.a[0], c.poly.a[1]);
  CHECK(k_integral(w0 + 0.1, t, c.poly.a[0], c.poly.a[1]) > prev);
  for (int i = 1; i <= 50; ++i) {
    double w = w0 + i * (1.0 / 50.0);
    double now = k_integral(w, t, c.poly.a[0], c.poly.a[1]);
    CHECK(now > prev);
    prev = now;
  }
}

TEST_CASE("u0_bound: branch values and continuity at the break") {
  CHECK(u0_bound(0.0) == doctest::Approx(0.5 * std::log(16.0) + 4.0).epsilon(1e-15));
  CHECK(u0_bound(0.0) == doctest::Approx(5.3862943611).epsilon(1e-9));
  // the envelope is piecewise and jumps upward at |t| = 1/2
  CHECK(u0_bound(0.5 - 1e-12) == doctest::Approx(0.5 * std::log(8.0) + 3.0).epsilon(1e-9));
  CHECK(u0_bound(0.5 + 1e-12) ==
        doctest::Approx(std::abs(std::log(0.25) - 1.0) + 4.0 / 3.0 + 0.5).epsilon(1e-9));
  CHECK(u0_bound(0.5 + 1e-12) > u0_bound(0.5 - 1e-12));
  CHECK(u0_bound(-3.0) == u0_bound(3.0));
}

TEST_CASE("lorentz_window_bound dominates direct quadrature") {
  const ThetaTable& t = table_1_85573();
  Config c(5.5734118, 5.5734120);
  const double a = c.scale.sigma0 - 0.5;
  for (int k : {1, 2}) {
    double b = k * 3.06e10;
    double bound = lorentz_window_bound(a, b, t, 1e-3);
    // truncated two-sided quadrature plus an analytic tail bound
    auto integrand = [&](double x) {
      double d = b - x;
      return u0_bound(x) / (a * a + d * d);
    };
    double direct = 0.0;
    direct += integrate(integrand, -1e6, -t.t_star, 1e-13).value;
    direct += integrate(integrand, -t.t_star, t.t_star, 1e-13).value;
    direct += integrate(integrand, t.t_star, 1e6, 1e-13).value;
    // |t| > 1e6 tail: U0 <= log|t|, denominator ~ b^2
    double tail = 2.0 * (std::log(b) + 1.0) / 1e6;  // crude but sufficient
    CHECK(bound + tail >= direct);
    CHECK(std::isfinite(bound));
  }
}

TEST_CASE("error term: nonpositive and decreasing on (0, eta0]") {
  Config c(5.5734118, 5.5734120);
  ErrorCoeffs coeffs = error_coeffs(c.ctx(5.5734118, 5.5734120));
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    double eta = c.scale.eta0 * i / 50.0;
    double val = coeffs.at(eta);
    CHECK(val <= 0.0);
    CHECK(val <= prev + 1e-18);  // decreasing in eta
    prev = val;
  }
  // rejects negative coefficients
  CosinePolynomial bad = CosinePolynomial::from({1.0, 2.0, -0.1});
  ErrorContext bctx{bad, table_1_85573(), c.scale, c.kd, 3.06e10, 1e5,
                    5.5734118, 5.5734120, {0.0, 0.0, 0.0}, 1e-3};
  CHECK_THROWS_AS(error_coeffs(bctx), std::domain_error);
}

TEST_CASE("error term: balance at the converged configuration") {
  // At the final reference round the solved eta1 satisfies the balance
  // |K(w1) - (K(w0) - C(eta1))| <= 1e-3 at eta1 ~ 0.878386e-3.
  Config c(5.5734118, 5.5734120);
  ErrorCoeffs coeffs = error_coeffs(c.ctx(5.5734118, 5.5734120));
  const double eta1 = 0.878386e-3;
  double kw0 = k_integral(c.scale.w0, table_1_85573(), c.poly.a[0], c.poly.a[1]);
  double w1 = w1_of(eta1, 5.5734118, 5.5734120, 16, 1e5);
  double kw1 = k_integral(w1, table_1_85573(), c.poly.a[0], c.poly.a[1]);
  CHECK(std::abs(kw1 - (kw0 - coeffs.at(eta1))) <= 1e-3);
}
