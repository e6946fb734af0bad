#include "kadiri.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "quadrature.hpp"

namespace zetafree {

namespace {

void require_theta(double theta) {
  if (!(theta > M_PI_2 && theta < M_PI)) {
    throw std::domain_error("theta must lie in (pi/2, pi)");
  }
}

}  // namespace

double h_theta(double theta, double u) {
  require_theta(theta);
  const double sec2 = 1.0 / (std::cos(theta) * std::cos(theta));
  const double tan = std::tan(theta);
  return sec2 * (sec2 * (-theta / tan - 0.5 * u) * std::cos(u * tan) - 2.0 * theta / tan - u -
                 std::sin(2.0 * theta + u * tan) / std::sin(2.0 * theta) +
                 2.0 * (1.0 + std::sin(theta + u * tan) / std::sin(theta)));
}

double h2_theta(double theta, double u) {
  require_theta(theta);
  const double sec2 = 1.0 / (std::cos(theta) * std::cos(theta));
  const double tan = std::tan(theta);
  return sec2 * (sec2 * tan * (std::sin(u * tan) + (theta / tan + 0.5 * u) * tan * std::cos(u * tan)) +
                 tan * tan * std::sin(2.0 * theta + u * tan) / std::sin(2.0 * theta) -
                 2.0 * tan * tan * std::sin(theta + u * tan) / std::sin(theta));
}

double g1_closed(double theta) {
  require_theta(theta);
  const double tan = std::tan(theta);
  return (3.0 - theta * tan - 3.0 * theta / tan) / (std::cos(theta) * std::cos(theta));
}

double d1_of(double theta) {
  require_theta(theta);
  return -2.0 * theta / std::tan(theta);
}

ThetaTable theta_table(double theta, double tol) {
  if (!(theta > 1.8469 && theta < M_PI)) {
    throw std::domain_error(
        "theta_table: theta must lie in (1.8469, pi) so that d1(theta) <= 1.91094, "
        "the validity range of the cubic bound behind m_star");
  }
  ThetaTable t;
  t.theta = theta;
  t.g1 = g1_closed(theta);
  t.d1 = d1_of(theta);
  auto h2 = [theta](double u) { return h2_theta(theta, u); };
  t.m = find_max_abs(h2, 0.0, t.d1);
  t.M0 = integrate_abs(h2, 0.0, t.d1, tol).value;
  t.M1 = integrate_abs([&](double u) { return h2(u) * u; }, 0.0, t.d1, tol).value;
  t.M2 = integrate_abs([&](double u) { return h2(u) * u * u; }, 0.0, t.d1, tol).value;
  t.M3 = integrate_abs([&](double u) { return h2(u) * u * u * u; }, 0.0, t.d1, tol).value;
  t.t_star = find_root([](double x) { return std::log(0.5 * x) - 2.0 / (1.0 + 4.0 * x * x); },
                       2.0, 3.0, 1e-14);
  const double ts = t.t_star;
  t.c_const = std::log(2.0) + 2.0 / (1.0 + 4.0 * ts * ts) - 2.0 / (3.0 * ts) - 1.0 / (8.0 * ts * ts);
  return t;
}

double m_star(double z, const ThetaTable& table) {
  if (!(z > -1.0 && z <= 0.0)) {
    throw std::domain_error("m_star: z = -r/R must lie in (-1, 0]");
  }
  if (!(table.d1 <= 1.91094)) {
    throw std::domain_error("m_star: requires d1(theta) <= 1.91094");
  }
  // For z <= 0 all four terms are nonnegative, so the upward nudge of each
  // moment keeps the total an upper bound.
  const double up = 1.0 + 1e-12;
  return table.M0 * up - table.M1 * up * z + 0.5 * table.M2 * up * z * z -
         table.M3 * up * z * z * z / 3.45;
}

namespace {

struct Kappa23 {
  double k2, k3;
};

Kappa23 kappa23(double delta, double sigma0, double eta0, const ThetaTable& t) {
  const double me2 = t.m * eta0 * eta0;
  const double s = 2.0 * sigma0 - 1.0;
  const double num = t.g1 * s - me2 / s;
  const double den2 = (1.0 + 2.0 * delta) * t.g1 + (1.0 / delta + 1.0 / (delta + s)) * me2;
  const double dps = delta + s;
  const double den3 = (1.0 / delta + (1.0 + delta) / (dps * dps)) * t.g1 +
                      (1.0 / (delta * delta * delta) + 1.0 / (dps * dps * dps)) * me2;
  return {num / den2, num / den3};
}

}  // namespace

double kappa2_of(double delta, double sigma0, double eta0, const ThetaTable& table) {
  return kappa23(delta, sigma0, eta0, table).k2;
}

double kappa3_of(double delta, double sigma0, double eta0, const ThetaTable& table) {
  return kappa23(delta, sigma0, eta0, table).k3;
}

KappaDelta kappa_delta(double sigma0, double eta0, const ThetaTable& table) {
  if (!(sigma0 > 0.5 && sigma0 < 1.0)) throw std::domain_error("kappa_delta: sigma0 outside (1/2, 1)");
  if (!(eta0 > 0.0)) throw std::domain_error("kappa_delta: eta0 must be positive");
  const double lo = 0.5 * (std::sqrt(5.0) - 1.0);
  const double hi = 0.866;
  auto gap = [&](double d) {
    Kappa23 k = kappa23(d, sigma0, eta0, table);
    return k.k2 - k.k3;
  };
  double delta;
  try {
    delta = find_root(gap, lo, hi, 1e-12);
  } catch (const std::invalid_argument&) {
    throw ConstraintError("kappa_delta: kappa2 = kappa3 has no root in [(sqrt5-1)/2, 0.866]");
  }
  KappaDelta kd;
  kd.delta = delta;
  kd.kappa = kappa2_of(delta, sigma0, eta0, table);
  if (std::abs(kd.kappa - kappa3_of(delta, sigma0, eta0, table)) > 1e-9) {
    throw ConstraintError("kappa_delta: solved point fails kappa2 = kappa3 to 1e-9");
  }
  if (!(kd.delta >= lo - 1e-12 && kd.delta <= hi + 1e-12)) {
    throw ConstraintError("kappa_delta: delta outside [(sqrt5-1)/2, 0.866]");
  }
  const double inv_kappa = 1.0 / kd.kappa;
  const double lhs = 1.0 / kd.delta + 1.0 / (0.99 + kd.delta);
  const double rhs = 1.0 / (kd.delta * kd.delta * kd.delta) +
                     1.0 / ((1.0 + kd.delta) * (1.0 + kd.delta) * (1.0 + kd.delta));
  if (!(lhs <= inv_kappa)) {
    throw ConstraintError("kappa_delta: failed 1/delta + 1/(0.99 + delta) <= 1/kappa");
  }
  if (!(inv_kappa <= rhs)) {
    throw ConstraintError("kappa_delta: failed 1/kappa <= 1/delta^3 + 1/(1 + delta)^3");
  }
  return kd;
}

double k_integral(double w, const ThetaTable& table, double a0, double a1, double tol) {
  const double theta = table.theta;
  auto integrand = [theta, a0, a1, w](double u) {
    return (a1 * std::exp(-u) - a0) * h_theta(theta, u) * std::exp(w * u);
  };
  return integrate(integrand, 0.0, table.d1, tol).value;
}

double u0_bound(double t) {
  t = std::abs(t);
  if (t < 0.5) {
    return 0.5 * std::log(16.0 / (1.0 + 4.0 * t * t)) + 2.0 / (1.0 + 4.0 * t * t) + 2.0;
  }
  return std::abs(std::log(0.5 * t) - 2.0 / (1.0 + 4.0 * t * t)) + 2.0 / (3.0 * t) +
         1.0 / (8.0 * t * t);
}

double lorentz_window_bound(double a, double b, const ThetaTable& table, double eps_window) {
  const double ts = table.t_star;
  const double c = table.c_const;
  if (b == 0.0) {
    // symmetric split 2 ( [0,1/2] + [1/2,t*] + [t*,inf) ); the far piece uses
    // the log|t| - c envelope, integrated in log space with an explicit
    // closed-form tail beyond X
    auto low = integrate([&](double t) { return u0_bound(t) / (a * a + t * t); }, 0.0, 0.5, 1e-14);
    auto mid = integrate([&](double t) { return u0_bound(t) / (a * a + t * t); }, 0.5, ts, 1e-14);
    const double X = 1e12;
    auto far = integrate(
        [&](double v) {
          double t = std::exp(v);
          return (v - c) * t / (a * a + t * t);
        },
        std::log(ts), std::log(X), 1e-14);
    const double tail = (std::log(X) + 1.0 - c) / X;
    return 2.0 * (low.value + mid.value + far.value + tail);
  }

  // b = kT0: numeric middle windows; everything beyond [-t*, t*] via the
  // assembled closed-form bound with the eps-window split around t = b.
  double numeric = 0.0;
  if (b < 1e120) {  // for larger b the middle windows are below 1e-230
    auto den = [a, b](double t) {
      double d = b - t;
      return a * a + d * d;
    };
    numeric += integrate([&](double t) { return u0_bound(t) / den(t); }, -ts, -0.5, 1e-14).value;
    numeric += integrate([&](double t) { return u0_bound(t) / den(t); }, -0.5, 0.5, 1e-14).value;
    numeric += integrate([&](double t) { return u0_bound(t) / den(t); }, 0.5, ts, 1e-14).value;
  }
  const double e = eps_window;
  double closed = (M_PI / a) * std::log(b * (1.0 + e));
  closed += (2.0 * std::log(b) / e + (1.0 + 1.0 / e) * std::log1p(e) -
             (1.0 - 1.0 / e) * std::log1p(-e) + std::log((b + ts) / (b - ts))) /
            b;
  closed -= (ts * std::log(ts) / b) * (1.0 / (b + ts) + 1.0 / (b - ts));
  closed -= c * (1.0 / (b + ts) + (std::atan((b - ts) / a) + M_PI_2) / a);
  return numeric + closed;
}

ErrorCoeffs error_coeffs(const ErrorContext& ctx) {
  const CosinePolynomial& f = ctx.f;
  const int n = f.n;
  const ThetaTable& th = ctx.table;
  const double sigma0 = ctx.scale.sigma0;
  const double eta0 = ctx.scale.eta0;
  const double delta = ctx.kd.delta;
  const double kappa = ctx.kd.kappa;
  const double T0 = ctx.T0;
  if (static_cast<int>(ctx.c30_values.size()) != n + 1) {
    throw std::invalid_argument("error_coeffs: c30_values must have n+1 entries");
  }
  for (int k = 0; k <= n; ++k) {
    if (f.a[k] < 0.0) throw std::domain_error("error_coeffs: coefficients must be nonnegative");
  }

  // C1 = eta g1 sum a_k c1(k)
  double sum_c1 = 0.0;
  {
    const double psi_32 = boost::math::digamma(1.5);
    const double c1_0 = 0.5 * (kappa - 1.0) * std::log(M_PI) + 0.5 * psi_32 -
                        0.5 * kappa * boost::math::digamma(0.5 * (sigma0 + delta) + 1.0);
    sum_c1 += f.a[0] * c1_0;
    const double x0 = sigma0 + 2.0, x1 = 3.0;
    for (int k = 1; k <= n; ++k) {
      const double y0 = k * T0;
      const double r2 = 0.5 * (1.0 - kappa) * std::log1p(((x1 + delta) / y0) * ((x1 + delta) / y0)) +
                        (std::atan(y0 / x1) + kappa * std::atan(y0 / (x1 + delta))) / y0;
      const double r3 = (1.0 / x0 + kappa / (x0 + delta)) / (3.0 * y0) +
                        ((x1 * x1 + kappa * (x1 + delta) * (x1 + delta)) / y0) / (2.0 * y0);
      sum_c1 += f.a[k] * (0.5 * (kappa - 1.0) * std::log(2.0 * M_PI / k) + 0.5 * std::min(r2, r3));
    }
  }
  const double c1_lin = th.g1 * sum_c1;

  // shared sums over the polynomial
  double sum_inv_sq = 0.0;  // sum_{k>=1} a_k / (kT0)^2, written to avoid overflow
  for (int k = 1; k <= n; ++k) sum_inv_sq += (f.a[k] / (k * T0)) / (k * T0);
  double sum_c30 = 0.0;
  for (int k = 0; k <= n; ++k) sum_c30 += f.a[k] * ctx.c30_values[k];

  const double ms = m_star(-ctx.r / ctx.R, th);

  // C2 = q1 eta + q2 eta^2 + q3 eta^3
  const double sd = sigma0 - 1.0 + delta;
  const double q1 = -kappa * th.g1 * (f.a[0] / delta + 0.5 * sd * sum_inv_sq);
  const double q2 = ms * sum_inv_sq;
  const double q3 = f.a[0] * th.m * kappa / (sd * sd * sd) + th.m * kappa / sd * sum_inv_sq;

  // C3 = p1 eta + p2 eta^2 + p3 eta^3
  const double se = sigma0 - eta0 + delta;
  const double p1 =
      f.a[1] * th.g1 * ((1.0 / delta + 1.0 / se) * kappa - 1.0) + ms * eta0 * sum_c30;
  const double p2 = (1.0 + 2.0 * kappa) * th.m * eta0 / (sigma0 - 0.5) * sum_c30;
  const double p3 =
      f.a[1] * th.m * ((1.0 / (delta * delta * delta) + 1.0 / (se * se * se)) * kappa + 1.0);

  // C4 = eta^3 m sum a_k (C41(k) + C42(k))
  double sum_c4 = 0.0;
  {
    const double aa = sigma0 - 0.5;
    const double ad = sigma0 - 0.5 + delta;
    const double c42_head = 1.0 / (sigma0 * sigma0 * sigma0) +
                            kappa / ((sigma0 + delta) * (sigma0 + delta) * (sigma0 + delta));
    const double c42_rate = 1.0 / sigma0 + kappa / (sigma0 + delta);
    for (int k = 0; k <= n; ++k) {
      if (f.a[k] == 0.0) continue;
      const double b = k * T0;
      const double c41 = lorentz_window_bound(aa, b, th, ctx.eps_window) / (2.0 * M_PI * aa) +
                         kappa * lorentz_window_bound(ad, b, th, ctx.eps_window) / (2.0 * M_PI * ad);
      const double c42 = (k == 0) ? c42_head : (c42_rate / b) / b;
      sum_c4 += f.a[k] * (c41 + c42);
    }
  }
  const double c4_cubic = th.m * sum_c4;

  ErrorCoeffs out;
  out.e1 = c1_lin + q1 + p1;
  out.e2 = q2 + p2;
  out.e3 = q3 + p3 + c4_cubic;
  return out;
}

double error_C(double eta1, const ErrorContext& ctx) { return error_coeffs(ctx).at(eta1); }

}  // namespace zetafree
