#pragma once

#include <vector>

#include "trigpoly.hpp"
#include "zeros.hpp"

namespace zetafree {

// Smoothing kernel h_theta(u) for theta in (pi/2, pi), and its closed-form
// second derivative.
double h_theta(double theta, double u);
double h2_theta(double theta, double u);

// g1(theta) = h_theta(0) in closed form: sec^2(3 - theta tan - 3 theta cot).
double g1_closed(double theta);

// d1(theta) = -2 theta / tan(theta), the kernel's support endpoint.
double d1_of(double theta);

// Everything that depends on theta alone, computed once and reused:
// g1, d1, the sup norm m of |h''| on [0, d1], the absolute moments
// M_k = int |h''(u)| u^k du, and the constants t* and c of the far-window
// envelope log|t| - c.
struct ThetaTable {
  double theta = 0.0;
  double g1 = 0.0;
  double d1 = 0.0;
  double m = 0.0;
  double M0 = 0.0, M1 = 0.0, M2 = 0.0, M3 = 0.0;
  double t_star = 0.0;
  double c_const = 0.0;
};

// Requires theta in (1.8469, pi): the cubic exponential majorant behind
// m_star is valid only when d1(theta) <= 1.91094.
ThetaTable theta_table(double theta, double tol = 1e-12);

// Polynomial upper bound M0 - M1 z + M2 z^2/2 - M3 z^3/3.45 for
// int |h''(u)| e^{-zu} du, valid for z = -r/R in (-1, 0].  Each moment is
// nudged upward by a relative 1e-12 so the result stays an upper bound.
double m_star(double z, const ThetaTable& table);

// Sharper-than-Lorentzian window scales.
struct ScaleParams {
  double eta0 = 0.0;
  double sigma0 = 0.0;
  double w0 = 0.0;
};

struct KappaDelta {
  double delta = 0.0;
  double kappa = 0.0;
};

// Solves kappa2(delta) = kappa3(delta) on [(sqrt 5 - 1)/2, 0.866] and takes
// kappa as the common value; verifies the admissibility inequalities.
KappaDelta kappa_delta(double sigma0, double eta0, const ThetaTable& table);

// kappa2/kappa3 at a given delta (exposed for property tests).
double kappa2_of(double delta, double sigma0, double eta0, const ThetaTable& table);
double kappa3_of(double delta, double sigma0, double eta0, const ThetaTable& table);

// K(w, theta) = int_0^d1 (a1 e^{-u} - a0) h_theta(u) e^{wu} du
double k_integral(double w, const ThetaTable& table, double a0, double a1,
                  double tol = 1e-10);

// Envelope U0(t) for the far-window integrand.
double u0_bound(double t);

// int_-inf^inf U0(t) / (a^2 + (b - t)^2) dt, bounded above: split windows
// with numeric middle pieces and closed forms outside [-t*, t*].
double lorentz_window_bound(double a, double b, const ThetaTable& table,
                            double eps_window);

// Inputs of the composite error term.
struct ErrorContext {
  const CosinePolynomial& f;        // coefficients a_0..a_n
  const ThetaTable& table;
  ScaleParams scale;
  KappaDelta kd;
  double T0 = 0.0;
  double t0 = 0.0;
  double r = 0.0;
  double R = 0.0;
  const std::vector<double>& c30_values;  // c30(k T0, t0) for k = 0..n
  double eps_window = 1e-3;
};

// C(eta) = e1 eta + e2 eta^2 + e3 eta^3; the coefficients depend on
// everything but eta, so they are computed once per configuration.
struct ErrorCoeffs {
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
  double at(double eta) const { return ((e3 * eta + e2) * eta + e1) * eta; }
};

ErrorCoeffs error_coeffs(const ErrorContext& ctx);
double error_C(double eta1, const ErrorContext& ctx);

}  // namespace zetafree
