#include "trigpoly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zetafree {

SpectralFactor SpectralFactor::from(std::vector<double> coeffs) {
  if (coeffs.size() < 2) {
    throw std::invalid_argument("SpectralFactor: need degree >= 1");
  }
  if (coeffs[0] != 1.0) {
    throw std::invalid_argument("SpectralFactor: c_0 must be 1");
  }
  SpectralFactor f;
  f.n = static_cast<int>(coeffs.size()) - 1;
  f.c = std::move(coeffs);
  return f;
}

CosinePolynomial CosinePolynomial::from(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("CosinePolynomial: empty coefficient list");
  }
  CosinePolynomial p;
  p.n = static_cast<int>(coeffs.size()) - 1;
  p.a = std::move(coeffs);
  p.A = std::accumulate(p.a.begin() + 1, p.a.end(), 0.0);
  return p;
}

CosinePolynomial cosine_from_factor(const SpectralFactor& f) {
  const int n = f.n;
  std::vector<double> a(n + 1, 0.0);
  double peak = 0.0;
  for (int j = 0; j <= n; ++j) peak += f.c[j] * f.c[j];
  a[0] = peak;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j + k <= n; ++j) s += f.c[j] * f.c[j + k];
    a[k] = 2.0 * s;
  }
  return CosinePolynomial::from(std::move(a));
}

double evaluate(const CosinePolynomial& f, double phi) {
  double s = f.a[0];
  for (int k = 1; k <= f.n; ++k) s += f.a[k] * std::cos(k * phi);
  return s;
}

double landau_objective(double a0, double a1, double A) {
  if (!(a0 > 0.0)) throw std::domain_error("landau_objective: requires a_0 > 0");
  if (!(a1 > a0)) throw std::domain_error("landau_objective: requires a_1 > a_0");
  return A / (a0 + a1 - 2.0 * std::sqrt(a0 * a1));
}

double landau_objective(const CosinePolynomial& f) {
  if (f.n < 1) throw std::domain_error("landau_objective: requires degree >= 1");
  return landau_objective(f.a[0], f.a[1], f.A);
}

MembershipReport membership_check(const CosinePolynomial& f) {
  MembershipReport rep;
  for (int k = 0; k <= f.n; ++k) {
    if (f.a[k] < 0.0) {
      rep.first_negative_index = k;
      break;
    }
  }
  rep.a1_exceeds_a0 = f.n >= 1 && f.a[1] > f.a[0];
  rep.is_member = rep.a1_exceeds_a0 && !rep.first_negative_index.has_value();
  return rep;
}

double apply_step(SpectralFactor& f, std::vector<double>& a, int k, double s) {
  const int n = f.n;
  if (k < 1 || k > n) throw std::invalid_argument("apply_step: k out of [1, n]");
  if (a.size() != static_cast<std::size_t>(n + 1)) {
    throw std::invalid_argument("apply_step: coefficient length mismatch");
  }
  // a_0 update uses the old c_k; a_i updates touch only c_{k-i}, c_{k+i}
  a[0] += s * (2.0 * f.c[k] + s);
  double tail_delta = 0.0;
  const double two_s = 2.0 * s;
  for (int i = 1; i <= n; ++i) {
    double d = 0.0;
    if (k - i >= 0) d += f.c[k - i];
    if (k + i <= n) d += f.c[k + i];
    if (d != 0.0) {
      double inc = two_s * d;
      a[i] += inc;
      tail_delta += inc;
    }
  }
  f.c[k] += s;
  return tail_delta;
}

CosinePolynomial normalized(const CosinePolynomial& f) {
  if (!(f.a[0] > 0.0)) throw std::domain_error("normalized: requires a_0 > 0");
  std::vector<double> a(f.a);
  for (double& v : a) v /= f.a[0];
  return CosinePolynomial::from(std::move(a));
}

}  // namespace zetafree
