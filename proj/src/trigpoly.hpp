#pragma once

#include <optional>
#include <vector>

namespace zetafree {

// Real sequence c_0..c_n with c_0 fixed at 1.  Its aperiodic autocorrelation
// generates the cosine polynomial |sum_k c_k e^{ik phi}|^2, which is
// nonnegative for every phi by construction.
struct SpectralFactor {
  int n = 0;
  std::vector<double> c;  // size n+1, c[0] == 1

  // Validates length and c_0 and returns the factor.
  static SpectralFactor from(std::vector<double> coeffs);
};

// f(phi) = sum_{k=0}^n a_k cos(k phi).  A caches the tail sum a_1 + ... + a_n,
// so f(0) = a_0 + A.
struct CosinePolynomial {
  int n = 0;
  std::vector<double> a;  // size n+1
  double A = 0.0;

  static CosinePolynomial from(std::vector<double> coeffs);
};

struct MembershipReport {
  bool is_member = false;
  std::optional<int> first_negative_index;
  bool a1_exceeds_a0 = false;
};

// a_0 = sum c_j^2, a_k = 2 sum_j c_j c_{j+k}
CosinePolynomial cosine_from_factor(const SpectralFactor& f);

double evaluate(const CosinePolynomial& f, double phi);

// Landau quotient (f(0) - a_0) / (sqrt(a_1) - sqrt(a_0))^2, written with a
// single square root as A / (a_0 + a_1 - 2 sqrt(a_0 a_1)).
// Requires a_1 > a_0 > 0.
double landau_objective(double a0, double a1, double A);
double landau_objective(const CosinePolynomial& f);

// Membership in P_n: every a_k >= 0 and a_1 > a_0.
MembershipReport membership_check(const CosinePolynomial& f);

// Applies c_k += s and updates the autocorrelation coefficients a in place,
// O(n).  Returns the resulting change in the tail sum a_1 + ... + a_n.
double apply_step(SpectralFactor& f, std::vector<double>& a, int k, double s);

// a divided by a_0, the presentation used in polynomial files.
CosinePolynomial normalized(const CosinePolynomial& f);

}  // namespace zetafree
