#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zetafree {

// Upper bound for sum over all gamma > 0 of gamma^-2 over the nontrivial
// zeros; overridable through ZeroSumProvider.
inline constexpr double kZeroInvSqTailBound = 0.023105;

// Published bound for the height-zero window sum at t0 = 1e5, used when no
// zeros table covers [0, t0].
inline constexpr double kC30ZeroFallback1e5 = 0.00027;

struct ZeroTable {
  std::vector<double> gammas;         // strictly increasing ordinates
  std::vector<double> prefix_inv_sq;  // prefix_inv_sq[i] = sum_{j<=i} gammas[j]^-2
  double max_gamma = 0.0;

  std::size_t count() const { return gammas.size(); }
  // sum of gamma^-2 over ordinates <= t0
  double partial_inv_sq(double t0) const;
};

// One ordinate per line, ascending decimal text; '#' starts a comment.
ZeroTable load_zeros(const std::string& path);

// 2 * (tail_bound - sum_{0 < gamma <= t0} gamma^-2), an upper bound for the
// height-zero window sum.  Requires t0 <= max_gamma so the partial sum is
// complete.
double sigma_zero_bound(double t0, const ZeroTable& table,
                        double tail_bound = kZeroInvSqTailBound);

// Closed form of the Lehman-type bound for the window at height b = kT0,
// k >= 1 (the improper integral has an elementary antiderivative).
double c30_tail_closed_form(double b, double t0);

// Same quantity by adaptive quadrature on [t0, X] plus the closed-form tail
// beyond X; cross-check path only.
double c30_tail_by_quadrature(double b, double t0, double X, double tol);

// Supplies the zero-sum bounds c30(k T0, t0).  k = 0 comes from a loaded
// table or an explicit published constant; k >= 1 from the closed form.
class ZeroSumProvider {
 public:
  static ZeroSumProvider from_table(ZeroTable table,
                                    double tail_bound = kZeroInvSqTailBound);
  // No table: k = 0 valid only at t0 = 1e5 with the published constant.
  static ZeroSumProvider fallback();

  double c30(int k, double T0, double t0) const;
  double c30_zero(double t0) const;  // the k = 0 window
  bool uses_table() const { return table_.has_value(); }
  const ZeroTable* table() const { return table_ ? &*table_ : nullptr; }

 private:
  std::optional<ZeroTable> table_;
  double tail_bound_ = kZeroInvSqTailBound;
};

}  // namespace zetafree
