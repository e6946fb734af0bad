#include "zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "quadrature.hpp"

namespace zetafree {

double ZeroTable::partial_inv_sq(double t0) const {
  auto it = std::upper_bound(gammas.begin(), gammas.end(), t0);
  if (it == gammas.begin()) return 0.0;
  return prefix_inv_sq[static_cast<std::size_t>(it - gammas.begin()) - 1];
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zeros file: " + path);
  ZeroTable table;
  std::string raw;
  long lineno = 0;
  double running = 0.0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream line(text);
    double g;
    if (!(line >> g)) {
      std::istringstream recheck(text);
      std::string token;
      if (recheck >> token) throw ParseError("non-numeric ordinate in zeros file", lineno);
      continue;  // blank or comment-only line
    }
    std::string trailing;
    if (line >> trailing) throw ParseError("trailing text after ordinate", lineno);
    if (!(g > 0.0)) throw ParseError("ordinate must be positive", lineno);
    if (!table.gammas.empty() && g <= table.gammas.back()) {
      throw ParseError("ordinates must be strictly increasing", lineno);
    }
    running += 1.0 / (g * g);
    table.gammas.push_back(g);
    table.prefix_inv_sq.push_back(running);
  }
  if (table.gammas.empty()) throw ParseError("zeros file is empty", lineno);
  table.max_gamma = table.gammas.back();
  if (!(table.gammas.front() > 14.0 && table.gammas.front() < 15.0)) {
    throw std::runtime_error("zeros file implausible: first ordinate not in (14, 15)");
  }
  return table;
}

double sigma_zero_bound(double t0, const ZeroTable& table, double tail_bound) {
  if (t0 > table.max_gamma) {
    throw CoverageError("sigma_zero_bound: zeros table covers only [0, " +
                        std::to_string(table.max_gamma) + "], requested t0 " +
                        std::to_string(t0));
  }
  return 2.0 * (tail_bound - table.partial_inv_sq(t0));
}

double c30_tail_closed_form(double b, double t0) {
  // (1/2pi) int_{t0}^inf log((x+b)/2pi) (x^-2 + (x+2b)^-2) dx
  //   = (1/2pi) [ log((t0+b)/2pi) (1/t0 + 1/(t0+2b)) + log((t0+2b)/t0) / b ]
  // by parts, both pieces vanishing at infinity.
  const double integral =
      (std::log((t0 + b) / (2.0 * M_PI)) * (1.0 / t0 + 1.0 / (t0 + 2.0 * b)) +
       (std::log((t0 + b) / t0) + std::log((t0 + 2.0 * b) / (t0 + b))) / b) /
      (2.0 * M_PI);
  const double boundary =
      4.0 * std::log(b + t0) * ((1.0 / t0) / t0 + (1.0 / (t0 + 2.0 * b)) / (t0 + 2.0 * b));
  return integral + boundary + 4.0 / (b * t0);
}

double c30_tail_by_quadrature(double b, double t0, double X, double tol) {
  auto integrand = [b](double x) {
    double u = 1.0 / x, v = 1.0 / (x + 2.0 * b);
    return std::log((x + b) / (2.0 * M_PI)) * (u * u + v * v);
  };
  IntegralResult r = integrate(integrand, t0, X, tol);
  // closed-form remainder beyond X
  double tail = std::log((X + b) / (2.0 * M_PI)) * (1.0 / X + 1.0 / (X + 2.0 * b)) +
                (std::log((X + b) / X) + std::log((X + 2.0 * b) / (X + b))) / b;
  double value = (r.value + tail) / (2.0 * M_PI);
  value += 4.0 * std::log(b + t0) * ((1.0 / t0) / t0 + (1.0 / (t0 + 2.0 * b)) / (t0 + 2.0 * b));
  value += 4.0 / (b * t0);
  return value;
}

ZeroSumProvider ZeroSumProvider::from_table(ZeroTable table, double tail_bound) {
  ZeroSumProvider p;
  p.table_ = std::move(table);
  p.tail_bound_ = tail_bound;
  return p;
}

ZeroSumProvider ZeroSumProvider::fallback() { return ZeroSumProvider{}; }

double ZeroSumProvider::c30_zero(double t0) const {
  if (table_) return sigma_zero_bound(t0, *table_, tail_bound_);
  if (t0 == 1e5) return kC30ZeroFallback1e5;
  throw CoverageError(
      "c30: no zeros table loaded and the published fallback constant applies "
      "only to t0 = 1e5 (requested t0 = " +
      std::to_string(t0) + ")");
}

double ZeroSumProvider::c30(int k, double T0, double t0) const {
  if (k < 0) throw std::invalid_argument("c30: k must be >= 0");
  if (!(T0 > 0.0 && t0 > 0.0)) throw std::invalid_argument("c30: T0, t0 must be positive");
  if (k == 0) return c30_zero(t0);
  return c30_tail_closed_form(static_cast<double>(k) * T0, t0);
}

}  // namespace zetafree
