#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetafree {

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long subdivisions = 0;
};

// Adaptive integration ran out of panels; carries the partial value.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double partial)
      : std::runtime_error(what), partial_value(partial) {}
  double partial_value;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1,1].  Nodes and weights are computed
// once by Newton iteration on P_15 rather than transcribed.
struct Gauss15 {
  double x[15];
  double w[15];
  Gauss15() {
    constexpr int n = 15;
    for (int i = 0; i < n; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-16) break;
      }
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

inline const Gauss15& gauss15() {
  static const Gauss15 g;
  return g;
}

template <class F>
double gl15(const F& f, double a, double b) {
  const Gauss15& g = gauss15();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 15; ++i) s += g.w[i] * f(mid + half * g.x[i]);
  return s * half;
}

}  // namespace detail

// Adaptive bisection with a fixed 15-node Gauss-Legendre rule per panel.
// A panel is accepted when the whole-vs-halves difference is below its
// share of the absolute tolerance.
template <class F>
IntegralResult integrate(const F& f, double a, double b, double tol) {
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
  IntegralResult res;
  if (a == b) return res;

  struct Panel {
    double a, b, tol;
  };
  std::vector<Panel> stack{{a, b, tol}};
  constexpr long kMaxPanels = 400000;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double whole = detail::gl15(f, p.a, p.b);
    double mid = 0.5 * (p.a + p.b);
    double left = detail::gl15(f, p.a, mid);
    double right = detail::gl15(f, mid, p.b);
    double err = std::abs(left + right - whole);
    ++res.subdivisions;
    bool width_floor = (p.b - p.a) <= 1e-14 * (std::abs(p.a) + std::abs(p.b)) + 1e-300;
    if (err <= p.tol || width_floor) {
      res.value += left + right;
      res.error_estimate += err;
      continue;
    }
    if (res.subdivisions > kMaxPanels) {
      throw QuadratureError("integrate: subdivision limit exceeded", res.value + left + right);
    }
    stack.push_back({p.a, mid, 0.5 * p.tol});
    stack.push_back({mid, p.b, 0.5 * p.tol});
  }
  return res;
}

// Integrates |f| by locating the sign changes of f (coarse scan plus
// bisection refinement) so every kink of |f| is a panel endpoint.
template <class F>
IntegralResult integrate_abs(const F& f, double a, double b, double tol) {
  if (!(a <= b)) throw std::invalid_argument("integrate_abs: requires a <= b");
  constexpr int kScan = 512;
  std::vector<double> cuts;
  cuts.push_back(a);
  double prev_x = a, prev_v = f(a);
  for (int i = 1; i <= kScan; ++i) {
    double x = a + (b - a) * i / kScan;
    double v = f(x);
    if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
      double lo = prev_x, hi = x, flo = prev_v;
      for (int it = 0; it < 200 && (hi - lo) > 1e-15 * (std::abs(hi) + 1.0); ++it) {
        double m = 0.5 * (lo + hi), fm = f(m);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
        }
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  IntegralResult total;
  auto absf = [&f](double x) { return std::abs(f(x)); };
  double piece_tol = tol / static_cast<double>(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    IntegralResult r = integrate(absf, cuts[i], cuts[i + 1], piece_tol);
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.subdivisions += r.subdivisions;
  }
  return total;
}

// Bracketing bisection; returns the bracket midpoint once its width is at
// most tol.
template <class F>
double find_root(const F& f, double lo, double hi, double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw std::invalid_argument("find_root: no sign change on [lo, hi]");
  }
  for (int it = 0; it < 2000 && (hi - lo) > tol; ++it) {
    double mid = 0.5 * (lo + hi), fm = f(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

namespace detail {

template <class F>
double golden_max(const F& g, double a, double b) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = g(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = g(c);
    }
  }
  return std::max(fc, fd);
}

}  // namespace detail

// Dense scan plus golden-section refinement around the best scan maxima.
// The result carries a one-sided (1 + 1e-10) safety factor since callers
// use it as an upper bound.
template <class F>
double find_max_abs(const F& f, double lo, double hi, int scan_points = 20000) {
  if (!(hi >= lo)) throw std::invalid_argument("find_max_abs: requires lo <= hi");
  auto absf = [&f](double x) { return std::abs(f(x)); };
  if (hi == lo) return absf(lo) * (1.0 + 1e-10);

  std::vector<double> vals(scan_points + 1);
  for (int i = 0; i <= scan_points; ++i) {
    vals[i] = absf(lo + (hi - lo) * i / scan_points);
  }
  // indices of local maxima, best first
  std::vector<int> peaks;
  for (int i = 0; i <= scan_points; ++i) {
    double l = (i > 0) ? vals[i - 1] : -1.0;
    double r = (i < scan_points) ? vals[i + 1] : -1.0;
    if (vals[i] >= l && vals[i] >= r) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int i, int j) { return vals[i] > vals[j]; });
  if (peaks.size() > 5) peaks.resize(5);

  double best = 0.0;
  for (int i : peaks) {
    double a = lo + (hi - lo) * std::max(0, i - 1) / scan_points;
    double b = lo + (hi - lo) * std::min(scan_points, i + 1) / scan_points;
    best = std::max(best, detail::golden_max(absf, a, b));
    best = std::max(best, vals[i]);
  }
  return best * (1.0 + 1e-10);
}

}  // namespace zetafree
