#pragma once

// Test-only reference routines. They evaluate objectives numerically and
// never touch the normal equations, so they stay independent of the solver
// they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "fqt/regression.hpp"
#include "fqt/synth.hpp"

namespace fqt::testing {

using Objective = std::function<double(const std::vector<double>&)>;

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
inline double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * (std::abs(lo) + std::abs(hi))) break;
  }
  return fc <= fd ? c : d;
}

/// Coordinate-wise descent: each coordinate is minimized in turn by
/// golden-section search over a bracket that is widened until it encloses the
/// one-dimensional minimum. Assumes f is convex.
inline std::vector<double> coordinate_golden_argmin(const Objective& f, std::vector<double> start,
                                                    int max_sweeps = 20000, double tol = 1e-11) {
  auto point = std::move(start);
  std::vector<double> radius(point.size(), 1.0);
  double value = f(point);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double largest_move = 0.0;
    for (std::size_t j = 0; j < point.size(); ++j) {
      auto probe = point;
      const auto along = [&](double v) {
        probe[j] = v;
        return f(probe);
      };
      const double centre = point[j];
      const double f_centre = along(centre);
      double h = std::max(radius[j], 1e-9 * (1.0 + std::abs(centre)));
      while (along(centre - h) < f_centre || along(centre + h) < f_centre) h *= 2.0;
      const double next = golden_section(along, centre - h, centre + h, tol * (1.0 + std::abs(centre)));
      const double move = std::abs(next - centre);
      if (along(next) <= f_centre) point[j] = next;
      radius[j] = std::max(4.0 * move, 1e-9);
      largest_move = std::max(largest_move, move);
    }
    const double next_value = f(point);
    // Converged, or stuck at the rounding floor of the objective.
    if (largest_move < tol || !(next_value < value)) break;
    value = next_value;
  }
  return point;
}

/// Best of several coordinate-golden runs started from the given points.
inline std::vector<double> multistart_argmin(const Objective& f, const std::vector<std::vector<double>>& starts) {
  std::vector<double> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    auto candidate = coordinate_golden_argmin(f, s);
    const double value = f(candidate);
    if (value < best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return best;
}

/// Central finite-difference gradient with per-coordinate step rel_step * max(1, |v_j|).
inline std::vector<double> central_gradient(const Objective& f, const std::vector<double>& at,
                                            double rel_step = 1e-5) {
  std::vector<double> grad(at.size());
  for (std::size_t j = 0; j < at.size(); ++j) {
    const double h = rel_step * std::max(1.0, std::abs(at[j]));
    auto plus = at;
    auto minus = at;
    plus[j] += h;
    minus[j] -= h;
    grad[j] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return grad;
}

inline double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Weighted SSE written out directly from the model definition.
inline Objective weighted_sse_objective(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y) {
  return [&x, &g, &y](const std::vector<double>& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.rows(); ++k) {
      double fitted = 0.0;
      for (std::size_t j = 0; j < x.cols(); ++j) fitted += x(k, j) * a[j];
      s += g[k] * (y[k] - fitted) * (y[k] - fitted);
    }
    return s;
  };
}

struct RandomInstance {
  DesignMatrix x;
  WeightVector g;
  ResponseVector y;
};

/// Hadamard ratio det(M) / prod(M_jj) of X'GX, computed by cofactor expansion
/// (p <= 3). Near 1 for orthogonal categories, near 0 for collinear ones.
inline double hadamard_ratio(const DesignMatrix& x, const WeightVector& g) {
  const std::size_t p = x.cols();
  double m[3][3] = {};
  for (std::size_t k = 0; k < x.rows(); ++k) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) m[i][j] += g[k] * x(k, i) * x(k, j);
    }
  }
  double det = 0.0;
  if (p == 1) det = m[0][0];
  if (p == 2) det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (p == 3) {
    det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  double diag = 1.0;
  for (std::size_t i = 0; i < p; ++i) diag *= m[i][i];
  return diag > 0.0 ? det / diag : 0.0;
}

/// Random well-conditioned instance: n <= 50, p <= 3, degrees uniform in [0,1],
/// weights in a modest range so the objective is not dominated by rounding.
inline RandomInstance random_instance(Xoshiro256& rng, double min_hadamard = 0.2) {
  while (true) {
    const std::size_t p = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
    const std::size_t n = p + 3 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(48 - p));
    std::vector<double> xs(n * p);
    std::vector<double> gs(n);
    std::vector<double> ys(n);
    std::vector<double> truth(p);
    for (auto& a : truth) a = rng.uniform(-5.0, 5.0);
    for (std::size_t k = 0; k < n; ++k) {
      double fitted = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        xs[k * p + j] = rng.uniform();
        fitted += xs[k * p + j] * truth[j];
      }
      gs[k] = rng.uniform();
      ys[k] = fitted + 0.5 * rng.gaussian();
    }
    RandomInstance inst{DesignMatrix(n, p, xs), WeightVector(gs), ResponseVector(ys)};
    if (hadamard_ratio(inst.x, inst.g) >= min_hadamard) return inst;
  }
}

}  // namespace fqt::testing
