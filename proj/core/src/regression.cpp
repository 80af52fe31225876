#include "fqt/regression.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fqt/errors.hpp"
#include "fqt/exact_sum.hpp"

namespace fqt {
namespace {

void check_degree(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(what) + " entry " + std::to_string(v) + " is outside [0,1]");
  }
}

void check_dimensions(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y) {
  if (g.size() != x.rows() || y.size() != x.rows()) {
    throw DomainError("dimension mismatch: X has " + std::to_string(x.rows()) + " rows, G has " +
                      std::to_string(g.size()) + " entries, y has " + std::to_string(y.size()));
  }
}

}  // namespace

std::string_view to_string(CovariateUnit unit) noexcept {
  return unit == CovariateUnit::kRawX ? "raw-x" : "membership";
}

DesignMatrix::DesignMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                           std::vector<std::string> category_names)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), names_(std::move(category_names)) {
  if (rows_ == 0 || cols_ == 0) throw DomainError("design matrix needs n >= 1 and p >= 1");
  if (entries_.size() != rows_ * cols_) {
    throw DomainError("design matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                      std::to_string(rows_ * cols_));
  }
  if (!names_.empty() && names_.size() != cols_) {
    throw DomainError("design matrix needs one category name per column");
  }
  for (double v : entries_) check_degree(v, "design matrix");
}

DesignMatrix DesignMatrix::column(std::vector<double> degrees, std::string category_name) {
  const auto n = degrees.size();
  std::vector<std::string> names;
  if (!category_name.empty()) names.push_back(std::move(category_name));
  return DesignMatrix(n, 1, std::move(degrees), std::move(names));
}

std::string DesignMatrix::category_name(std::size_t col) const {
  if (col < names_.size()) return names_[col];
  return "category " + std::to_string(col);
}

WeightVector::WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
  for (double v : entries_) check_degree(v, "weight vector");
}

ResponseVector::ResponseVector(std::vector<double> entries) : entries_(std::move(entries)) {
  for (double v : entries_) {
    if (!std::isfinite(v)) throw DomainError("response vector holds a non-finite value");
  }
}

LinearFit ols_fit(std::span<const double> xs, std::span<const double> ys, CovariateUnit unit) {
  if (xs.size() != ys.size()) throw FitError("ols_fit: xs and ys differ in length");
  const auto n = xs.size();
  if (n < 2) throw FitError("ols_fit: need at least 2 points, got " + std::to_string(n));

  ExactSum sum_x;
  ExactSum sum_y;
  for (std::size_t i = 0; i < n; ++i) {
    sum_x += xs[i];
    sum_y += ys[i];
  }
  const double mean_x = sum_x.value() / static_cast<double>(n);
  const double mean_y = sum_y.value() / static_cast<double>(n);

  // Centered sums keep the slope accurate when x has a large offset.
  ExactSum sum_xx;
  ExactSum sum_xy;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    sum_xx += dx * dx;
    sum_xy += dx * (ys[i] - mean_y);
  }
  const double sxx = sum_xx.value();
  const double sxy = sum_xy.value();
  double max_abs = 0.0;
  for (double v : xs) max_abs = std::max(max_abs, std::abs(v));
  const double spread_floor = 1e-12 * max_abs;
  if (max_abs == 0.0 || sxx <= static_cast<double>(n) * spread_floor * spread_floor) {
    throw FitError("ols_fit: covariate has zero variance");
  }

  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x, unit};
}

CategoryWeights fqt_fit(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y) {
  check_dimensions(x, g, y);
  const auto n = x.rows();
  const auto p = x.cols();

  if (std::all_of(g.entries().begin(), g.entries().end(), [](double w) { return w == 0.0; })) {
    throw FitError("fqt_fit: every fuzzy-group weight is zero");
  }

  // Normal equations [X'GX | X'Gy], p x (p+1). Upper triangle and rhs are
  // accumulated exactly so the result is independent of sample order.
  std::vector<ExactSum> sums(p * (p + 1));
  for (std::size_t k = 0; k < n; ++k) {
    const double w = g[k];
    if (w == 0.0) continue;
    const auto row = x.row(k);
    for (std::size_t i = 0; i < p; ++i) {
      const double wxi = w * row[i];
      for (std::size_t j = i; j < p; ++j) sums[i * (p + 1) + j] += wxi * row[j];
      sums[i * (p + 1) + p] += wxi * y[k];
    }
  }
  std::vector<double> m(p * (p + 1), 0.0);
  const auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * (p + 1) + c]; };
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j <= p; ++j) at(i, j) = sums[i * (p + 1) + j].value();
    for (std::size_t j = 0; j < i; ++j) at(i, j) = at(j, i);
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < p; ++i) scale = std::max(scale, std::abs(at(i, i)));
  const double tol = kSingularPivotTolerance * scale;

  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    }
    if (!(std::abs(at(pivot, col)) > tol)) {
      throw SingularityError(col, x.category_name(col),
                             "fqt_fit: X'GX is singular at " + x.category_name(col) +
                                 " (collinear or empty category; merge or drop it)");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c <= p; ++c) std::swap(at(col, c), at(pivot, c));
    }
    for (std::size_t r = col + 1; r < p; ++r) {
      const double factor = at(r, col) / at(col, col);
      if (factor == 0.0) continue;
      for (std::size_t c = col; c <= p; ++c) at(r, c) -= factor * at(col, c);
    }
  }

  CategoryWeights out{std::vector<double>(p, 0.0)};
  for (std::size_t i = p; i-- > 0;) {
    double acc = at(i, p);
    for (std::size_t j = i + 1; j < p; ++j) acc -= at(i, j) * out.a[j];
    out.a[i] = acc / at(i, i);
  }
  for (std::size_t j = 0; j < p; ++j) {
    if (!std::isfinite(out.a[j])) {
      throw SingularityError(j, x.category_name(j), "fqt_fit: non-finite weight for " + x.category_name(j));
    }
  }
  return out;
}

double weighted_sse(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y,
                    const CategoryWeights& a) {
  check_dimensions(x, g, y);
  if (a.size() != x.cols()) {
    throw DomainError("weighted_sse: " + std::to_string(a.size()) + " weights for " +
                      std::to_string(x.cols()) + " categories");
  }
  double sse = 0.0;
  for (std::size_t k = 0; k < x.rows(); ++k) {
    const auto row = x.row(k);
    double fitted = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) fitted += row[j] * a[j];
    const double r = y[k] - fitted;
    sse += g[k] * r * r;
  }
  return sse;
}

}  // namespace fqt
