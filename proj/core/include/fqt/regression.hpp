#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqt {

/// Unit of the covariate a baseline line was fitted against.
enum class CovariateUnit { kRawX, kMembership };

std::string_view to_string(CovariateUnit unit) noexcept;

/// y = slope * v + intercept, where v is measured in `unit`.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  CovariateUnit unit = CovariateUnit::kRawX;

  double at(double v) const noexcept { return slope * v + intercept; }

  friend bool operator==(const LinearFit&, const LinearFit&) = default;
};

/// n x p matrix of category membership degrees, row-major. Row k holds the
/// degree of sample k in each category.
class DesignMatrix {
 public:
  /// Throws DomainError on a shape mismatch, n or p equal to zero, or an
  /// entry outside [0,1]. `category_names` may be empty; otherwise it needs p entries.
  DesignMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
               std::vector<std::string> category_names = {});

  /// Single-category design from one column of degrees.
  static DesignMatrix column(std::vector<double> degrees, std::string category_name = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * cols_ + col]; }
  std::span<const double> row(std::size_t k) const noexcept { return {entries_.data() + k * cols_, cols_}; }
  /// Falls back to "category <j>" when no name was given.
  std::string category_name(std::size_t col) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  std::vector<std::string> names_;
};

/// Diagonal of the fuzzy-group weight matrix: one degree in [0,1] per sample.
class WeightVector {
 public:
  /// Throws DomainError if an entry lies outside [0,1].
  explicit WeightVector(std::vector<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const noexcept { return entries_[k]; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::vector<double> entries_;
};

/// Observed responses, one per sample.
class ResponseVector {
 public:
  /// Throws DomainError on a non-finite entry.
  explicit ResponseVector(std::vector<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const noexcept { return entries_[k]; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::vector<double> entries_;
};

/// Fitted weight per category, expressed per unit of membership.
struct CategoryWeights {
  std::vector<double> a;

  std::size_t size() const noexcept { return a.size(); }
  double operator[](std::size_t j) const noexcept { return a[j]; }

  friend bool operator==(const CategoryWeights&, const CategoryWeights&) = default;
};

/// Relative pivot threshold below which the normal equations count as singular.
inline constexpr double kSingularPivotTolerance = 1e-9;

/// Ordinary least squares with intercept. Throws FitError when fewer than two
/// points are given, the sizes differ, or xs has zero variance.
LinearFit ols_fit(std::span<const double> xs, std::span<const double> ys, CovariateUnit unit);

/// Weighted least-squares category weights without intercept:
/// a = (X'GX)^-1 X'Gy, solved by Gaussian elimination with partial pivoting.
///
/// Throws DomainError on a dimension mismatch, FitError when every weight is
/// zero, and SingularityError (naming the category) when a pivot falls below
/// kSingularPivotTolerance times the largest diagonal entry of X'GX.
CategoryWeights fqt_fit(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y);

/// sum_k G_k (y_k - sum_j X_kj a_j)^2. Throws DomainError on a dimension mismatch.
double weighted_sse(const DesignMatrix& x, const WeightVector& g, const ResponseVector& y,
                    const CategoryWeights& a);

}  // namespace fqt
