#pragma once

namespace fqt {

/// Saturating linear ramp: 0 at `lower`, rising linearly to 1 at `upper`,
/// and 1 beyond. The default bounds describe attendance over 16 sessions.
class RampMembership {
 public:
  static constexpr double kDefaultLower = 0.0;
  static constexpr double kDefaultUpper = 16.0;

  RampMembership() = default;
  /// Throws DomainError unless lower < upper and both are finite.
  RampMembership(double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }

  /// Degree in [0,1]. Values below `lower` map to 0, above `upper` to 1.
  double eval(double x) const noexcept;

  /// Covariate value on the rising segment with degree `mu`.
  /// Throws DomainError when mu is outside [0,1].
  double invert(double mu) const;

 private:
  double lower_ = kDefaultLower;
  double upper_ = kDefaultUpper;
};

}  // namespace fqt
