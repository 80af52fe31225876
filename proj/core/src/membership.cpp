#include "fqt/membership.hpp"

#include <cmath>
#include <string>

#include "fqt/errors.hpp"

namespace fqt {

RampMembership::RampMembership(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw DomainError("membership bounds must satisfy lower < upper (got " + std::to_string(lower) +
                      ", " + std::to_string(upper) + ")");
  }
}

double RampMembership::eval(double x) const noexcept {
  if (x <= lower_) return 0.0;
  if (x >= upper_) return 1.0;
  return (x - lower_) / (upper_ - lower_);
}

double RampMembership::invert(double mu) const {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("membership degree " + std::to_string(mu) + " is outside [0,1]");
  }
  return lower_ + mu * (upper_ - lower_);
}

}  // namespace fqt
