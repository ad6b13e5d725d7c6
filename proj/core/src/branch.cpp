#include "tscat/branch.hpp"

#include <cmath>

#include "tscat/errors.hpp"

namespace tscat {

std::complex<double> sqrt_upper(std::complex<double> z, std::optional<CutSide> side) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) {
    if (x >= 0.0) {
      if (!side) throw OnCutWithoutSide("sqrt_upper on [0,inf) needs a side");
      const double r = std::sqrt(x);
      return *side == CutSide::Above ? std::complex<double>(r, 0.0)
                                     : std::complex<double>(-r, 0.0);
    }
    return {0.0, std::sqrt(-x)};
  }
  // arg in (0, 2pi): fold the lower half-plane onto (pi, 2pi)
  double theta = std::atan2(y, x);
  if (theta < 0.0) theta += 2.0 * M_PI;
  const double r = std::sqrt(std::hypot(x, y));
  return {r * std::cos(theta / 2.0), r * std::sin(theta / 2.0)};
}

}  // namespace tscat
