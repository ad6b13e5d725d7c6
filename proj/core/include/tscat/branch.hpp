#ifndef TSCAT_BRANCH_HPP
#define TSCAT_BRANCH_HPP

#include <complex>
#include <optional>

namespace tscat {

/// Which side of the cut [0, inf) a boundary evaluation approaches from.
enum class CutSide { Above, Below };

/// Square root with the branch cut along [0, inf), i.e. arg z taken in
/// (0, 2pi).  The image is the closed upper half-plane: Im sqrt > 0 off the
/// cut, so Herglotz terms built from it reflect correctly across the axis.
/// For z on the cut a side must be supplied (Above -> +sqrt(x),
/// Below -> -sqrt(x)); otherwise OnCutWithoutSide is raised.
std::complex<double> sqrt_upper(std::complex<double> z,
                                std::optional<CutSide> side = std::nullopt);

}  // namespace tscat

#endif
