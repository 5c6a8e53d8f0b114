#pragma once

#include <memory>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

/// Numeric crossing counts on a fixed hyperbolic realization of the polygon.
///
/// The polygon is realized as a regular 4g-gon in the upper half-plane whose
/// corner angles tile the vertex, and each wall label becomes the isometry
/// gluing the wall to its partner. A wall word then becomes a matrix, a free
/// homotopy class becomes a translation axis, and crossing counts become
/// counts of conjugate axes meeting a fundamental stretch of a fixed axis.
///
/// Every sign decision is checked against a working tolerance; when a margin
/// is too thin the whole computation is retried in a rotated frame and, if
/// needed, at a higher precision, so a returned count is always certified.
///
/// Both entry points expect primitive classes; pair counts additionally
/// expect classes with distinct primitive roots (callers dispatch powers and
/// equal classes algebraically).
int fuchsian_intersection(const std::shared_ptr<const SurfaceModel>& surface,
                          const Word& u, const Word& v);
int fuchsian_self(const std::shared_ptr<const SurfaceModel>& surface,
                  const Word& w);

}  // namespace curveplex
