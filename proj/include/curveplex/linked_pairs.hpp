#pragma once

#include <memory>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

/// Exact crossing counts from the circular order of axis ends at infinity,
/// computed with words alone.
///
/// A wall word drags the tiling along an invariant line whose two ends are
/// spelled by the eventually periodic rays c r^inf and c r^-inf. Reading a
/// reduced spelling as a sequence of exits (which wall the ray leaves each
/// tile through, counted from the wall it entered by) gives an address;
/// spellings of one ray of equal length differ only by half-cycle exchanges,
/// and the least address over those spellings orders distinct ends exactly
/// as they sit on the circle. Two lines cross when their end pairs
/// interleave in that order, and a crossing count is a count of crossing
/// conjugate lines up to the deck action of the base class.
///
/// Both entry points expect primitive classes; pair counts additionally
/// expect classes with distinct primitive roots (callers dispatch powers and
/// equal classes algebraically).
int linked_pairs_intersection(const std::shared_ptr<const SurfaceModel>& surface,
                              const Word& u, const Word& v);
int linked_pairs_self(const std::shared_ptr<const SurfaceModel>& surface,
                      const Word& w);

}  // namespace curveplex
