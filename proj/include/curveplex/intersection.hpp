#pragma once

#include <memory>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

/// Counting engines behind the exact crossing numbers. They share nothing
/// past the word layer, so agreement between them is a real check.
///
///  - Diagram: realize the classes as chord diagrams on the polygon, splice
///    until taut, group the remaining crossings by the deck transformation
///    matching their two strands, and count the groups of odd size. Two
///    crossings in one group cancel against each other under a homotopy, and
///    a group whose strands genuinely link keeps exactly one crossing, so
///    parities survive any crossing pairs the splicing pass cannot see.
///  - LinkedPairs: order the ends of the lifted lines on the circle at
///    infinity with words alone and count linked conjugate lines per deck
///    orbit.
///  - Fuchsian: the same counting on a fixed hyperbolic realization with
///    certified interval arithmetic.
enum class CountRoute { Diagram, LinkedPairs, Fuchsian };

/// Minimal crossing number between the free homotopy classes of u and v,
/// each taken over all transverse representatives. Powers and shared roots
/// are split off algebraically; the primitive distinct-line core goes to
/// the requested route. Throws EmptyAfterReduction on null classes.
int intersection_number(const std::shared_ptr<const SurfaceModel>& surface,
                        const Word& u, const Word& v,
                        CountRoute route = CountRoute::Diagram);

/// Minimal self crossing number of the free homotopy class of w.
int self_intersection_number(const std::shared_ptr<const SurfaceModel>& surface,
                             const Word& w,
                             CountRoute route = CountRoute::Diagram);

}  // namespace curveplex
