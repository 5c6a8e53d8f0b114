#pragma once

#include <memory>
#include <vector>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"
#include "curveplex/twist.hpp"

namespace curveplex {

/// Two curves positioned with exactly two crossings of opposite sign,
/// recorded by the four connecting arcs. x names the positive crossing and
/// y the negative one; read as based loops at x, the curves are
/// v = v_xy · v_yx and w = w_xy · w_yx. The position matters: the same two
/// classes in a different position give different ring curves, and the
/// interesting configurations are exactly the ones a free isotopy would
/// simplify.
struct TwoCrossingConfig {
  Word v_xy, v_yx;
  Word w_xy, w_yx;
};

/// One boundary ring of a neighborhood of the configured union, with the
/// direction the rotation twists it.
struct TwistRing {
  Word curve;
  int direction = 0;  // +1 or -1
};

/// The rotation of a solid-torus neighborhood of the configured union,
/// compiled to Dehn twists about the neighborhood's boundary rings. The
/// four ring walks pair one arc of each curve; walks traversing their two
/// arcs with opposite orientations twist one way, coherent walks the other
/// way. Null rings are dropped (their twists are isotopically trivial).
struct TorusTwist {
  Word v;                       // class of the first configured curve
  Word w;                       // class of the second configured curve
  std::vector<TwistRing> rings; // essential rings only
  int trivial_rings = 0;        // null walks discarded
  MappingClass tau;             // one full rotation
  MappingClass nu;              // tau applied twice
};

/// Builds the rotation from an explicit two-crossing position.
TorusTwist build_torus_twist(const std::shared_ptr<const SurfaceModel>& surface,
                             const TwoCrossingConfig& config, bool flip = false);

/// Convenience form for classes whose taut position has exactly two
/// crossings: pulls the pair taut and reads the configuration off the
/// diagram. Throws BadCrossingData unless the taut position has exactly
/// two crossings of opposite sign.
TorusTwist build_torus_twist(const std::shared_ptr<const SurfaceModel>& surface,
                             const Word& v, const Word& w_prime, bool flip = false);

/// Drags w across v: the dragged curve leaves w along the lane, runs once
/// around parallel to v (wrap = +1 follows v's orientation, -1 opposes it)
/// and returns, crossing v twice with opposite signs. The band connecting
/// w to the tip only embeds for one of the two ways the base loop can be
/// traversed; the drawable one is selected, so the dragged class is
/// w^s · lane · v^wrap · lane^-1 with s = +1 or -1 forced by the lane.
/// Different lanes give genuinely different dragged classes. Requires
/// simple disjoint non-equivalent classes; throws NotSimple / NotDisjoint /
/// BadInput / NoLane.
TwoCrossingConfig drag_configuration(const std::shared_ptr<const SurfaceModel>& surface,
                                     const Word& w, const Word& v, const Word& lane,
                                     int wrap = 1);

/// The dragged curve's class: w^s · lane · v^wrap · lane^-1, reduced.
Word drag(const std::shared_ptr<const SurfaceModel>& surface, const Word& w, const Word& v,
          const Word& lane, int wrap = 1);

/// The first `count` freely reduced words in (length, lex) order, starting
/// with the empty word: a deterministic lane enumeration for drag calls.
std::vector<Word> drag_lanes(const std::shared_ptr<const SurfaceModel>& surface, size_t count);

}  // namespace curveplex
