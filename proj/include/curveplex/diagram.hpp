#pragma once

#include <memory>
#include <vector>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

/// One transverse intersection point between two curves of a diagram,
/// reported in word coordinates: the crossing lies on the arc between
/// passages `arc` and `arc+1` of each curve. `rank` orders crossings that
/// share an arc of curve a (0 = nearest the arc start). `sign` is the
/// orientation of (tangent of a, tangent of b) in the surface orientation.
struct DiagramCrossing {
  int a_arc = 0;
  int a_rank = 0;
  int b_arc = 0;
  int b_rank = 0;
  int sign = 0;
};

/// One edge of a complement-region boundary walk: a maximal crossing-free
/// run of some curve, traversed forward or backward, with the wall letters
/// read in the walk direction.
struct FaceEdge {
  int curve = 0;
  bool forward = true;
  Word letters;
};

struct FaceWalk {
  std::vector<FaceEdge> edges;
  Word word;  // concatenated letters, freely reduced
};

/// One connected piece of the surface cut along a disjoint simple system.
struct CutPiece {
  int genus = 0;
  int boundaries = 0;
  std::vector<int> boundary_curves;  // input index per boundary circle
};

/// An exact realization of a system of closed curves on the polygon:
/// every curve is a cyclic sequence of wall passages with rational wall
/// parameters, arcs are chords of the circumscribed circle, and all
/// crossing data is computed with exact rational arithmetic.
///
/// `tauten` repeatedly splices the diagram across complement regions whose
/// boundary walk has one or two edges and a null-homotopic wall word. For
/// systems of embedded curves the end state realizes every self and pair
/// minimum: an excess crossing of embedded curves always leaves an empty
/// two-edge disk region to splice. Non-simple curves can retain crossing
/// pairs that cancel across a region no embedded disk exposes, so raw
/// counts read off a taut diagram are exact upper bounds; exact minima for
/// those are recovered by grouping crossings into deck classes and taking
/// parities (see the intersection counting layer). Curves sharing a
/// primitive root are handled algebraically by callers, not read off a
/// diagram.
class Diagram {
 public:
  Diagram(std::shared_ptr<const SurfaceModel> surface, std::vector<Word> curves);
  ~Diagram();
  Diagram(Diagram&&) noexcept;
  Diagram& operator=(Diagram&&) noexcept;

  int curve_count() const;
  const Word& word(int c) const;

  void tauten();
  bool is_taut() const;  // no null one- or two-edge region walks remain

  int total_crossings() const;
  int self_crossings(int c) const;
  int crossings_between(int a, int b) const;

  /// Crossings of curves a and b ordered along a (arc index, then position
  /// along the arc). Requires a != b.
  std::vector<DiagramCrossing> crossings_of_pair(int a, int b) const;

  /// Self crossings of curve c, each reported once with a_arc < b_arc,
  /// ordered along the curve.
  std::vector<DiagramCrossing> self_crossing_list(int c) const;

  /// Boundary walks of the complement regions. Curves without crossings do
  /// not appear in walks; see neighborhood_boundary_words for those.
  std::vector<FaceWalk> faces() const;

  /// Free homotopy classes of the boundary circles of a regular
  /// neighborhood of the union of all curves.
  std::vector<Word> neighborhood_boundary_words() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;

  friend std::vector<CutPiece> cut_profile(std::shared_ptr<const SurfaceModel> surface,
                                           std::vector<Word> curves);
};

/// Cuts the surface along a system of pairwise disjoint simple curves and
/// reports the pieces. Throws NotDisjoint if the system cannot be realized
/// without crossings, NotSimple if a single curve cannot.
std::vector<CutPiece> cut_profile(std::shared_ptr<const SurfaceModel> surface,
                                  std::vector<Word> curves);

}  // namespace curveplex
