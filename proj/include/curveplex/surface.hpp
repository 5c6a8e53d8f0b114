#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curveplex/letters.hpp"

namespace curveplex {

/// Closed orientable genus-g surface presented by the one-vertex 4g-gon.
///
/// Curves are cyclic words of wall crossings on the polygon. The polygon
/// boundary identification word is chosen so that the walk around the single
/// vertex spells the standard relator [a1,b1][a2,b2]...[ag,bg]; the group of
/// wall words is therefore the standard one-relator surface group.
class SurfaceModel {
 public:
  explicit SurfaceModel(int genus);

  int genus() const { return genus_; }
  int n_sides() const { return 4 * genus_; }
  int half() const { return 2 * genus_; }

  const Word& relator() const { return relator_; }
  const Word& boundary_word() const { return boundary_; }

  /// All rotations of the relator and of its inverse.
  const std::vector<Word>& relator_variants() const { return variants_; }

  /// Side index carrying label x on the polygon boundary.
  int side_of(Letter x) const;
  Letter side_label(int k) const { return boundary_[static_cast<size_t>(k)]; }

  /// Word spelled by walking the edge germs once around the glued vertex.
  Word vertex_word() const;

  /// Dehn's algorithm: repeatedly replace any subword longer than half the
  /// relator by the shorter complement. Output is freely reduced with no
  /// over-half relator subword. That alone does not make it a shortest
  /// spelling of the element: an exactly-half exchange can expose a further
  /// reduction. Exact element comparisons must close over exchanges and
  /// restart on any uncovered shortening.
  Word dehn_reduce(Word w) const;

  /// Same reduction applied to the cyclic word (subwords may wrap).
  Word dehn_reduce_cyclic(Word w) const;

  bool is_null(const Word& w) const;
  bool has_long_relator_subword_cyclic(const Word& w) const;

  /// Lexicographically least cyclic geodesic spelling of the oriented class,
  /// reachable through rotations and half-relator exchanges.
  Word canonical_cyclic(const Word& w) const;

  std::string class_key(const Word& w) const;
  std::string class_key_unoriented(const Word& w) const;
  bool classes_equal(const Word& u, const Word& v) const;
  bool classes_equal_unoriented(const Word& u, const Word& v) const;

  /// Smallest z with w conjugate to z^k; k goes to power_out if non-null.
  Word primitive_root(const Word& w, int* power_out = nullptr) const;

  std::vector<long long> homology(const Word& w) const;
  bool homology_zero(const Word& w) const;
  long long pairing(const Word& u, const Word& v) const;

 private:
  int genus_;
  Word relator_;
  Word boundary_;
  std::vector<Word> variants_;
  std::vector<int> side_of_;

  // Longest common prefix of w[i..] with any relator variant; returns length
  // and the variant index achieving it.
  int longest_variant_match(const Word& w, size_t i, int* variant_out) const;
};

std::shared_ptr<const SurfaceModel> make_surface(int genus);

}  // namespace curveplex
