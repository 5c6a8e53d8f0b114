#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"
#include "curveplex/twist.hpp"

namespace curveplex {

enum class Side { V, W };

inline const char* side_name(Side s) { return s == Side::V ? "V" : "W"; }

/// User-asserted hypotheses about the glued 3-manifold. They cannot be
/// certified here; lemma-shaped structural assertions are only armed when
/// both are set and the genus is at least 3.
struct HypothesisFlags {
  bool assume_irreducible = false;
  bool assume_unstabilized = false;
};

/// Search bounds for disk enumeration: canonical boundary word length,
/// band arc length, and the depth of twist products applied to the disks
/// found by banding.
struct DiskBudget {
  int word_length = 8;
  int arc_length = 2;
  int twist_depth = 0;
};

/// A genus-g surface splitting two handlebodies: the inner side V
/// compresses the standard curves a1..ag, the outer side W compresses
/// their images under the gluing map.
class HeegaardSplitting {
 public:
  HeegaardSplitting(std::shared_ptr<const SurfaceModel> surface, MappingClass gluing,
                    HypothesisFlags flags = {});

  const std::shared_ptr<const SurfaceModel>& surface() const { return surface_; }
  const MappingClass& gluing() const { return gluing_; }
  const HypothesisFlags& flags() const { return flags_; }
  int genus() const { return surface_->genus(); }

  /// True when the genus supports the structural lemmas and both
  /// hypothesis flags are asserted.
  bool lemmas_armed() const {
    return genus() >= 3 && flags_.assume_irreducible && flags_.assume_unstabilized;
  }

  /// The standard disk boundaries a1..ag.
  std::vector<Word> cut_system() const;
  /// Their images under the gluing, i.e. the W-side cut system.
  std::vector<Word> glued_cut_system() const;

  /// Text fully determining this splitting, used as a cache key.
  std::string spec_key() const;

 private:
  std::shared_ptr<const SurfaceModel> surface_;
  MappingClass gluing_;
  HypothesisFlags flags_;
};

/// A compressing disk, named by its boundary curve and side. The boundary
/// is stored in canonical unoriented form.
struct DiskClass {
  Word boundary;
  Side side = Side::V;

  friend bool operator==(const DiskClass& a, const DiskClass& b) {
    return a.side == b.side && a.boundary == b.boundary;
  }
};

/// Canonical unoriented representative: the smaller of the two oriented
/// canonical spellings by (length, lexicographic) order.
Word canonical_unoriented(const std::shared_ptr<const SurfaceModel>& surface, const Word& w);

/// Whether the simple essential curve bounds a disk on the given side:
/// on V, its image under killing a1..ag freely reduces to nothing; on W,
/// the same test after undoing the gluing. Throws NotSimple /
/// EmptyAfterReduction.
bool bounds_disk(const HeegaardSplitting& split, const Word& curve, Side side);

/// Joins two parallel copies of the disk along a band following the arc
/// word. The result bounds on the same side, is disjoint from its parent,
/// and is rejected with BadArc when the arc is not drawable (the banded
/// curve fails to embed or to stay off the parent) or degenerate (result
/// null or isotopic to the parent).
DiskClass band_sum(const HeegaardSplitting& split, const DiskClass& disk, const Word& arc);

/// Deterministic budget-bounded disk enumeration: the cut system, band
/// sums of cut disks over arcs within budget, and images of those disks
/// under twist products about the standard curves up to the budget depth,
/// filtered by embeddedness and disk-bounding, deduplicated by class and
/// sorted by (boundary length, spelling). W-side disks are the gluing
/// images of the V-side enumeration (their lengths may exceed the word
/// budget; the gluing images of the cut system are always present).
/// Results are cached per (spec, side, budget) under the directory named
/// by CURVEPLEX_CACHE_DIR when that variable is set.
std::vector<DiskClass> enumerate_disks(const HeegaardSplitting& split, Side side,
                                       const DiskBudget& budget = {});

}  // namespace curveplex
