#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

/// Dehn twist about a simple closed curve, applied n times (negative n
/// twists the other way). Realizes w and the twisting curve taut on the
/// polygon and inserts at every crossing the twisting loop based at that
/// crossing, raised to n times the crossing sign; orientation is pinned by
/// twist(a1 about b1) = b1 a1. Throws NotSimple when the twisting curve
/// self-crosses, EmptyAfterReduction when w is null-homotopic.
Word dehn_twist(const std::shared_ptr<const SurfaceModel>& surface, const Word& w,
                const Word& about, int n = 1);

/// Composition of Dehn twists; factors apply first-to-last.
class MappingClass {
 public:
  explicit MappingClass(std::shared_ptr<const SurfaceModel> surface)
      : surface_(std::move(surface)) {}

  /// Appends a twist applied after the factors already present.
  MappingClass& twist(const Word& about, int n = 1);

  /// This map followed by `later`: apply(x) = later.apply(this->apply(x)).
  MappingClass then(const MappingClass& later) const;

  MappingClass inverse() const;
  Word apply(const Word& w) const;
  size_t factor_count() const { return factors_.size(); }

  /// Factor list in application order, as (curve, power) pairs.
  std::vector<std::pair<Word, int>> factors() const;

 private:
  struct Factor {
    Word about;
    int n;
  };
  std::shared_ptr<const SurfaceModel> surface_;
  std::vector<Factor> factors_;
};

}  // namespace curveplex
