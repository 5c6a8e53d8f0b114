#pragma once

#include <memory>
#include <optional>
#include <string>

#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

namespace curveplex {

// A free homotopy class of an essential closed curve, stored as a cyclically
// reduced wall-crossing word. Construction rejects null-homotopic input.
class CurveClass {
 public:
  CurveClass(std::shared_ptr<const SurfaceModel> surface, Word w);
  CurveClass(std::shared_ptr<const SurfaceModel> surface, const std::string& text);

  const std::shared_ptr<const SurfaceModel>& surface() const { return surface_; }
  int genus() const { return surface_->genus(); }
  const Word& word() const { return word_; }
  // Shortest cyclic representative (computed once, cached).
  const Word& geodesic() const;
  std::string name() const { return word_name(word_); }

  std::string key() const;            // oriented class key
  std::string key_unoriented() const;

  bool same_class(const CurveClass& other) const;
  bool same_class_unoriented(const CurveClass& other) const;

  std::vector<long long> homology() const { return surface_->homology(word_); }
  bool separating_homology() const { return surface_->homology_zero(word_); }

  CurveClass reversed() const;
  CurveClass powered(int k) const;

  // Cached flag set by the intersection layer once self-intersection is known.
  std::optional<bool> simple_hint() const { return simple_hint_; }
  void set_simple_hint(bool v) const { simple_hint_ = v; }

 private:
  std::shared_ptr<const SurfaceModel> surface_;
  Word word_;
  mutable std::optional<Word> geodesic_;
  mutable std::optional<std::string> key_;
  mutable std::optional<std::string> key_unoriented_;
  mutable std::optional<bool> simple_hint_;
};

}  // namespace curveplex
