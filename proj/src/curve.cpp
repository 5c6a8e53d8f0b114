#include "curveplex/curve.hpp"

#include "curveplex/errors.hpp"

namespace curveplex {

CurveClass::CurveClass(std::shared_ptr<const SurfaceModel> surface, Word w)
    : surface_(std::move(surface)) {
  word_ = surface_->dehn_reduce_cyclic(std::move(w));
  if (word_.empty()) throw EmptyAfterReduction();
}

CurveClass::CurveClass(std::shared_ptr<const SurfaceModel> surface, const std::string& text)
    : CurveClass(surface, parse_word(text, surface->genus())) {}

const Word& CurveClass::geodesic() const {
  if (!geodesic_) geodesic_ = word_;
  return *geodesic_;
}

std::string CurveClass::key() const {
  if (!key_) key_ = surface_->class_key(word_);
  return *key_;
}

std::string CurveClass::key_unoriented() const {
  if (!key_unoriented_) key_unoriented_ = surface_->class_key_unoriented(word_);
  return *key_unoriented_;
}

bool CurveClass::same_class(const CurveClass& other) const {
  return surface_->classes_equal(word_, other.word_);
}

bool CurveClass::same_class_unoriented(const CurveClass& other) const {
  return surface_->classes_equal_unoriented(word_, other.word_);
}

CurveClass CurveClass::reversed() const { return CurveClass(surface_, inverse(word_)); }

CurveClass CurveClass::powered(int k) const {
  if (k == 0) throw BadInput("zero power of a curve is null-homotopic");
  Word w = power(k > 0 ? word_ : inverse(word_), k > 0 ? k : -k);
  return CurveClass(surface_, std::move(w));
}

}  // namespace curveplex
