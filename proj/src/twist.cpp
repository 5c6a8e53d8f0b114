#include "curveplex/twist.hpp"

#include "curveplex/diagram.hpp"
#include "curveplex/errors.hpp"
#include "curveplex/intersection.hpp"

namespace curveplex {

Word dehn_twist(const std::shared_ptr<const SurfaceModel>& surface, const Word& w,
                const Word& about, int n) {
  Word wt = surface->dehn_reduce_cyclic(w);
  if (wt.empty()) throw EmptyAfterReduction();
  Word ct = surface->dehn_reduce_cyclic(about);
  if (ct.empty()) throw EmptyAfterReduction();
  if (self_intersection_number(surface, ct) != 0)
    throw NotSimple("cannot twist about " + word_name(ct));
  if (n == 0) return wt;

  Diagram d(surface, {wt, ct});
  d.tauten();
  const Word& dw = d.word(0);
  const Word& dc = d.word(1);
  auto xs = d.crossings_of_pair(0, 1);  // ordered along w
  if (xs.empty()) return surface->dehn_reduce_cyclic(dw);

  Word out;
  size_t next = 0;
  for (size_t t = 0; t < dw.size(); ++t) {
    out.push_back(dw[t]);
    for (; next < xs.size() && xs[next].a_arc == static_cast<int>(t); ++next) {
      Word loop = rotated(dc, xs[next].b_arc + 1);
      out = concat(out, power(loop, -n * xs[next].sign));
    }
  }
  if (next != xs.size()) throw Internal("crossing list ran past the last arc");
  return surface->dehn_reduce_cyclic(out);
}

MappingClass& MappingClass::twist(const Word& about, int n) {
  factors_.push_back({about, n});
  return *this;
}

MappingClass MappingClass::then(const MappingClass& later) const {
  MappingClass out(surface_);
  out.factors_ = factors_;
  out.factors_.insert(out.factors_.end(), later.factors_.begin(), later.factors_.end());
  return out;
}

MappingClass MappingClass::inverse() const {
  MappingClass inv(surface_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    inv.factors_.push_back({it->about, -it->n});
  return inv;
}

std::vector<std::pair<Word, int>> MappingClass::factors() const {
  std::vector<std::pair<Word, int>> out;
  out.reserve(factors_.size());
  for (const Factor& f : factors_) out.emplace_back(f.about, f.n);
  return out;
}

Word MappingClass::apply(const Word& w) const {
  Word cur = w;
  for (const Factor& f : factors_) cur = dehn_twist(surface_, cur, f.about, f.n);
  return cur;
}

}  // namespace curveplex
