#include "curveplex/intersection.hpp"

#include <cstdlib>
#include <vector>

#include "curveplex/diagram.hpp"
#include "curveplex/errors.hpp"
#include "curveplex/fuchsian.hpp"
#include "curveplex/linked_pairs.hpp"

namespace curveplex {
namespace {

// h lies in <z> for primitive z exactly when h commutes with z: centralizers
// here are the cyclic groups over primitive roots.
bool in_cyclic(const SurfaceModel& sur, const Word& h, const Word& z) {
  if (h.empty()) return true;
  Word c = concat(concat(h, z), concat(inverse(h), inverse(z)));
  return sur.is_null(free_reduce(c));
}

// Deck transformation matching the two strands of a crossing: develop each
// curve from the base tile to the arc carrying the crossing.
Word strand_shift(const Word& wu, int u_arc, const Word& wv, int v_arc) {
  Word pu(wu.begin(), wu.begin() + u_arc + 1);
  Word pv(wv.begin(), wv.begin() + v_arc + 1);
  return free_reduce(concat(pu, inverse(pv)));
}

// Same unordered pair of lifted lines up to the deck action: the shifts
// differ by powers of the curves on each side. Prefix developments stay
// inside one period, so a small power window is exhaustive.
bool same_pair_class(const SurfaceModel& sur, const Word& u, const Word& v,
                     const Word& g1, const Word& g2) {
  for (int a = -4; a <= 4; ++a) {
    Word h = free_reduce(concat(concat(inverse(g2), power(u, a)), g1));
    if (in_cyclic(sur, sur.dehn_reduce(h), v)) return true;
  }
  return false;
}

bool same_self_class(const SurfaceModel& sur, const Word& w, const Word& g1,
                     const Word& g2) {
  return same_pair_class(sur, w, w, g1, g2) ||
         same_pair_class(sur, w, w, inverse(g1), g2);
}

// Crossings of one taut diagram grouped by strand shift; groups of even
// size cancel, each odd group contributes one essential crossing.
template <typename Same>
int odd_classes(const std::vector<Word>& shifts, Same&& same) {
  std::vector<int> rep(shifts.size());
  std::vector<int> count;
  for (size_t i = 0; i < shifts.size(); ++i) {
    int found = -1;
    for (size_t j = 0; j < i; ++j) {
      if (rep[j] == static_cast<int>(j) && same(shifts[i], shifts[j])) {
        found = static_cast<int>(j);
        break;
      }
    }
    rep[i] = found < 0 ? static_cast<int>(i) : found;
    count.push_back(0);
    ++count[static_cast<size_t>(rep[i])];
  }
  int odd = 0;
  for (size_t i = 0; i < shifts.size(); ++i)
    if (rep[i] == static_cast<int>(i) && count[i] % 2 != 0) ++odd;
  return odd;
}

// ---- primitive kernels ----------------------------------------------------

int diagram_pair(const std::shared_ptr<const SurfaceModel>& sur, const Word& u,
                 const Word& v) {
  Diagram d(sur, {u, v});
  d.tauten();
  const Word& du = d.word(0);
  const Word& dv = d.word(1);
  std::vector<Word> shifts;
  for (const DiagramCrossing& x : d.crossings_of_pair(0, 1))
    shifts.push_back(strand_shift(du, x.a_arc, dv, x.b_arc));
  return odd_classes(shifts, [&](const Word& g1, const Word& g2) {
    return same_pair_class(*sur, du, dv, g1, g2);
  });
}

int diagram_self(const std::shared_ptr<const SurfaceModel>& sur, const Word& w) {
  Diagram d(sur, {w});
  d.tauten();
  const Word& dw = d.word(0);
  std::vector<Word> shifts;
  for (const DiagramCrossing& x : d.self_crossing_list(0))
    shifts.push_back(strand_shift(dw, x.a_arc, dw, x.b_arc));
  return odd_classes(shifts, [&](const Word& g1, const Word& g2) {
    return same_self_class(*sur, dw, g1, g2);
  });
}

int pair_kernel(const std::shared_ptr<const SurfaceModel>& sur, const Word& u,
                const Word& v, CountRoute route) {
  switch (route) {
    case CountRoute::Diagram:
      return diagram_pair(sur, u, v);
    case CountRoute::LinkedPairs:
      return linked_pairs_intersection(sur, u, v);
    case CountRoute::Fuchsian:
      return fuchsian_intersection(sur, u, v);
  }
  throw Internal("unhandled counting route");
}

int self_kernel(const std::shared_ptr<const SurfaceModel>& sur, const Word& w,
                CountRoute route) {
  switch (route) {
    case CountRoute::Diagram:
      return diagram_self(sur, w);
    case CountRoute::LinkedPairs:
      return linked_pairs_self(sur, w);
    case CountRoute::Fuchsian:
      return fuchsian_self(sur, w);
  }
  throw Internal("unhandled counting route");
}

}  // namespace

int self_intersection_number(const std::shared_ptr<const SurfaceModel>& surface,
                             const Word& w, CountRoute route) {
  Word wt = surface->dehn_reduce_cyclic(w);
  if (wt.empty()) throw EmptyAfterReduction();
  int k = 1;
  Word root = surface->primitive_root(wt, &k);
  int base = self_kernel(surface, root, route);
  if (k == 1) return base;
  // Each of the root's crossings multiplies by k^2; the k parallel strands
  // of the power add k-1 crossings of their own.
  return k * k * base + k - 1;
}

int intersection_number(const std::shared_ptr<const SurfaceModel>& surface,
                        const Word& u, const Word& v, CountRoute route) {
  Word ut = surface->dehn_reduce_cyclic(u);
  Word vt = surface->dehn_reduce_cyclic(v);
  if (ut.empty() || vt.empty()) throw EmptyAfterReduction();
  int ku = 1, kv = 1;
  Word ru = surface->primitive_root(ut, &ku);
  Word rv = surface->primitive_root(vt, &kv);
  if (surface->classes_equal_unoriented(ru, rv)) {
    // Two curves on one line: every crossing of the root with itself is hit
    // ku*kv times from each side.
    return 2 * ku * kv * self_kernel(surface, ru, route);
  }
  return ku * kv * pair_kernel(surface, ru, rv, route);
}

}  // namespace curveplex
