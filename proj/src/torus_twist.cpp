#include "curveplex/torus_twist.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "curveplex/diagram.hpp"
#include "curveplex/errors.hpp"
#include "curveplex/intersection.hpp"

namespace curveplex {

namespace {

// Letters crossed walking forward from just after (from_arc, from_rank) to
// the point (to_arc, to_rank). Two points in one gap are separated by no
// walls one way and by the whole word the other way.
Word arc_between(const Word& w, int from_arc, int from_rank, int to_arc, int to_rank) {
  if (from_arc == to_arc && from_rank < to_rank) return {};
  Word out;
  const int n = static_cast<int>(w.size());
  int i = from_arc;
  do {
    i = (i + 1) % n;
    out.push_back(w[static_cast<size_t>(i)]);
  } while (i != to_arc);
  return out;
}

// The four boundary walks of a neighborhood of the configured union. Each
// pairs one arc of each curve; the two walks mixing a forward arc with a
// backward one twist opposite to the two coherent walks.
std::array<std::pair<Word, int>, 4> ring_walks(const TwoCrossingConfig& config) {
  return {{
      {free_reduce(concat(config.v_xy, inverse(config.w_xy))), 1},
      {free_reduce(concat(inverse(config.v_yx), config.w_yx)), 1},
      {free_reduce(concat(config.w_xy, config.v_yx)), -1},
      {free_reduce(concat(inverse(config.v_xy), inverse(config.w_yx))), -1},
  }};
}

// A position is only drawable if both curves and every neighborhood ring
// are embedded and mutually disjoint away from the two crossings.
bool config_embeds(const std::shared_ptr<const SurfaceModel>& surface,
                   const TwoCrossingConfig& config) {
  const Word v = surface->dehn_reduce_cyclic(concat(config.v_xy, config.v_yx));
  const Word w = surface->dehn_reduce_cyclic(concat(config.w_xy, config.w_yx));
  if (self_intersection_number(surface, w) != 0) return false;
  std::vector<Word> rings;
  for (const auto& [walk, dir] : ring_walks(config)) {
    Word ring = surface->dehn_reduce_cyclic(walk);
    if (ring.empty()) continue;
    if (self_intersection_number(surface, ring) != 0) return false;
    if (intersection_number(surface, ring, v) != 0) return false;
    if (intersection_number(surface, ring, w) != 0) return false;
    rings.push_back(std::move(ring));
  }
  for (size_t i = 0; i < rings.size(); ++i)
    for (size_t j = i + 1; j < rings.size(); ++j)
      if (intersection_number(surface, rings[i], rings[j]) != 0) return false;
  return true;
}

}  // namespace

TorusTwist build_torus_twist(const std::shared_ptr<const SurfaceModel>& surface,
                             const TwoCrossingConfig& config, bool flip) {
  TorusTwist out{Word{}, Word{}, {}, 0, MappingClass(surface), MappingClass(surface)};
  out.v = surface->dehn_reduce_cyclic(concat(config.v_xy, config.v_yx));
  out.w = surface->dehn_reduce_cyclic(concat(config.w_xy, config.w_yx));
  if (out.v.empty() || out.w.empty()) throw EmptyAfterReduction();

  const int d = flip ? -1 : 1;
  for (const auto& [walk, dir0] : ring_walks(config)) {
    const int dir = dir0 * d;
    Word ring = surface->dehn_reduce_cyclic(walk);
    if (ring.empty()) {
      ++out.trivial_rings;
      continue;
    }
    if (self_intersection_number(surface, ring) != 0)
      throw BadCrossingData("configuration is not embeddable, ring " + word_name(ring) +
                            " self-crosses");
    out.rings.push_back({ring, dir});
  }
  for (const TwistRing& r : out.rings) out.tau.twist(r.curve, r.direction);
  out.nu = out.tau.then(out.tau);
  return out;
}

TorusTwist build_torus_twist(const std::shared_ptr<const SurfaceModel>& surface, const Word& v,
                             const Word& w_prime, bool flip) {
  Word v0 = surface->dehn_reduce_cyclic(v);
  Word w0 = surface->dehn_reduce_cyclic(w_prime);
  if (v0.empty() || w0.empty()) throw EmptyAfterReduction();
  Diagram dia(surface, {v0, w0});
  dia.tauten();
  auto xs = dia.crossings_of_pair(0, 1);
  if (xs.size() != 2 || xs[0].sign + xs[1].sign != 0)
    throw BadCrossingData("need exactly two crossings of opposite sign, got " +
                          std::to_string(xs.size()));
  const DiagramCrossing& x = xs[0].sign > 0 ? xs[0] : xs[1];
  const DiagramCrossing& y = xs[0].sign > 0 ? xs[1] : xs[0];
  const Word& dv = dia.word(0);
  const Word& dw = dia.word(1);
  TwoCrossingConfig config{arc_between(dv, x.a_arc, x.a_rank, y.a_arc, y.a_rank),
                           arc_between(dv, y.a_arc, y.a_rank, x.a_arc, x.a_rank),
                           arc_between(dw, x.b_arc, x.b_rank, y.b_arc, y.b_rank),
                           arc_between(dw, y.b_arc, y.b_rank, x.b_arc, x.b_rank)};
  if (config.v_xy.size() + config.v_yx.size() != dv.size() ||
      config.w_xy.size() + config.w_yx.size() != dw.size())
    throw Internal("crossing arcs do not partition the curve words");
  return build_torus_twist(surface, config, flip);
}

TwoCrossingConfig drag_configuration(const std::shared_ptr<const SurfaceModel>& surface,
                                     const Word& w, const Word& v, const Word& lane, int wrap) {
  if (wrap != 1 && wrap != -1) throw BadInput("wrap must be +1 or -1");
  Word v0 = surface->dehn_reduce_cyclic(v);
  Word w0 = surface->dehn_reduce_cyclic(w);
  if (v0.empty() || w0.empty()) throw EmptyAfterReduction();
  if (self_intersection_number(surface, v0) != 0) throw NotSimple(word_name(v0));
  if (self_intersection_number(surface, w0) != 0) throw NotSimple(word_name(w0));
  if (surface->classes_equal_unoriented(v0, w0))
    throw BadInput("drag needs two distinct curve classes");
  if (intersection_number(surface, v0, w0) != 0)
    throw NotDisjoint(word_name(v0) + " / " + word_name(w0));
  Word g = free_reduce(lane);
  // The band leaves w from one of its two sides, read here as the direction
  // the base loop is traversed; for a drawable lane exactly one direction
  // embeds (a lane word no drawing realizes fails both ways). The other
  // free choice, which side of v the band lands on, only relabels which
  // crossing is the positive one and changes no ring class or direction,
  // so it is not enumerated.
  const Word tip = wrap > 0 ? v0 : inverse(v0);
  for (const Word& base : {w0, inverse(w0)}) {
    Word around = concat(inverse(g), concat(base, g));
    TwoCrossingConfig config = wrap > 0 ? TwoCrossingConfig{v0, Word{}, tip, around}
                                        : TwoCrossingConfig{Word{}, v0, tip, around};
    if (config_embeds(surface, config)) return config;
  }
  throw NoLane("no embedded band for lane " + word_name(g) + " with wrap " +
               std::to_string(wrap));
}

Word drag(const std::shared_ptr<const SurfaceModel>& surface, const Word& w, const Word& v,
          const Word& lane, int wrap) {
  TwoCrossingConfig c = drag_configuration(surface, w, v, lane, wrap);
  return surface->dehn_reduce_cyclic(concat(c.w_xy, c.w_yx));
}

std::vector<Word> drag_lanes(const std::shared_ptr<const SurfaceModel>& surface, size_t count) {
  std::vector<Letter> alphabet;
  for (Letter k = 1; k <= 2 * surface->genus(); ++k) {
    alphabet.push_back(k);
    alphabet.push_back(-k);
  }
  std::vector<Word> out;
  std::deque<Word> queue{Word{}};
  while (!queue.empty() && out.size() < count) {
    Word cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (Letter x : alphabet) {
      if (!cur.empty() && cur.back() == -x) continue;
      Word next = cur;
      next.push_back(x);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace curveplex
