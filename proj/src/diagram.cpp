#include "curveplex/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "curveplex/errors.hpp"

namespace curveplex {

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct Vec {
  Rat x, y;
};

Vec operator-(const Vec& a, const Vec& b) { return {a.x - b.x, a.y - b.y}; }

Rat cross2(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

/// Rational point on the unit circle; u in [0, n_sides) ascends
/// counterclockwise and integer u marks the polygon corners.
Vec circle_point(const Rat& u, int n_sides) {
  Rat t = u - Rat(n_sides) / 2;
  Rat t2 = t * t;
  return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

Vec tangent_at(const Vec& p) { return {-p.y, p.x}; }

/// True when walking counterclockwise from a one meets m before b.
bool cyc_between(const Rat& a, const Rat& m, const Rat& b) {
  if (a < b) return a < m && m < b;
  return m > a || m < b;
}

struct Passage {
  Letter letter;
  Rat s;  // parameter along the positively labeled side of the wall
};

}  // namespace

struct Diagram::Impl {
  std::shared_ptr<const SurfaceModel> sur;
  int nsides = 0;
  std::vector<std::vector<Passage>> cur;
  std::vector<Word> cached_words;

  struct Arc {
    Rat u0, u1;
    Vec p0, p1;
  };
  std::vector<std::vector<Arc>> arcs;

  struct Cross {
    int c1, t1, c2, t2;
    Rat al1, al2;  // position along each arc in (0,1)
    int sign;      // orientation of (tangent 1, tangent 2)
  };
  std::vector<Cross> crossings;

  // ---- construction ----------------------------------------------------

  Rat pos_on_side(Letter y, const Rat& s) const {
    int k = sur->side_of(y);
    return Rat(k) + (y > 0 ? s : 1 - s);
  }

  void rebuild_arcs(int c) {
    const auto& ps = cur[static_cast<size_t>(c)];
    auto& as = arcs[static_cast<size_t>(c)];
    const size_t n = ps.size();
    as.assign(n, Arc{});
    for (size_t t = 0; t < n; ++t) {
      const Passage& in = ps[t];
      const Passage& out = ps[(t + 1) % n];
      as[t].u0 = pos_on_side(-in.letter, in.s);
      as[t].u1 = pos_on_side(out.letter, out.s);
      as[t].p0 = circle_point(as[t].u0, nsides);
      as[t].p1 = circle_point(as[t].u1, nsides);
    }
  }

  Word word_of(int c) const {
    Word w;
    for (const Passage& p : cur[static_cast<size_t>(c)]) w.push_back(p.letter);
    return w;
  }

  // Initial transverse order of the passages through one wall: strands are
  // sorted by where their forward rays diverge, so parallel runs of the
  // final position come out already uncrossed in most cases. Any order is a
  // valid starting embedding; this one just keeps tauten cheap.
  struct StrandRef {
    int c = 0, t = 0;
  };

  Letter stream_at(const StrandRef& r, int k) const {
    const Word& w = cached_words[static_cast<size_t>(r.c)];
    const int n = static_cast<int>(w.size());
    if (w[static_cast<size_t>(r.t)] > 0)
      return w[static_cast<size_t>((r.t + 1 + k) % n)];
    return -w[static_cast<size_t>(((r.t - 1 - k) % n + n) % n)];
  }

  bool strand_below(const StrandRef& a, const StrandRef& b) const {
    const int limit = static_cast<int>(cached_words[static_cast<size_t>(a.c)].size() +
                                       cached_words[static_cast<size_t>(b.c)].size()) +
                      2;
    Letter prev = 0;  // 0 marks the initial wall crossing
    int m = std::abs(cached_words[static_cast<size_t>(a.c)][static_cast<size_t>(a.t)]);
    for (int k = 0; k < limit; ++k) {
      Letter xa = stream_at(a, k), xb = stream_at(b, k);
      if (xa == xb) {
        prev = xa;
        continue;
      }
      int e = sur->side_of(prev == 0 ? -m : -prev);
      int ra = (sur->side_of(xa) - e + nsides) % nsides;
      int rb = (sur->side_of(xb) - e + nsides) % nsides;
      return ra < rb;
    }
    return std::tie(a.c, a.t) < std::tie(b.c, b.t);
  }

  void assign_parameters(int seed) {
    std::map<int, std::vector<StrandRef>> by_wall;
    for (int c = 0; c < static_cast<int>(cur.size()); ++c)
      for (int t = 0; t < static_cast<int>(cur[static_cast<size_t>(c)].size()); ++t)
        by_wall[std::abs(cur[static_cast<size_t>(c)][static_cast<size_t>(t)].letter)].push_back(
            {c, t});
    for (auto& [wall, strands] : by_wall) {
      (void)wall;
      std::sort(strands.begin(), strands.end(),
                [&](const StrandRef& a, const StrandRef& b) { return strand_below(a, b); });
      const int n = static_cast<int>(strands.size());
      for (int i = 0; i < n; ++i)
        cur[static_cast<size_t>(strands[static_cast<size_t>(i)].c)]
           [static_cast<size_t>(strands[static_cast<size_t>(i)].t)]
               .s = Rat(i + 1, n + 2 + seed);
    }
  }

  // ---- crossings ---------------------------------------------------------

  bool arcs_cross(const Arc& A, const Arc& B) const {
    int inside = 0;
    if (cyc_between(A.u0, B.u0, A.u1)) ++inside;
    if (cyc_between(A.u0, B.u1, A.u1)) ++inside;
    return inside == 1;
  }

  Cross make_cross(int c1, int t1, int c2, int t2) const {
    const Arc& A = arcs[static_cast<size_t>(c1)][static_cast<size_t>(t1)];
    const Arc& B = arcs[static_cast<size_t>(c2)][static_cast<size_t>(t2)];
    Vec dA = A.p1 - A.p0, dB = B.p1 - B.p0;
    Rat den = cross2(dA, dB);
    if (den == 0) throw Internal("crossing chords cannot be parallel");
    Vec diff = B.p0 - A.p0;
    Cross x;
    x.c1 = c1;
    x.t1 = t1;
    x.c2 = c2;
    x.t2 = t2;
    x.al1 = cross2(diff, dB) / den;
    x.al2 = cross2(diff, dA) / den;
    x.sign = den > 0 ? 1 : -1;
    return x;
  }

  void add_crossings_between(int c, int d) {
    const auto& ac = arcs[static_cast<size_t>(c)];
    const auto& ad = arcs[static_cast<size_t>(d)];
    for (int t = 0; t < static_cast<int>(ac.size()); ++t) {
      int t2start = (c == d) ? t + 1 : 0;
      for (int t2 = t2start; t2 < static_cast<int>(ad.size()); ++t2) {
        if (arcs_cross(ac[static_cast<size_t>(t)], ad[static_cast<size_t>(t2)]))
          crossings.push_back(make_cross(c, t, d, t2));
      }
    }
  }

  void recompute_all_crossings() {
    crossings.clear();
    const int k = static_cast<int>(cur.size());
    for (int c = 0; c < k; ++c)
      for (int d = c; d < k; ++d) add_crossings_between(c, d);
  }

  void recompute_crossings_for(int c) {
    std::vector<Cross> kept;
    kept.reserve(crossings.size());
    for (Cross& x : crossings)
      if (x.c1 != c && x.c2 != c) kept.push_back(std::move(x));
    crossings = std::move(kept);
    for (int d = 0; d < static_cast<int>(cur.size()); ++d) {
      if (d == c) continue;
      int a = std::min(c, d), b = std::max(c, d);
      add_crossings_between(a, b);
    }
    // remove the duplicate pass over unordered pairs introduced above
    std::sort(crossings.begin(), crossings.end(), [](const Cross& x, const Cross& y) {
      return std::tie(x.c1, x.t1, x.c2, x.t2) < std::tie(y.c1, y.t1, y.c2, y.t2);
    });
    crossings.erase(std::unique(crossings.begin(), crossings.end(),
                                [](const Cross& x, const Cross& y) {
                                  return std::tie(x.c1, x.t1, x.c2, x.t2) ==
                                         std::tie(y.c1, y.t1, y.c2, y.t2);
                                }),
                    crossings.end());
    add_crossings_between(c, c);
  }

  bool has_degenerate_alphas() const {
    std::map<std::pair<int, int>, std::vector<Rat>> per_arc;
    for (const Cross& x : crossings) {
      per_arc[{x.c1, x.t1}].push_back(x.al1);
      per_arc[{x.c2, x.t2}].push_back(x.al2);
    }
    for (auto& [arc, als] : per_arc) {
      (void)arc;
      std::sort(als.begin(), als.end());
      for (size_t i = 0; i + 1 < als.size(); ++i)
        if (als[i] == als[i + 1]) return true;
    }
    return false;
  }

  // ---- faces -------------------------------------------------------------

  struct Event {
    int cross = 0;
    int slot = 0;  // 0: the (c1,t1) strand, 1: the (c2,t2) strand
    int arc = 0;
    Rat alpha;
  };
  struct Seg {
    int from_ev = 0, to_ev = 0;
    std::vector<int> passages;  // passage indices strictly inside the segment
  };
  struct IEdge {
    int curve = 0, seg = 0;
    bool fwd = true;
  };
  struct IFace {
    std::vector<IEdge> edges;
    std::vector<int> corners;  // crossing id at the start of each edge
    Word word;
  };
  struct FaceData {
    std::vector<std::vector<Event>> events;  // per curve, cyclic order
    std::vector<std::vector<Seg>> segs;
    std::vector<std::array<int, 2>> ev_of_cross;  // event index per slot
    std::vector<IFace> walks;
  };

  Word seg_letters(const FaceData& fd, int c, int s, bool fwd) const {
    const Seg& sg = fd.segs[static_cast<size_t>(c)][static_cast<size_t>(s)];
    Word out;
    for (int p : sg.passages) out.push_back(cur[static_cast<size_t>(c)][static_cast<size_t>(p)].letter);
    return fwd ? out : inverse(out);
  }

  FaceData trace_faces() const {
    FaceData fd;
    const int k = static_cast<int>(cur.size());
    fd.events.resize(static_cast<size_t>(k));
    fd.segs.resize(static_cast<size_t>(k));
    fd.ev_of_cross.assign(crossings.size(), {-1, -1});
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
      const Cross& x = crossings[static_cast<size_t>(i)];
      fd.events[static_cast<size_t>(x.c1)].push_back({i, 0, x.t1, x.al1});
      fd.events[static_cast<size_t>(x.c2)].push_back({i, 1, x.t2, x.al2});
    }
    for (int c = 0; c < k; ++c) {
      auto& ev = fd.events[static_cast<size_t>(c)];
      std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        return std::tie(a.arc, a.alpha) < std::tie(b.arc, b.alpha);
      });
      for (size_t i = 0; i + 1 < ev.size(); ++i)
        if (ev[i].arc == ev[i + 1].arc && ev[i].alpha == ev[i + 1].alpha)
          throw Internal("degenerate crossing positions survived seeding");
      const int ne = static_cast<int>(ev.size());
      for (int i = 0; i < ne; ++i)
        fd.ev_of_cross[static_cast<size_t>(ev[static_cast<size_t>(i)].cross)]
                      [static_cast<size_t>(ev[static_cast<size_t>(i)].slot)] = i;
      const int nn = static_cast<int>(cur[static_cast<size_t>(c)].size());
      for (int i = 0; i < ne; ++i) {
        Seg s;
        s.from_ev = i;
        s.to_ev = (i + 1) % ne;
        int t0 = ev[static_cast<size_t>(i)].arc;
        int t1 = ev[static_cast<size_t>(s.to_ev)].arc;
        int steps = ((t1 - t0) % nn + nn) % nn;
        if (s.to_ev == 0 && steps == 0) steps = nn;
        for (int j = 1; j <= steps; ++j) s.passages.push_back((t0 + j) % nn);
        fd.segs[static_cast<size_t>(c)].push_back(std::move(s));
      }
    }

    // Walk the complement regions, keeping each region on the left of the
    // traversal. Rays at a crossing are (slot, forward) pairs; their
    // counterclockwise order matches the crossing sign.
    struct DirSeg {
      int c, s;
      bool fwd;
    };
    auto ray_order = [&](int cross_id) {
      std::array<std::pair<int, bool>, 4> ccw;
      if (crossings[static_cast<size_t>(cross_id)].sign > 0)
        ccw = {{{0, true}, {1, true}, {0, false}, {1, false}}};
      else
        ccw = {{{0, true}, {1, false}, {0, false}, {1, true}}};
      return ccw;
    };
    auto next_dirseg = [&](const DirSeg& d) -> DirSeg {
      const Seg& sg = fd.segs[static_cast<size_t>(d.c)][static_cast<size_t>(d.s)];
      int ev_idx = d.fwd ? sg.to_ev : sg.from_ev;
      const Event& e = fd.events[static_cast<size_t>(d.c)][static_cast<size_t>(ev_idx)];
      int X = e.cross;
      // ray pointing back along our travel
      std::pair<int, bool> back = {e.slot, !d.fwd};
      auto ccw = ray_order(X);
      int pos = 0;
      for (int i = 0; i < 4; ++i)
        if (ccw[static_cast<size_t>(i)] == back) pos = i;
      auto out = ccw[static_cast<size_t>((pos + 3) % 4)];  // clockwise neighbor
      const Cross& x = crossings[static_cast<size_t>(X)];
      int oc = out.first == 0 ? x.c1 : x.c2;
      int oe = fd.ev_of_cross[static_cast<size_t>(X)][static_cast<size_t>(out.first)];
      if (out.second) return {oc, oe, true};  // segment starting at that event
      int ne = static_cast<int>(fd.segs[static_cast<size_t>(oc)].size());
      return {oc, (oe - 1 + ne) % ne, false};  // segment ending at that event
    };

    std::map<std::tuple<int, int, bool>, bool> visited;
    for (int c = 0; c < k; ++c)
      for (int s = 0; s < static_cast<int>(fd.segs[static_cast<size_t>(c)].size()); ++s)
        for (bool f : {false, true}) visited[{c, s, f}] = false;
    for (auto& [key, seen] : visited) {
      if (seen) continue;
      IFace face;
      DirSeg d{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
      for (;;) {
        auto k3 = std::make_tuple(d.c, d.s, d.fwd);
        if (visited[k3]) break;
        visited[k3] = true;
        const Seg& sg = fd.segs[static_cast<size_t>(d.c)][static_cast<size_t>(d.s)];
        int start_ev = d.fwd ? sg.from_ev : sg.to_ev;
        face.corners.push_back(
            fd.events[static_cast<size_t>(d.c)][static_cast<size_t>(start_ev)].cross);
        face.edges.push_back({d.c, d.s, d.fwd});
        Word letters = seg_letters(fd, d.c, d.s, d.fwd);
        face.word.insert(face.word.end(), letters.begin(), letters.end());
        d = next_dirseg(d);
      }
      face.word = free_reduce(face.word);
      fd.walks.push_back(std::move(face));
    }
    return fd;
  }

  // ---- splicing ----------------------------------------------------------

  struct Hug {
    Letter letter;
    Rat s;
  };

  Rat param_next_to(int wall, const Rat& s, bool up,
                    const std::vector<Hug>& pending) const {
    Rat bound = up ? Rat(1) : Rat(0);
    auto consider = [&](Letter l, const Rat& v) {
      if (std::abs(l) != wall || v == s) return;
      if (up && v > s && v < bound) bound = v;
      if (!up && v < s && v > bound) bound = v;
    };
    for (const auto& c : cur)
      for (const Passage& p : c) consider(p.letter, p.s);
    for (const Hug& h : pending) consider(h.letter, h.s);
    return s + (bound - s) * Rat(13, 29);
  }

  // Replaces the span deleted from curve cdel with a path hugging the other
  // edge of the face, then frees the word of wall-and-back blisters.
  // Returns the index of the modified curve.
  int splice(const FaceData& fd, const IFace& face) {
    int del_i = 0;
    if (face.edges.size() == 2) {
      Word l0 = seg_letters(fd, face.edges[0].curve, face.edges[0].seg, true);
      Word l1 = seg_letters(fd, face.edges[1].curve, face.edges[1].seg, true);
      del_i = l0.size() >= l1.size() ? 0 : 1;
    }
    const IEdge& del_e = face.edges[static_cast<size_t>(del_i)];
    const Seg& del_seg = fd.segs[static_cast<size_t>(del_e.curve)][static_cast<size_t>(del_e.seg)];
    const int cdel = del_e.curve;
    const int ndel = static_cast<int>(cur[static_cast<size_t>(cdel)].size());

    std::vector<Hug> hugs;
    if (face.edges.size() == 2) {
      const IEdge& oe = face.edges[static_cast<size_t>(1 - del_i)];
      const Seg& os = fd.segs[static_cast<size_t>(oe.curve)][static_cast<size_t>(oe.seg)];
      // The walk word is null, so the deleted span is homotopic rel its ends
      // to the other edge read against the deleted edge's walk direction.
      // along_hosts: whether the hug runs over the host segment curve-forward.
      bool along_hosts = del_e.fwd ? !oe.fwd : oe.fwd;
      std::vector<int> hosts = os.passages;
      if (!along_hosts) std::reverse(hosts.begin(), hosts.end());
      for (int j : hosts) {
        const auto& host_curve = cur[static_cast<size_t>(oe.curve)];
        Letter hl = host_curve[static_cast<size_t>(j)].letter;
        const int nn = static_cast<int>(host_curve.size());
        const Arc& exit_arc =
            arcs[static_cast<size_t>(oe.curve)][static_cast<size_t>((j - 1 + nn) % nn)];
        // The walk keeps the region on its left, and the rerouted strand
        // belongs on the host's other side: it approached the first corner
        // from there and recrossed at the second, so the parallel copy that
        // kills both corners runs along the right of the walk.
        Vec d = exit_arc.p1 - exit_arc.p0;
        if (!oe.fwd) d = Vec{-d.x, -d.y};
        Vec tg = tangent_at(exit_arc.p1);
        bool up = (cross2(d, tg) > 0) != (hl > 0);
        Rat s = param_next_to(std::abs(hl), host_curve[static_cast<size_t>(j)].s, up, hugs);
        hugs.push_back({along_hosts ? hl : -hl, s});
      }
    }

    // rebuild the cyclic passage list with the span replaced
    int rot_start;
    if (del_seg.passages.empty()) {
      rot_start = (fd.events[static_cast<size_t>(cdel)][static_cast<size_t>(del_seg.from_ev)].arc +
                   1) %
                  ndel;
    } else {
      rot_start = (del_seg.passages.back() + 1) % ndel;
    }
    std::vector<Passage> next;
    std::vector<bool> dead(static_cast<size_t>(ndel), false);
    for (int p : del_seg.passages) dead[static_cast<size_t>(p)] = true;
    for (int i = 0; i < ndel; ++i) {
      int idx = (rot_start + i) % ndel;
      if (!dead[static_cast<size_t>(idx)]) next.push_back(cur[static_cast<size_t>(cdel)][static_cast<size_t>(idx)]);
    }
    for (const Hug& h : hugs) next.push_back({h.letter, h.s});

    // blister removal: a wall crossed and immediately recrossed can be
    // pulled back through the wall without increasing any crossing count
    for (;;) {
      bool changed = false;
      for (size_t i = 0; i < next.size() && next.size() >= 2; ++i) {
        size_t j = (i + 1) % next.size();
        if (next[i].letter == -next[j].letter) {
          size_t hi = std::max(i, j), lo = std::min(i, j);
          next.erase(next.begin() + static_cast<long>(hi));
          next.erase(next.begin() + static_cast<long>(lo));
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    if (next.empty()) throw Internal("splice reduced an essential curve to nothing");
    cur[static_cast<size_t>(cdel)] = std::move(next);
    cached_words[static_cast<size_t>(cdel)] = word_of(cdel);
    rebuild_arcs(cdel);
    recompute_crossings_for(cdel);
    return cdel;
  }

  // A region walk qualifies for splicing when it closes up a null loop
  // around a single crossing (monogon) or between two distinct crossings
  // (bigon). Two-edge walks whose corners coincide wrap a figure eight and
  // are not removable; minimality does not need them because a non-minimal
  // position always contains an embedded monogon or bigon.
  bool spliceable(const IFace& f) const {
    if (f.edges.empty() || f.edges.size() > 2) return false;
    if (f.edges.size() == 2) {
      if (f.corners[0] == f.corners[1]) return false;
      if (f.edges[0].curve == f.edges[1].curve && f.edges[0].seg == f.edges[1].seg) return false;
    }
    return sur->is_null(f.word);
  }

  // ---- queries -----------------------------------------------------------

  int count_between(int a, int b) const {
    int n = 0;
    for (const Cross& x : crossings) {
      if (a == b && x.c1 == a && x.c2 == a) ++n;
      if (a != b && ((x.c1 == a && x.c2 == b) || (x.c1 == b && x.c2 == a))) ++n;
    }
    return n;
  }
};

Diagram::Diagram(std::shared_ptr<const SurfaceModel> surface, std::vector<Word> curves)
    : impl_(std::make_unique<Impl>()) {
  impl_->sur = std::move(surface);
  impl_->nsides = impl_->sur->n_sides();
  for (Word& w : curves) {
    Word r = impl_->sur->dehn_reduce_cyclic(std::move(w));
    if (r.empty()) throw EmptyAfterReduction();
    impl_->cached_words.push_back(r);
    std::vector<Passage> ps;
    for (Letter x : r) ps.push_back({x, Rat(0)});
    impl_->cur.push_back(std::move(ps));
  }
  impl_->arcs.resize(impl_->cur.size());
  for (int seed = 0; seed < 16; ++seed) {
    impl_->assign_parameters(seed);
    for (int c = 0; c < static_cast<int>(impl_->cur.size()); ++c) impl_->rebuild_arcs(c);
    impl_->recompute_all_crossings();
    if (!impl_->has_degenerate_alphas()) return;
  }
  throw Internal("could not find a generic starting position");
}

Diagram::~Diagram() = default;
Diagram::Diagram(Diagram&&) noexcept = default;
Diagram& Diagram::operator=(Diagram&&) noexcept = default;

int Diagram::curve_count() const { return static_cast<int>(impl_->cur.size()); }

const Word& Diagram::word(int c) const { return impl_->cached_words[static_cast<size_t>(c)]; }

void Diagram::tauten() {
  long long guard = static_cast<long long>(impl_->crossings.size()) * 4 + 16;
  while (guard-- > 0) {
    if (impl_->crossings.empty()) return;
    auto fd = impl_->trace_faces();
    std::vector<const Impl::IFace*> candidates;
    for (const auto& f : fd.walks)
      if (impl_->spliceable(f)) candidates.push_back(&f);
    if (candidates.empty()) return;
    std::sort(candidates.begin(), candidates.end(),
              [&](const Impl::IFace* a, const Impl::IFace* b) {
                auto cost = [&](const Impl::IFace* f) {
                  size_t c = 0;
                  if (f->edges.size() == 2)
                    c = std::min(
                        fd.segs[static_cast<size_t>(f->edges[0].curve)]
                               [static_cast<size_t>(f->edges[0].seg)].passages.size(),
                        fd.segs[static_cast<size_t>(f->edges[1].curve)]
                               [static_cast<size_t>(f->edges[1].seg)].passages.size());
                  return c;
                };
                return cost(a) < cost(b);
              });
    bool progressed = false;
    for (const Impl::IFace* f : candidates) {
      int before = total_crossings();
      int expected = f->edges.size() == 2 ? 2 : 1;
      auto saved_crossings = impl_->crossings;
      int cdel = f->edges[0].curve;
      if (f->edges.size() == 2) {
        // splice picks the longer edge; mirror that choice for the snapshot
        Word l0 = impl_->seg_letters(fd, f->edges[0].curve, f->edges[0].seg, true);
        Word l1 = impl_->seg_letters(fd, f->edges[1].curve, f->edges[1].seg, true);
        cdel = l0.size() >= l1.size() ? f->edges[0].curve : f->edges[1].curve;
      }
      auto saved_curve = impl_->cur[static_cast<size_t>(cdel)];
      auto saved_word = impl_->cached_words[static_cast<size_t>(cdel)];
      int modified = impl_->splice(fd, *f);
      if (modified != cdel) throw Internal("splice touched an unexpected curve");
      if (total_crossings() <= before - expected) {
        progressed = true;
        break;
      }
      // an immersed region can refuse to clear; roll back and try the next
      impl_->cur[static_cast<size_t>(cdel)] = std::move(saved_curve);
      impl_->cached_words[static_cast<size_t>(cdel)] = std::move(saved_word);
      impl_->rebuild_arcs(cdel);
      impl_->crossings = std::move(saved_crossings);
    }
    if (!progressed)
      throw Internal("no spliceable region cleared its crossings");
  }
  throw Internal("tauten exceeded its move budget");
}

bool Diagram::is_taut() const {
  if (impl_->crossings.empty()) return true;
  auto fd = impl_->trace_faces();
  for (const auto& f : fd.walks)
    if (impl_->spliceable(f)) return false;
  return true;
}

int Diagram::total_crossings() const { return static_cast<int>(impl_->crossings.size()); }

int Diagram::self_crossings(int c) const { return impl_->count_between(c, c); }

int Diagram::crossings_between(int a, int b) const {
  if (a == b) throw BadInput("crossings_between expects two distinct curves");
  return impl_->count_between(a, b);
}

namespace {

// Rank each (arc, position) endpoint among the endpoints sharing its arc.
std::vector<int> gap_ranks(const std::vector<std::pair<int, Rat>>& pts) {
  std::vector<size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
    return std::tie(pts[i].first, pts[i].second) < std::tie(pts[j].first, pts[j].second);
  });
  std::vector<int> rank(pts.size(), 0);
  int r = 0, prev_arc = -1;
  for (size_t i : idx) {
    r = (pts[i].first == prev_arc) ? r + 1 : 0;
    prev_arc = pts[i].first;
    rank[i] = r;
  }
  return rank;
}

}  // namespace

std::vector<DiagramCrossing> Diagram::crossings_of_pair(int a, int b) const {
  if (a == b) throw BadInput("crossings_of_pair expects two distinct curves");
  struct Raw {
    int a_arc;
    Rat alpha;
    int b_arc;
    Rat beta;
    int sign;
  };
  std::vector<Raw> raw;
  for (const auto& x : impl_->crossings) {
    if (x.c1 == a && x.c2 == b)
      raw.push_back({x.t1, x.al1, x.t2, x.al2, x.sign});
    else if (x.c1 == b && x.c2 == a)
      raw.push_back({x.t2, x.al2, x.t1, x.al1, -x.sign});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& u, const Raw& v) {
    return std::tie(u.a_arc, u.alpha) < std::tie(v.a_arc, v.alpha);
  });
  std::vector<std::pair<int, Rat>> a_pts, b_pts;
  for (const Raw& r : raw) {
    a_pts.emplace_back(r.a_arc, r.alpha);
    b_pts.emplace_back(r.b_arc, r.beta);
  }
  auto a_rank = gap_ranks(a_pts);
  auto b_rank = gap_ranks(b_pts);
  std::vector<DiagramCrossing> out;
  for (size_t i = 0; i < raw.size(); ++i)
    out.push_back({raw[i].a_arc, a_rank[i], raw[i].b_arc, b_rank[i], raw[i].sign});
  return out;
}

std::vector<DiagramCrossing> Diagram::self_crossing_list(int c) const {
  struct Raw {
    int a_arc;
    Rat alpha;
    int b_arc;
    Rat beta;
    int sign;
  };
  std::vector<Raw> raw;
  for (const auto& x : impl_->crossings) {
    if (x.c1 == c && x.c2 == c) raw.push_back({x.t1, x.al1, x.t2, x.al2, x.sign});
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& u, const Raw& v) {
    return std::tie(u.a_arc, u.alpha) < std::tie(v.a_arc, v.alpha);
  });
  // Both endpoints of every crossing live on the same curve, so each rank
  // counts all endpoints sharing the gap, not only the listed ones.
  std::vector<std::pair<int, Rat>> pts;
  for (const Raw& r : raw) {
    pts.emplace_back(r.a_arc, r.alpha);
    pts.emplace_back(r.b_arc, r.beta);
  }
  auto rank = gap_ranks(pts);
  std::vector<DiagramCrossing> out;
  for (size_t i = 0; i < raw.size(); ++i)
    out.push_back({raw[i].a_arc, rank[2 * i], raw[i].b_arc, rank[2 * i + 1], raw[i].sign});
  return out;
}

std::vector<FaceWalk> Diagram::faces() const {
  auto fd = impl_->trace_faces();
  std::vector<FaceWalk> out;
  for (const auto& f : fd.walks) {
    FaceWalk w;
    for (const auto& e : f.edges)
      w.edges.push_back({e.curve, e.fwd, impl_->seg_letters(fd, e.curve, e.seg, e.fwd)});
    w.word = f.word;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> Diagram::neighborhood_boundary_words() const {
  std::vector<Word> out;
  std::vector<bool> has_cross(impl_->cur.size(), false);
  for (const auto& x : impl_->crossings) {
    has_cross[static_cast<size_t>(x.c1)] = true;
    has_cross[static_cast<size_t>(x.c2)] = true;
  }
  for (size_t c = 0; c < impl_->cur.size(); ++c) {
    if (!has_cross[c]) {
      out.push_back(impl_->cached_words[c]);
      out.push_back(inverse(impl_->cached_words[c]));
    }
  }
  auto fd = impl_->trace_faces();
  for (const auto& f : fd.walks) out.push_back(f.word);
  return out;
}

// ---- cutting along a disjoint simple system --------------------------------

std::vector<CutPiece> cut_profile(std::shared_ptr<const SurfaceModel> surface,
                                  std::vector<Word> curves) {
  Diagram dia(surface, std::move(curves));
  dia.tauten();
  auto& impl = *dia.impl_;
  for (int c = 0; c < dia.curve_count(); ++c)
    if (dia.self_crossings(c) > 0)
      throw NotSimple(word_name(dia.word(c)));
  for (int a = 0; a < dia.curve_count(); ++a)
    for (int b = a + 1; b < dia.curve_count(); ++b)
      if (dia.crossings_between(a, b) > 0)
        throw NotDisjoint(word_name(dia.word(a)) + " / " + word_name(dia.word(b)));

  // The diagram now has no crossings: chords cut the polygon into nested
  // cells. Walk the circle once to assign cells by parenthesis matching.
  struct ChordRef {
    int c, t;
  };
  std::vector<ChordRef> chords;
  std::vector<std::array<Rat, 2>> ends;  // u of start, u of end
  for (int c = 0; c < dia.curve_count(); ++c)
    for (int t = 0; t < static_cast<int>(impl.arcs[static_cast<size_t>(c)].size()); ++t) {
      chords.push_back({c, t});
      const auto& a = impl.arcs[static_cast<size_t>(c)][static_cast<size_t>(t)];
      ends.push_back({a.u0, a.u1});
    }
  struct Ev {
    Rat u;
    int chord;  // -1 for polygon corner
  };
  std::vector<Ev> evs;
  for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
    evs.push_back({ends[static_cast<size_t>(i)][0], i});
    evs.push_back({ends[static_cast<size_t>(i)][1], i});
  }
  for (int k = 0; k < impl.nsides; ++k) evs.push_back({Rat(k), -1});
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.u < b.u; });

  int n_cells = 1;
  std::vector<int> stack = {0};
  std::vector<int> inner(chords.size(), -1), outer(chords.size(), -1);
  struct Interval {
    Rat lo, hi;  // local position within the side
    int cell;
  };
  std::vector<std::vector<Interval>> side_ints(static_cast<size_t>(impl.nsides));
  Rat prev_u = 0;
  auto emit_interval = [&](const Rat& lo, const Rat& hi, int cell) {
    if (lo == hi) return;
    int side = static_cast<int>(boost::multiprecision::numerator(lo) /
                                boost::multiprecision::denominator(lo));
    side_ints[static_cast<size_t>(side)].push_back({lo - side, hi - side, cell});
  };
  for (const Ev& e : evs) {
    emit_interval(prev_u, e.u, stack.back());
    prev_u = e.u;
    if (e.chord < 0) continue;
    if (inner[static_cast<size_t>(e.chord)] < 0) {
      outer[static_cast<size_t>(e.chord)] = stack.back();
      inner[static_cast<size_t>(e.chord)] = n_cells;
      stack.push_back(n_cells++);
    } else {
      if (stack.back() != inner[static_cast<size_t>(e.chord)])
        throw Internal("chord nesting broke during the cut");
      stack.pop_back();
    }
  }
  emit_interval(prev_u, Rat(impl.nsides), stack.back());
  if (stack.size() != 1) throw Internal("unbalanced chords during the cut");

  // union-find over cells, glued across matching wall sub-intervals
  std::vector<int> uf(static_cast<size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) uf[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int v) {
    while (uf[static_cast<size_t>(v)] != v) {
      uf[static_cast<size_t>(v)] = uf[static_cast<size_t>(uf[static_cast<size_t>(v)])];
      v = uf[static_cast<size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) { uf[static_cast<size_t>(find(a))] = find(b); };

  std::vector<bool> side_done(static_cast<size_t>(impl.nsides), false);
  for (int k = 0; k < impl.nsides; ++k) {
    if (side_done[static_cast<size_t>(k)]) continue;
    Letter y = impl.sur->side_label(k);
    int k2 = impl.sur->side_of(-y);
    side_done[static_cast<size_t>(k)] = side_done[static_cast<size_t>(k2)] = true;
    auto& a = side_ints[static_cast<size_t>(k)];
    auto& b = side_ints[static_cast<size_t>(k2)];
    if (a.size() != b.size()) throw Internal("side subdivision mismatch");
    const size_t m = a.size();
    for (size_t i = 0; i < m; ++i) {
      const Interval& ia = a[i];
      const Interval& ib = b[m - 1 - i];
      if (ia.lo != 1 - ib.hi || ia.hi != 1 - ib.lo)
        throw Internal("glued sub-intervals do not mirror");
      unite(ia.cell, ib.cell);
    }
  }

  // left/right cell of every chord, checked for consistency at both ends
  auto flank_cell = [&](int side, const Rat& local, bool above) -> int {
    for (const Interval& iv : side_ints[static_cast<size_t>(side)]) {
      if (above && iv.lo == local) return iv.cell;
      if (!above && iv.hi == local) return iv.cell;
    }
    throw Internal("missing flanking interval");
  };
  auto side_and_local = [&](const Rat& u) {
    int side = static_cast<int>(boost::multiprecision::numerator(u) /
                                boost::multiprecision::denominator(u));
    return std::make_pair(side, u - side);
  };
  const int n_chords = static_cast<int>(chords.size());
  std::vector<int> left_cell(static_cast<size_t>(n_chords)), right_cell(static_cast<size_t>(n_chords));
  for (int i = 0; i < n_chords; ++i) {
    const auto& a = impl.arcs[static_cast<size_t>(chords[static_cast<size_t>(i)].c)]
                             [static_cast<size_t>(chords[static_cast<size_t>(i)].t)];
    Vec d = a.p1 - a.p0;
    auto eval_end = [&](const Rat& u, const Vec& p) {
      auto [side, local] = side_and_local(u);
      bool left_is_above = cross2(d, tangent_at(p)) > 0;
      return std::make_pair(flank_cell(side, local, left_is_above),
                            flank_cell(side, local, !left_is_above));
    };
    auto [l0, r0] = eval_end(a.u0, a.p0);
    auto [l1, r1] = eval_end(a.u1, a.p1);
    if (find(l0) != find(l1) || find(r0) != find(r1))
      throw Internal("chord side cells disagree between its ends");
    left_cell[static_cast<size_t>(i)] = find(l0);
    right_cell[static_cast<size_t>(i)] = find(r0);
  }

  // piece bookkeeping: Euler characteristic from the glued cell complex
  std::map<int, int> piece_id;
  auto pid = [&](int cell) {
    int r = find(cell);
    auto it = piece_id.find(r);
    if (it != piece_id.end()) return it->second;
    int id = static_cast<int>(piece_id.size());
    piece_id[r] = id;
    return id;
  };
  for (int c = 0; c < n_cells; ++c) pid(c);
  const int np = static_cast<int>(piece_id.size());
  std::vector<long long> V(static_cast<size_t>(np), 0), E(static_cast<size_t>(np), 0),
      F(static_cast<size_t>(np), 0);
  for (int c = 0; c < n_cells; ++c) ++F[static_cast<size_t>(pid(c))];
  {
    std::vector<bool> done(static_cast<size_t>(impl.nsides), false);
    for (int k = 0; k < impl.nsides; ++k) {
      if (done[static_cast<size_t>(k)]) continue;
      Letter y = impl.sur->side_label(k);
      int k2 = impl.sur->side_of(-y);
      done[static_cast<size_t>(k)] = done[static_cast<size_t>(k2)] = true;
      for (const Interval& iv : side_ints[static_cast<size_t>(k)])
        ++E[static_cast<size_t>(pid(iv.cell))];
    }
  }
  for (int i = 0; i < n_chords; ++i) {
    ++E[static_cast<size_t>(pid(left_cell[static_cast<size_t>(i)]))];
    ++E[static_cast<size_t>(pid(right_cell[static_cast<size_t>(i)]))];
    ++V[static_cast<size_t>(pid(left_cell[static_cast<size_t>(i)]))];
    ++V[static_cast<size_t>(pid(right_cell[static_cast<size_t>(i)]))];
  }
  // polygon corners all glue to the single surface point
  {
    int corner_cell = -1;
    for (int k = 0; k < impl.nsides; ++k) {
      const auto& iv = side_ints[static_cast<size_t>(k)];
      if (iv.empty()) throw Internal("side without intervals");
      int c0 = find(iv.front().cell);
      int c1 = find(iv.back().cell);
      if (corner_cell < 0) corner_cell = c0;
      if (find(corner_cell) != c0 || find(corner_cell) != c1)
        throw Internal("corners landed in different pieces");
    }
    ++V[static_cast<size_t>(pid(corner_cell))];
  }

  // boundary circles: one per curve side, assigned through its chords
  std::vector<std::vector<int>> piece_boundaries(static_cast<size_t>(np));
  for (int c = 0; c < dia.curve_count(); ++c) {
    int pl = -1, pr = -1;
    for (int i = 0; i < n_chords; ++i) {
      if (chords[static_cast<size_t>(i)].c != c) continue;
      int l = pid(left_cell[static_cast<size_t>(i)]);
      int r = pid(right_cell[static_cast<size_t>(i)]);
      if (pl < 0) pl = l;
      if (pr < 0) pr = r;
      if (pl != l || pr != r) throw Internal("curve side wandered between pieces");
    }
    piece_boundaries[static_cast<size_t>(pl)].push_back(c);
    piece_boundaries[static_cast<size_t>(pr)].push_back(c);
  }

  std::vector<CutPiece> out(static_cast<size_t>(np));
  long long chi_total = 0;
  for (int p = 0; p < np; ++p) {
    long long chi = V[static_cast<size_t>(p)] - E[static_cast<size_t>(p)] + F[static_cast<size_t>(p)];
    chi_total += chi;
    auto& piece = out[static_cast<size_t>(p)];
    piece.boundaries = static_cast<int>(piece_boundaries[static_cast<size_t>(p)].size());
    piece.boundary_curves = piece_boundaries[static_cast<size_t>(p)];
    std::sort(piece.boundary_curves.begin(), piece.boundary_curves.end());
    long long genus2 = 2 - chi - piece.boundaries;
    if (genus2 < 0 || genus2 % 2 != 0) throw Internal("piece has impossible genus");
    piece.genus = static_cast<int>(genus2 / 2);
  }
  if (chi_total != 2 - 2 * impl.sur->genus())
    throw Internal("piece characteristics do not add up");
  std::sort(out.begin(), out.end(), [](const CutPiece& a, const CutPiece& b) {
    return std::tie(a.genus, a.boundaries, a.boundary_curves) <
           std::tie(b.genus, b.boundaries, b.boundary_curves);
  });
  return out;
}

}  // namespace curveplex
