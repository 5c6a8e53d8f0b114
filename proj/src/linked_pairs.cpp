#include "curveplex/linked_pairs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveplex/errors.hpp"

namespace curveplex {
namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

// True when w carries an over-half cycle subword touching the block that
// starts at p. The plain reducer only rules such subwords out for the
// spelling it returns; a half exchange can expose one, which means the
// element has a strictly shorter spelling and the caller must start over.
bool over_half_near(const SurfaceModel& sur, const Word& w, size_t p) {
  const size_t half = static_cast<size_t>(sur.half());
  const size_t lo = p > 2 * half ? p - 2 * half : 0;
  const size_t hi = std::min(w.size(), p + half);
  for (size_t i = lo; i < hi; ++i) {
    for (const Word& rel : sur.relator_variants()) {
      size_t m = 0;
      while (i + m < w.size() && m < rel.size() && w[i + m] == rel[m]) ++m;
      if (m > half) return true;
    }
  }
  return false;
}

// Least spelling of the element, usable as an equality key. Equal-length
// spellings are connected by swapping a subword covering exactly half of a
// defining cycle for the inverse of the other half; when a swap uncovers a
// cancellation or an over-half block, the element was not at its shortest
// and the closure restarts from the shorter word.
std::string element_key(const SurfaceModel& sur, const Word& w) {
  const size_t half = static_cast<size_t>(sur.half());
  Word red = sur.dehn_reduce(w);
  if (red.empty()) return std::string();
  for (int round = 0;; ++round) {
    if (round == 300) throw Internal("element spelling never settled");
    std::set<std::string> seen{word_key(red)};
    std::vector<Word> out{red};
    std::optional<Word> shorter;
    for (size_t at = 0; at < out.size() && !shorter; ++at) {
      if (out.size() > 4000) throw Internal("geodesic spelling closure overflow");
      const Word cur = out[at];
      if (cur.size() < half) continue;
      for (const Word& rel : sur.relator_variants()) {
        for (size_t i = 0; i + half <= cur.size(); ++i) {
          bool match = true;
          for (size_t k = 0; k < half; ++k) {
            if (cur[i + k] != rel[k]) {
              match = false;
              break;
            }
          }
          if (!match) continue;
          Word next(cur.begin(), cur.begin() + static_cast<long>(i));
          for (size_t k = rel.size(); k > half; --k) next.push_back(-rel[k - 1]);
          next.insert(next.end(), cur.begin() + static_cast<long>(i + half), cur.end());
          if (!is_freely_reduced(next) || over_half_near(sur, next, i)) {
            shorter = sur.dehn_reduce(free_reduce(std::move(next)));
            break;
          }
          if (seen.insert(word_key(next)).second) out.push_back(std::move(next));
        }
        if (shorter) break;
      }
    }
    if (!shorter) {
      const Word* best = &out.front();
      for (const Word& cand : out) {
        if (cand < *best) best = &cand;
      }
      return word_key(*best);
    }
    if (shorter->size() >= red.size()) throw Internal("shortening did not shorten");
    red = std::move(*shorter);
  }
}

// One key per line: an element and its inverse drag the same line.
std::string line_key(const SurfaceModel& sur, const Word& w) {
  std::string a = element_key(sur, w);
  std::string b = element_key(sur, inverse(w));
  return a < b ? a : b;
}

// ---- rays ----------------------------------------------------------------

// Reduced spelling of c r r r ... as a head plus a cyclic tail. The freely
// cancelled seam is absorbed into the head and the tail offset.
struct Ray {
  Word head;
  Word period;
  int offset = 0;
};

Ray make_ray(const Word& c, const Word& r) {
  if (r.empty()) throw Internal("ray needs a nonempty period");
  const int n = static_cast<int>(r.size());
  int t = 0;
  while (t < static_cast<int>(c.size()) &&
         c[c.size() - 1 - static_cast<size_t>(t)] == -r[static_cast<size_t>(t % n)]) {
    ++t;
  }
  Ray ray;
  ray.head.assign(c.begin(), c.end() - t);
  ray.period = r;
  ray.offset = t % n;
  return ray;
}

Letter ray_letter(const Ray& ray, size_t k) {
  if (k < ray.head.size()) return ray.head[k];
  const int n = static_cast<int>(ray.period.size());
  return ray.period[static_cast<size_t>(
      mod(ray.offset + static_cast<int>(k - ray.head.size()), n))];
}

Word materialize(const Ray& ray, size_t len) {
  Word out;
  out.reserve(len);
  for (size_t k = 0; k < len; ++k) out.push_back(ray_letter(ray, k));
  return out;
}

// Exit address of a spelling: the wall index left through first, then each
// later exit counted around the tile from the wall entered by. Addresses
// and spellings determine each other letter by letter.
int address_at(const SurfaceModel& sur, const Word& w, size_t k) {
  if (k == 0) return sur.side_of(w[0]);
  return mod(sur.side_of(w[k]) - sur.side_of(-w[k - 1]), sur.n_sides());
}

// Exchange chains. Two distinct cycle spellings never share two consecutive
// letters, so an exchange whose block is one letter short of a match can be
// completed only by another exchange starting exactly half-1 letters to its
// right (its swapped-in first letter is the missing last letter). Chains of
// enabling exchanges therefore live on the arithmetic progression
// p, p+half-1, p+2(half-1), ... and nothing off that progression can change
// what letters are reachable at p. For the same reason at most one cycle
// spelling matches any given half-1 letters, so each chain link is a binary
// choice and the fan-out stays linear in the chain depth.
class ChainExplorer {
 public:
  ChainExplorer(const SurfaceModel& sur, int levels)
      : sur_(sur), half_(static_cast<size_t>(sur.half())), levels_(levels) {
    for (const Word& rel : sur.relator_variants()) {
      Word prefix(rel.begin(), rel.begin() + static_cast<long>(half_ - 1));
      if (!by_prefix_.emplace(std::move(prefix), &rel).second)
        throw Internal("cycle spellings share too long a prefix");
    }
  }

  // Words reachable from w by an exchange chain anchored at p, plus w
  // itself. A chain step that uncovers a shorter spelling aborts the walk
  // and hands the shorter word back instead.
  std::vector<Word> reachable(const Word& w, size_t p,
                              std::optional<Word>* shorter) const {
    std::vector<Word> out{w};
    expand(w, p, levels_, out, shorter);
    if (out.size() > 64) throw Internal("exchange chain fan-out overflow");
    return out;
  }

 private:
  void expand(const Word& w, size_t p, int levels, std::vector<Word>& out,
              std::optional<Word>* shorter) const {
    if (levels == 0 || p + half_ > w.size() || *shorter) return;
    Word prefix(w.begin() + static_cast<long>(p),
                w.begin() + static_cast<long>(p + half_ - 1));
    auto hit = by_prefix_.find(prefix);
    if (hit == by_prefix_.end()) return;
    const Word& rel = *hit->second;
    const Letter need = rel[half_ - 1];
    std::vector<Word> deeper{w};
    expand(w, p + half_ - 1, levels - 1, deeper, shorter);
    if (*shorter) return;
    for (const Word& base : deeper) {
      if (base[p + half_ - 1] != need) continue;
      Word next = base;
      for (size_t j = 0; j < half_; ++j)
        next[p + j] = -rel[rel.size() - 1 - j];
      if (!is_freely_reduced(next) || over_half_near(sur_, next, p)) {
        *shorter = sur_.dehn_reduce(free_reduce(std::move(next)));
        return;
      }
      out.push_back(std::move(next));
    }
  }

  const SurfaceModel& sur_;
  size_t half_;
  int levels_;
  std::map<Word, const Word*> by_prefix_;
};

// Least exit address over the spellings of the ray's first `depth` tiles,
// worked coordinate by coordinate. An exchange starting at the cursor is
// the only move that can lower the current coordinate without touching
// earlier ones, so each step resolves the exchange chain anchored there and
// keeps whichever spellings realize the least letter. Spellings that differ
// only in uncommitted later blocks are re-derived when the cursor reaches
// them, which keeps periodic windows from blowing up the candidate set.
// Whenever a swap uncovers a shorter spelling the whole walk restarts on
// the shortened window.
std::vector<int> min_address(const SurfaceModel& sur, const Ray& ray, size_t depth) {
  const size_t half = static_cast<size_t>(sur.half());
  const int levels = 8;
  const size_t span = half + static_cast<size_t>(levels) * (half - 1);
  const ChainExplorer chains(sur, levels);

  size_t consumed = depth + span + half + ray.head.size();
  Word window = sur.dehn_reduce(materialize(ray, consumed));
  for (int round = 0;; ++round) {
    if (round == 300) throw Internal("ray window never settled");
    for (int grow = 0; window.size() < depth + span; ++grow) {
      if (grow == 16) throw Internal("ray window kept collapsing");
      Word more;
      for (size_t k = 0; k < depth + span - window.size() + 2 * half; ++k)
        more.push_back(ray_letter(ray, consumed + k));
      consumed += more.size();
      window = sur.dehn_reduce(free_reduce(concat(window, more)));
    }

    std::optional<Word> shorter;
    std::vector<Word> cands{window};
    std::vector<int> addr;
    addr.reserve(depth);
    for (size_t k = 0; k < depth && !shorter; ++k) {
      std::vector<Word> opts;
      for (const Word& w : cands) {
        for (Word& o : chains.reachable(w, k, &shorter)) opts.push_back(std::move(o));
        if (shorter) break;
      }
      if (shorter) break;
      int best = address_at(sur, opts.front(), k);
      for (const Word& o : opts) best = std::min(best, address_at(sur, o, k));
      std::vector<Word> kept;
      std::set<std::string> seen;
      for (Word& o : opts) {
        if (address_at(sur, o, k) != best) continue;
        if (seen.insert(word_key(o)).second) kept.push_back(std::move(o));
      }
      cands.swap(kept);
      addr.push_back(best);
      if (cands.size() > 64) throw Internal("ray spelling set overflow");
    }
    if (!shorter) return addr;
    if (shorter->size() >= window.size()) throw Internal("shortening did not shorten");
    window = std::move(*shorter);
  }
}

// ---- crossing count ------------------------------------------------------

struct Dsu {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

struct Candidate {
  Word conj;
  Word rot;
  Word elem;
  std::string key;
};

// Crossing conjugate lines of v0, counted up to the deck action of u0.
// Conjugators run over prefixes of u0 padded by all reduced words of length
// at most two; rotations of v0 extend that by prefixes of v0. Completeness
// of this window is not proved here; it is pinned by cross-checks against
// the independent counting routes.
int crossing_orbits(const SurfaceModel& sur, const Word& u0, const Word& v0,
                    bool self_mode) {
  const std::string base_key = line_key(sur, u0);

  std::vector<Word> conjugators;
  {
    std::set<std::string> seen;
    std::vector<Word> pads{Word{}};
    for (Letter x = -2 * sur.genus(); x <= 2 * sur.genus(); ++x) {
      if (x == 0) continue;
      pads.push_back(Word{x});
      for (Letter y = -2 * sur.genus(); y <= 2 * sur.genus(); ++y) {
        if (y == 0 || y == -x) continue;
        pads.push_back(Word{x, y});
      }
    }
    for (size_t len = 0; len < u0.size(); ++len) {
      Word prefix(u0.begin(), u0.begin() + static_cast<long>(len));
      for (const Word& pad : pads) {
        Word c = free_reduce(concat(prefix, pad));
        if (seen.insert(word_key(c)).second) conjugators.push_back(c);
      }
    }
  }

  std::vector<Candidate> cands;
  std::set<std::string> seen_lines;
  size_t longest = 0;
  for (const Word& c : conjugators) {
    for (size_t s = 0; s < v0.size(); ++s) {
      Candidate cand;
      cand.conj = c;
      cand.rot = rotated(v0, static_cast<int>(s));
      cand.elem = sur.dehn_reduce(
          free_reduce(concat(concat(c, cand.rot), inverse(c))));
      if (cand.elem.empty()) throw Internal("conjugate collapsed to the identity");
      cand.key = line_key(sur, cand.elem);
      if (cand.key == base_key) {
        if (!self_mode) throw Internal("conjugate line collided with the base line");
        continue;
      }
      if (!seen_lines.insert(cand.key).second) continue;
      longest = std::max(longest, cand.elem.size());
      cands.push_back(std::move(cand));
    }
  }

  size_t head_max = 0;
  for (const Candidate& cand : cands) head_max = std::max(head_max, cand.conj.size());
  const size_t depth =
      head_max + 2 * (u0.size() + v0.size()) + 3 * static_cast<size_t>(sur.n_sides()) + 8;

  const std::vector<int> up = min_address(sur, make_ray(Word{}, u0), depth);
  const std::vector<int> um = min_address(sur, make_ray(Word{}, inverse(u0)), depth);

  std::vector<Candidate> crossing;
  for (Candidate& cand : cands) {
    std::vector<std::pair<std::vector<int>, int>> ends;
    ends.emplace_back(up, 0);
    ends.emplace_back(um, 0);
    ends.emplace_back(min_address(sur, make_ray(cand.conj, cand.rot), depth), 1);
    ends.emplace_back(min_address(sur, make_ray(cand.conj, inverse(cand.rot)), depth), 1);
    std::sort(ends.begin(), ends.end());
    for (size_t i = 0; i + 1 < ends.size(); ++i) {
      if (ends[i].first == ends[i + 1].first)
        throw Internal("distinct line ends shared an address");
    }
    if (ends[0].second == ends[2].second) crossing.push_back(std::move(cand));
  }

  // Gather crossing lines into orbits under conjugation by u0. Walking both
  // ways and joining through every intermediate line key keeps two windows
  // of one orbit together even when neither is the shortest element.
  Dsu dsu;
  std::map<std::string, int> ids;
  auto id_of = [&](const std::string& key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int fresh = dsu.add();
    ids.emplace(key, fresh);
    return fresh;
  };
  const size_t window = longest + 2 * u0.size();
  const Word u0_inv = inverse(u0);
  for (const Candidate& cand : crossing) {
    int base = id_of(cand.key);
    for (int dir = 0; dir < 2; ++dir) {
      const Word& g = dir == 0 ? u0 : u0_inv;
      const Word& g_inv = dir == 0 ? u0_inv : u0;
      Word x = cand.elem;
      for (int step = 0;; ++step) {
        if (step == 64) throw Internal("orbit walk failed to leave the window");
        x = sur.dehn_reduce(free_reduce(concat(concat(g, x), g_inv)));
        if (x.size() > window) break;
        dsu.unite(id_of(line_key(sur, x)), base);
      }
    }
  }

  std::set<int> roots;
  for (const Candidate& cand : crossing) roots.insert(dsu.find(id_of(cand.key)));
  int total = static_cast<int>(roots.size());
  if (!self_mode) return total;
  if (total % 2 != 0) throw Internal("self crossing lines did not pair up");
  return total / 2;
}

}  // namespace

int linked_pairs_intersection(const std::shared_ptr<const SurfaceModel>& surface,
                              const Word& u, const Word& v) {
  Word u0 = surface->dehn_reduce_cyclic(u);
  Word v0 = surface->dehn_reduce_cyclic(v);
  if (u0.empty() || v0.empty()) throw EmptyAfterReduction();
  return crossing_orbits(*surface, u0, v0, false);
}

int linked_pairs_self(const std::shared_ptr<const SurfaceModel>& surface,
                      const Word& w) {
  Word w0 = surface->dehn_reduce_cyclic(w);
  if (w0.empty()) throw EmptyAfterReduction();
  return crossing_orbits(*surface, w0, w0, true);
}

}  // namespace curveplex
