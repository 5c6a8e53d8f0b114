#include "curveplex/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "curveplex/errors.hpp"

namespace curveplex {

SurfaceModel::SurfaceModel(int genus) : genus_(genus) {
  if (genus < 2) throw BadInput("genus must be at least 2");
  for (int i = 1; i <= genus; ++i) {
    relator_.push_back(gen_a(i));
    relator_.push_back(gen_b(i));
    relator_.push_back(-gen_a(i));
    relator_.push_back(-gen_b(i));
    boundary_.push_back(gen_a(i));
    boundary_.push_back(-gen_b(i));
    boundary_.push_back(-gen_a(i));
    boundary_.push_back(gen_b(i));
  }
  const int n = n_sides();
  for (int r = 0; r < n; ++r) variants_.push_back(rotated(relator_, r));
  Word ri = inverse(relator_);
  for (int r = 0; r < n; ++r) variants_.push_back(rotated(ri, r));
  side_of_.assign(static_cast<size_t>(4 * genus + 1), -1);
  for (int k = 0; k < n; ++k) side_of_[static_cast<size_t>(boundary_[static_cast<size_t>(k)] + 2 * genus)] = k;
}

int SurfaceModel::side_of(Letter x) const {
  return side_of_[static_cast<size_t>(x + 2 * genus_)];
}

Word SurfaceModel::vertex_word() const {
  const int n = n_sides();
  // Corner i sits between sides i and i+1; its germs are inv(side i) and
  // side i+1. Following shared germs corner to corner traverses the vertex link.
  Word germs;
  Letter g = boundary_[1 % static_cast<size_t>(n)];
  for (int step = 0; step < n; ++step) {
    germs.push_back(g);
    int j = side_of(-g);
    g = boundary_[static_cast<size_t>((j + 1) % n)];
  }
  return germs;
}

int SurfaceModel::longest_variant_match(const Word& w, size_t i, int* variant_out) const {
  int best = 0, best_v = -1;
  const size_t n = w.size();
  for (size_t v = 0; v < variants_.size(); ++v) {
    const Word& V = variants_[v];
    size_t m = 0;
    while (i + m < n && m < V.size() && w[i + m] == V[m]) ++m;
    if (static_cast<int>(m) > best) {
      best = static_cast<int>(m);
      best_v = static_cast<int>(v);
    }
  }
  if (variant_out) *variant_out = best_v;
  return best;
}

Word SurfaceModel::dehn_reduce(Word w) const {
  const int h = half();
  for (;;) {
    w = free_reduce(std::move(w));
    bool changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      int v = -1;
      int m = longest_variant_match(w, i, &v);
      if (m > h) {
        const Word& V = variants_[static_cast<size_t>(v)];
        Word repl;
        for (size_t k = V.size(); k > static_cast<size_t>(m); --k) repl.push_back(-V[k - 1]);
        Word out(w.begin(), w.begin() + static_cast<long>(i));
        out.insert(out.end(), repl.begin(), repl.end());
        out.insert(out.end(), w.begin() + static_cast<long>(i) + m, w.end());
        w = std::move(out);
        changed = true;
        break;
      }
    }
    if (!changed) return w;
  }
}

Word SurfaceModel::dehn_reduce_cyclic(Word w) const {
  const int h = half();
  for (;;) {
    w = cyclic_free_reduce(std::move(w));
    const int n = static_cast<int>(w.size());
    if (n <= h) return w;
    Word doubled = concat(w, w);
    bool changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      int v = -1;
      int m = longest_variant_match(doubled, static_cast<size_t>(i), &v);
      if (m > n) m = n;
      if (m > h) {
        const Word& V = variants_[static_cast<size_t>(v)];
        Word repl;
        for (size_t k = V.size(); k > static_cast<size_t>(m); --k) repl.push_back(-V[k - 1]);
        Word rot = rotated(w, i);
        Word out = repl;
        out.insert(out.end(), rot.begin() + m, rot.end());
        w = std::move(out);
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

bool SurfaceModel::is_null(const Word& w) const { return dehn_reduce(w).empty(); }

bool SurfaceModel::has_long_relator_subword_cyclic(const Word& w) const {
  const int h = half();
  const int n = static_cast<int>(w.size());
  if (n <= h) return false;
  Word doubled = concat(w, w);
  for (int i = 0; i < n; ++i) {
    int m = longest_variant_match(doubled, static_cast<size_t>(i), nullptr);
    if (std::min(m, n) > h) return true;
  }
  return false;
}

namespace {

std::string min_rotation_key(const Word& w) {
  if (w.empty()) return std::string();
  std::string best = word_key(w);
  for (size_t r = 1; r < w.size(); ++r) {
    std::string k = word_key(rotated(w, static_cast<int>(r)));
    if (k < best) best = k;
  }
  return best;
}

Word word_of_key(const std::string& key) {
  Word w;
  w.reserve(key.size());
  for (char c : key) w.push_back(static_cast<Letter>(c) - 64);
  return w;
}

}  // namespace

Word SurfaceModel::canonical_cyclic(const Word& w_in) const {
  Word w = dehn_reduce_cyclic(w_in);
  if (w.empty()) return w;
  if (w.size() > 220)
    throw Internal("canonical form requested for oversized word (" + std::to_string(w.size()) + " letters)");
  const int h = half();
  std::set<std::string> seen;
  std::queue<Word> bfs;
  std::string start = min_rotation_key(w);
  seen.insert(start);
  bfs.push(word_of_key(start));
  std::string best = start;
  const size_t cap = 20000;
  while (!bfs.empty()) {
    Word u = bfs.front();
    bfs.pop();
    const int n = static_cast<int>(u.size());
    Word doubled = concat(u, u);
    for (int i = 0; i < n; ++i) {
      for (const Word& V : variants_) {
        bool match = true;
        for (int k = 0; k < h; ++k) {
          if (doubled[static_cast<size_t>(i + k)] != V[static_cast<size_t>(k)]) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        Word repl;
        for (size_t k = V.size(); k > static_cast<size_t>(h); --k) repl.push_back(-V[k - 1]);
        Word rot = rotated(u, i);
        Word next = repl;
        next.insert(next.end(), rot.begin() + h, rot.end());
        next = dehn_reduce_cyclic(std::move(next));
        std::string key = min_rotation_key(next);
        if (seen.insert(key).second) {
          if (seen.size() > cap) throw Internal("canonical closure overflow");
          best = std::min(best, key);
          bfs.push(word_of_key(key));
        }
      }
    }
  }
  return word_of_key(best);
}

std::string SurfaceModel::class_key(const Word& w) const { return word_key(canonical_cyclic(w)); }

std::string SurfaceModel::class_key_unoriented(const Word& w) const {
  std::string a = class_key(w);
  std::string b = class_key(inverse(w));
  return std::min(a, b);
}

bool SurfaceModel::classes_equal(const Word& u, const Word& v) const {
  Word ru = dehn_reduce_cyclic(u), rv = dehn_reduce_cyclic(v);
  if (ru.size() != rv.size()) return false;
  if (homology(ru) != homology(rv)) return false;
  return class_key(ru) == class_key(rv);
}

bool SurfaceModel::classes_equal_unoriented(const Word& u, const Word& v) const {
  return classes_equal(u, v) || classes_equal(u, inverse(v));
}

Word SurfaceModel::primitive_root(const Word& w, int* power_out) const {
  Word c = canonical_cyclic(w);
  const int n = static_cast<int>(c.size());
  if (power_out) *power_out = 1;
  if (n == 0) return c;
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i + p < n && periodic; ++i)
      if (c[static_cast<size_t>(i)] != c[static_cast<size_t>(i + p)]) periodic = false;
    if (periodic) {
      if (power_out) *power_out = n / p;
      return Word(c.begin(), c.begin() + p);
    }
  }
  return c;
}

std::vector<long long> SurfaceModel::homology(const Word& w) const {
  std::vector<long long> h(static_cast<size_t>(2 * genus_), 0);
  for (Letter x : w) {
    int k = x > 0 ? x : -x;
    h[static_cast<size_t>(k - 1)] += (x > 0) ? 1 : -1;
  }
  return h;
}

bool SurfaceModel::homology_zero(const Word& w) const {
  auto h = homology(w);
  return std::all_of(h.begin(), h.end(), [](long long x) { return x == 0; });
}

long long SurfaceModel::pairing(const Word& u, const Word& v) const {
  auto hu = homology(u), hv = homology(v);
  long long s = 0;
  for (int i = 0; i < genus_; ++i) {
    size_t a = static_cast<size_t>(2 * i), b = a + 1;
    s += hu[a] * hv[b] - hu[b] * hv[a];
  }
  return s;
}

std::shared_ptr<const SurfaceModel> make_surface(int genus) {
  static std::map<int, std::shared_ptr<const SurfaceModel>> cache;
  auto it = cache.find(genus);
  if (it != cache.end()) return it->second;
  auto m = std::make_shared<const SurfaceModel>(genus);
  cache[genus] = m;
  return m;
}

}  // namespace curveplex
