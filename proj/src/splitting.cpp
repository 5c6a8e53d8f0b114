#include "curveplex/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "curveplex/errors.hpp"
#include "curveplex/hashing.hpp"
#include "curveplex/intersection.hpp"

namespace curveplex {
namespace {

bool is_meridian_letter(Letter x) { return std::abs(x) % 2 == 1; }

/// Image of the class in the fundamental group of the inner handlebody,
/// which is free on b1..bg: drop the a-letters and reduce cyclically.
Word compress_to_handlebody(const Word& w) {
  Word out;
  for (Letter x : w)
    if (!is_meridian_letter(x)) out.push_back(x);
  return cyclic_free_reduce(std::move(out));
}

bool word_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

/// All freely reduced words of length 1..max_len over the surface letters,
/// shortest first, letters ordered a1 < A1 < b1 < B1 < a2 < ...
std::vector<Word> arc_words(int genus, int max_len) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= 2 * genus; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Word> out, frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Letter x : alphabet) {
        if (!w.empty() && w.back() == -x) continue;
        Word grown = w;
        grown.push_back(x);
        next.push_back(std::move(grown));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string budget_key(const DiskBudget& b) {
  return "len" + std::to_string(b.word_length) + ";arc" + std::to_string(b.arc_length) +
         ";depth" + std::to_string(b.twist_depth);
}

std::filesystem::path cache_path(const HeegaardSplitting& split, Side side,
                                 const DiskBudget& budget) {
  const char* dir = std::getenv("CURVEPLEX_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  const std::string key =
      split.spec_key() + "|" + side_name(side) + "|" + budget_key(budget);
  return std::filesystem::path(dir) / ("disks-" + hex64(fnv1a64(key)) + ".json");
}

std::vector<DiskClass> read_cache(const HeegaardSplitting& split, Side side,
                                  const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  nlohmann::json doc;
  try {
    in >> doc;
    std::vector<DiskClass> disks;
    for (const auto& entry : doc.at("disks"))
      disks.push_back(
          {parse_word(entry.get<std::string>(), split.genus()), side});
    return disks;
  } catch (const std::exception&) {
    return {};  // unreadable cache entries are recomputed
  }
}

void write_cache(const HeegaardSplitting& split, Side side, const DiskBudget& budget,
                 const std::filesystem::path& path, const std::vector<DiskClass>& disks) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  nlohmann::ordered_json doc;
  doc["spec"] = split.spec_key();
  doc["side"] = side_name(side);
  doc["budget"] = budget_key(budget);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& d : disks) list.push_back(word_name(d.boundary));
  doc["disks"] = std::move(list);
  std::ofstream out(path);
  if (out) out << doc.dump(2) << "\n";
}

}  // namespace

HeegaardSplitting::HeegaardSplitting(std::shared_ptr<const SurfaceModel> surface,
                                     MappingClass gluing, HypothesisFlags flags)
    : surface_(std::move(surface)), gluing_(std::move(gluing)), flags_(flags) {
  if (surface_->genus() < 2)
    throw BadInput("splittings need genus at least 2, got " +
                   std::to_string(surface_->genus()));
  if (surface_->genus() < 3 && flags_.assume_irreducible && flags_.assume_unstabilized)
    throw BadInput("structural hypotheses are only supported from genus 3 up");
}

std::vector<Word> HeegaardSplitting::cut_system() const {
  std::vector<Word> out;
  for (int i = 1; i <= genus(); ++i) out.push_back(Word{gen_a(i)});
  return out;
}

std::vector<Word> HeegaardSplitting::glued_cut_system() const {
  std::vector<Word> out;
  for (const Word& a : cut_system())
    out.push_back(canonical_unoriented(surface_, gluing_.apply(a)));
  return out;
}

std::string HeegaardSplitting::spec_key() const {
  std::ostringstream os;
  os << "genus=" << genus() << ";gluing=";
  bool first = true;
  for (const auto& [about, n] : gluing_.factors()) {
    if (!first) os << ",";
    first = false;
    os << word_name(about) << "^" << n;
  }
  os << ";flags=" << (flags_.assume_irreducible ? 1 : 0)
     << (flags_.assume_unstabilized ? 1 : 0);
  return os.str();
}

Word canonical_unoriented(const std::shared_ptr<const SurfaceModel>& surface, const Word& w) {
  Word fwd = surface->canonical_cyclic(w);
  Word bwd = surface->canonical_cyclic(inverse(w));
  return word_less(bwd, fwd) ? bwd : fwd;
}

bool bounds_disk(const HeegaardSplitting& split, const Word& curve, Side side) {
  const auto& surface = split.surface();
  Word c = surface->dehn_reduce_cyclic(curve);
  if (c.empty()) throw EmptyAfterReduction();
  if (self_intersection_number(surface, c) != 0)
    throw NotSimple(word_name(c) + " crosses itself; only embedded curves bound disks");
  if (side == Side::W) c = surface->dehn_reduce_cyclic(split.gluing().inverse().apply(c));
  return compress_to_handlebody(c).empty();
}

DiskClass band_sum(const HeegaardSplitting& split, const DiskClass& disk, const Word& arc) {
  const auto& surface = split.surface();
  if (!bounds_disk(split, disk.boundary, disk.side))
    throw BadInput("band sum needs a disk boundary, got " + word_name(disk.boundary) +
                   " on side " + side_name(disk.side));
  const Word d = surface->dehn_reduce_cyclic(disk.boundary);
  const Word g = free_reduce(arc);
  Word banded = surface->dehn_reduce_cyclic(
      concat(d, concat(g, concat(inverse(d), inverse(g)))));
  if (banded.empty())
    throw BadArc("arc " + word_name(g) + " slides the copies back together");
  if (self_intersection_number(surface, banded) != 0)
    throw BadArc("arc " + word_name(g) + " gives a band that crosses the disk copies");
  if (intersection_number(surface, banded, d) != 0)
    throw BadArc("arc " + word_name(g) + " gives a curve that still meets the disk");
  if (surface->classes_equal_unoriented(banded, d))
    throw BadArc("arc " + word_name(g) + " gives a parallel copy of the disk");
  DiskClass out{canonical_unoriented(surface, banded), disk.side};
  if (!bounds_disk(split, out.boundary, out.side))
    throw Internal("band sum of " + word_name(d) + " along " + word_name(g) +
                   " stopped bounding");
  return out;
}

std::vector<DiskClass> enumerate_disks(const HeegaardSplitting& split, Side side,
                                       const DiskBudget& budget) {
  if (budget.word_length < 1 || budget.arc_length < 0 || budget.twist_depth < 0)
    throw BadInput("disk budget out of range: " + budget_key(budget));

  const auto path = cache_path(split, side, budget);
  if (!path.empty()) {
    auto cached = read_cache(split, side, path);
    if (!cached.empty()) return cached;
  }

  const auto& surface = split.surface();
  std::vector<DiskClass> result;

  if (side == Side::W) {
    // The outer handlebody's disks are the gluing images of the inner ones.
    std::map<std::string, DiskClass> seen;
    for (const auto& disk : enumerate_disks(split, Side::V, budget)) {
      Word image = canonical_unoriented(surface, split.gluing().apply(disk.boundary));
      seen.emplace(surface->class_key_unoriented(image), DiskClass{image, Side::W});
    }
    for (auto& [key, disk] : seen) result.push_back(std::move(disk));
  } else {
    std::map<std::string, DiskClass> seen;
    std::vector<Word> core;
    auto admit = [&](const Word& w, bool force) {
      Word c = surface->dehn_reduce_cyclic(w);
      if (c.empty()) return false;
      if (!force && static_cast<int>(c.size()) > budget.word_length) return false;
      if (self_intersection_number(surface, c) != 0) return false;
      if (!bounds_disk(split, c, Side::V)) return false;
      Word rep = canonical_unoriented(surface, c);
      if (!seen.emplace(surface->class_key_unoriented(rep), DiskClass{rep, Side::V}).second)
        return false;
      core.push_back(rep);
      return true;
    };

    for (const Word& a : split.cut_system()) admit(a, /*force=*/true);

    const std::vector<Word> cut = split.cut_system();
    for (const Word& d : cut)
      for (const Word& g : arc_words(split.genus(), budget.arc_length)) {
        try {
          admit(band_sum(split, DiskClass{d, Side::V}, g).boundary, /*force=*/false);
        } catch (const BadArc&) {
        }
      }

    // Images under twist products about the standard curves, kept only when
    // they still bound; the twist about a meridian always qualifies, others
    // only in combinations that happen to preserve the handlebody.
    std::vector<Word> twist_curves;
    for (int i = 1; i <= split.genus(); ++i) {
      twist_curves.push_back(Word{gen_a(i)});
      twist_curves.push_back(Word{gen_b(i)});
    }
    std::vector<Word> stage = core;
    for (int depth = 0; depth < budget.twist_depth; ++depth) {
      std::vector<Word> next;
      for (const Word& w : stage)
        for (const Word& about : twist_curves)
          for (int n : {1, -1}) {
            Word image = dehn_twist(surface, w, about, n);
            if (admit(image, /*force=*/false)) next.push_back(canonical_unoriented(surface, image));
          }
      stage = std::move(next);
      if (stage.empty()) break;
    }

    for (auto& [key, disk] : seen) result.push_back(std::move(disk));
  }

  std::sort(result.begin(), result.end(), [](const DiskClass& x, const DiskClass& y) {
    return word_less(x.boundary, y.boundary);
  });

  if (!path.empty()) write_cache(split, side, budget, path, result);
  return result;
}

}  // namespace curveplex
