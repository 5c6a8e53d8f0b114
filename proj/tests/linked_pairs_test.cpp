#include "curveplex/linked_pairs.hpp"

#include <string>

#include "curveplex/errors.hpp"
#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"
#include "doctest.h"

using namespace curveplex;

namespace {

Word W(const std::string& text, int genus = 2) { return parse_word(text, genus); }

}  // namespace

TEST_CASE("boundary orders reproduce the frozen small crossing numbers") {
  for (int genus : {2, 3}) {
    auto sur = make_surface(genus);
    CHECK(linked_pairs_intersection(sur, W("a1", genus), W("b1", genus)) == 1);
    CHECK(linked_pairs_intersection(sur, W("a1", genus), W("a2", genus)) == 0);
    CHECK(linked_pairs_intersection(sur, W("a1", genus), W("b2", genus)) == 0);
    CHECK(linked_pairs_intersection(sur, W("a1 b1 A1 B1", genus), W("a1", genus)) == 0);
    CHECK(linked_pairs_intersection(sur, W("a1 b1 A1 B1", genus), W("a1 b2", genus)) == 2);
  }
}

TEST_CASE("crossings accumulate one per twist in the linear family") {
  // Distinct conjugates of the second curve pile up on one side here; orbit
  // counting has to keep them apart without double-charging rotations.
  auto sur = make_surface(2);
  Word base = W("a1");
  Word w = base;
  for (int n = 1; n <= 4; ++n) {
    w.push_back(2);  // append b1
    CHECK(linked_pairs_intersection(sur, w, base) == n);
  }
}

TEST_CASE("self crossing counts match the frozen values") {
  auto sur = make_surface(2);
  CHECK(linked_pairs_self(sur, W("a1")) == 0);
  CHECK(linked_pairs_self(sur, W("a1 b1")) == 0);
  CHECK(linked_pairs_self(sur, W("a1 b1 A1 B1")) == 0);
  CHECK(linked_pairs_self(sur, W("a1 b1 a1 b2")) == 1);
  CHECK(linked_pairs_self(sur, W("b2 b2 b1 A2 b2 B1")) == 9);
  auto g3 = make_surface(3);
  CHECK(linked_pairs_self(g3, W("b3 a1 b1 A3 B2", 3)) == 4);
}

TEST_CASE("spelling closure recovers from words with hidden shorter forms") {
  // Conjugating this class produces a reduced word that still is not a
  // shortest spelling: only an exchange uncovers the cancellation. The count
  // must come out right rather than tripping an internal guard.
  auto sur = make_surface(2);
  CHECK(linked_pairs_self(sur, W("b2 B1 a1 B1 A1 A2 b2")) == 5);
}

TEST_CASE("counts ignore orientation, rotation, and conjugation") {
  auto sur = make_surface(2);
  Word u = W("b2 a2 B1 a1 A2 B2");
  Word v = W("b1 A2 B1 B2 a1 B1 A1");
  const int base = linked_pairs_intersection(sur, u, v);
  CHECK(base == 3);
  CHECK(linked_pairs_intersection(sur, v, u) == base);
  CHECK(linked_pairs_intersection(sur, inverse(u), v) == base);
  CHECK(linked_pairs_intersection(sur, u, inverse(v)) == base);
  CHECK(linked_pairs_intersection(sur, rotated(u, 3), v) == base);
  Word cv = free_reduce(concat(concat(W("b1 a2"), v), inverse(W("b1 a2"))));
  CHECK(linked_pairs_intersection(sur, u, cv) == base);
}

TEST_CASE("null classes are rejected") {
  auto sur = make_surface(2);
  CHECK_THROWS_AS(linked_pairs_self(sur, W("a1 A1")), EmptyAfterReduction);
  CHECK_THROWS_AS(linked_pairs_intersection(sur, sur->relator(), W("a1")),
                  EmptyAfterReduction);
}
