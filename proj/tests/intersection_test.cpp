#include "curveplex/intersection.hpp"

#include <string>
#include <vector>

#include "curveplex/errors.hpp"
#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"
#include "doctest.h"

using namespace curveplex;

namespace {

Word W(const std::string& text, int genus = 2) { return parse_word(text, genus); }

constexpr CountRoute kRoutes[] = {CountRoute::Diagram, CountRoute::LinkedPairs,
                                  CountRoute::Fuchsian};

// Deterministic scribble of freely reduced letters.
Word scribble(int genus, int len, unsigned seed) {
  unsigned s = seed * 2654435761u + 17u;
  Word w;
  while (static_cast<int>(w.size()) < len) {
    s = s * 1664525u + 1013904223u;
    int pick = static_cast<int>((s >> 8) % static_cast<unsigned>(4 * genus));
    Letter x = static_cast<Letter>(pick / 2 + 1);
    if (pick % 2) x = -x;
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

}  // namespace

TEST_CASE("all routes reproduce the frozen small crossing numbers") {
  for (int genus : {2, 3}) {
    auto sur = make_surface(genus);
    for (CountRoute r : kRoutes) {
      CHECK(intersection_number(sur, W("a1", genus), W("b1", genus), r) == 1);
      CHECK(intersection_number(sur, W("a1", genus), W("a2", genus), r) == 0);
      CHECK(intersection_number(sur, W("a1 b1 A1 B1", genus), W("a1", genus), r) == 0);
      CHECK(intersection_number(sur, W("a1 b1 A1 B1", genus), W("a1 b2", genus), r) == 2);
      CHECK(self_intersection_number(sur, W("a1 b1 a1 b2", genus), r) == 1);
    }
  }
}

TEST_CASE("crossings that only cancel through a hidden homotopy are not counted") {
  // The taut chord diagram of this pair keeps twelve crossings, two pairs of
  // which match under the deck action and cancel. All routes must settle on
  // ten, the diagram route by parity rather than by raw count.
  auto sur = make_surface(2);
  Word u = W("A2 b1 A2 A2 A2 B2 a2");
  Word v = W("A1 a2 B1 A1 b1 b1 B2");
  for (CountRoute r : kRoutes) CHECK(intersection_number(sur, u, v, r) == 10);
}

TEST_CASE("powers and shared lines dispatch algebraically") {
  auto sur = make_surface(2);
  const Word a1 = W("a1");
  const Word fig8 = W("a1 b1 a1 b2");  // one essential self crossing
  for (CountRoute r : kRoutes) {
    // k parallel strands of a simple class cross each other k-1 times
    CHECK(self_intersection_number(sur, power(a1, 2), r) == 1);
    CHECK(self_intersection_number(sur, power(a1, 3), r) == 2);
    // k^2 copies of each base crossing plus the parallel-strand term
    CHECK(self_intersection_number(sur, power(fig8, 2), r) == 5);
    // distinct powers of one simple line never cross
    CHECK(intersection_number(sur, power(a1, 2), power(a1, 3), r) == 0);
    // two curves on one non-simple line: two crossings per base crossing
    CHECK(intersection_number(sur, fig8, fig8, r) == 2);
    CHECK(intersection_number(sur, power(fig8, 2), fig8, r) == 4);
    // powers of distinct lines scale multiplicatively
    CHECK(intersection_number(sur, power(a1, 2), power(W("b1"), 3), r) == 6);
  }
}

TEST_CASE("the three routes agree on scribbled classes") {
  for (int genus : {2, 3}) {
    auto sur = make_surface(genus);
    const unsigned pair_cases = genus == 2 ? 6 : 2;
    for (unsigned seed = 0; seed < pair_cases; ++seed) {
      Word u = scribble(genus, 5 + static_cast<int>(seed % 3), seed * 2 + 1);
      Word v = scribble(genus, 4 + static_cast<int>(seed % 4), seed * 2 + 2);
      CAPTURE(word_name(u));
      CAPTURE(word_name(v));
      const int dg = intersection_number(sur, u, v, CountRoute::Diagram);
      CHECK(intersection_number(sur, u, v, CountRoute::LinkedPairs) == dg);
      CHECK(intersection_number(sur, u, v, CountRoute::Fuchsian) == dg);
      CHECK(intersection_number(sur, v, u, CountRoute::Diagram) == dg);
    }
    const unsigned self_cases = genus == 2 ? 4 : 2;
    for (unsigned seed = 0; seed < self_cases; ++seed) {
      Word w = scribble(genus, 5 + static_cast<int>(seed % 3), 1000 + seed);
      CAPTURE(word_name(w));
      const int dg = self_intersection_number(sur, w, CountRoute::Diagram);
      CHECK(self_intersection_number(sur, w, CountRoute::LinkedPairs) == dg);
      CHECK(self_intersection_number(sur, w, CountRoute::Fuchsian) == dg);
      CHECK(self_intersection_number(sur, inverse(w), CountRoute::Diagram) == dg);
    }
  }
}

TEST_CASE("null classes are rejected") {
  auto sur = make_surface(2);
  for (CountRoute r : kRoutes) {
    CHECK_THROWS_AS(intersection_number(sur, W("a1 A1"), W("b1"), r),
                    EmptyAfterReduction);
    CHECK_THROWS_AS(self_intersection_number(sur, sur->relator(), r),
                    EmptyAfterReduction);
  }
}
