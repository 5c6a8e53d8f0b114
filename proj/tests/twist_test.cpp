#include "curveplex/twist.hpp"

#include <string>
#include <vector>

#include "curveplex/errors.hpp"
#include "curveplex/intersection.hpp"
#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"
#include "doctest.h"

using namespace curveplex;

namespace {

Word W(const std::string& text, int genus = 2) { return parse_word(text, genus); }

}  // namespace

TEST_CASE("the orientation convention is pinned") {
  auto sur = make_surface(2);
  CHECK(sur->classes_equal(dehn_twist(sur, W("a1"), W("b1")), W("b1 a1")));
  CHECK(sur->classes_equal(dehn_twist(sur, W("a1"), W("b1"), -1), W("B1 a1")));
}

TEST_CASE("twists fix disjoint curves and their own core") {
  auto sur = make_surface(2);
  CHECK(sur->classes_equal(dehn_twist(sur, W("a1"), W("b2"), 3), W("a1")));
  CHECK(sur->classes_equal(dehn_twist(sur, W("b1"), W("b1"), 2), W("b1")));
  CHECK(sur->classes_equal(dehn_twist(sur, W("a2 b2"), W("a1")), W("a2 b2")));
}

TEST_CASE("crossing numbers grow linearly in the twist power") {
  auto sur = make_surface(2);
  // i(t^n(w), w) = n * i(w, c)^2 for simple w and c
  for (int n = 1; n <= 4; ++n)
    CHECK(intersection_number(sur, dehn_twist(sur, W("a1"), W("b1"), n), W("a1")) == n);
  const Word comm = W("a1 b1 A1 B1");
  const Word c = W("a1 B2");
  REQUIRE(intersection_number(sur, comm, c) == 2);
  CHECK(intersection_number(sur, dehn_twist(sur, comm, c, 1), comm) == 4);
  CHECK(intersection_number(sur, dehn_twist(sur, comm, c, 2), comm) == 8);
}

TEST_CASE("twisting acts on homology by the crossing pairing") {
  auto sur = make_surface(2);
  const std::vector<Word> ws = {W("b2 a2 B1 a1 A2 B2"), W("a1 b1 a1 b2")};
  const std::vector<Word> cs = {W("b1"), W("a2"), W("a1 B2")};
  for (const Word& w : ws) {
    for (const Word& c : cs) {
      auto got = sur->homology(dehn_twist(sur, w, c));
      auto base = sur->homology(w);
      auto hc = sur->homology(c);
      long long p = sur->pairing(w, c);
      for (size_t k = 0; k < base.size(); ++k) base[k] += p * hc[k];
      CHECK(got == base);
    }
  }
}

TEST_CASE("crossing numbers are invariant under a twist of both curves") {
  auto sur = make_surface(2);
  const Word u = W("b2 a2 B1 a1 A2 B2");
  const Word v = W("b1 A2 B1 B2 a1 B1 A1");
  const int base = intersection_number(sur, u, v);
  for (const Word& c : {W("b1"), W("a1 B2")}) {
    CHECK(intersection_number(sur, dehn_twist(sur, u, c), dehn_twist(sur, v, c)) == base);
  }
  const Word w = W("b1 A1 a2 B2 b1 b1");
  CHECK(self_intersection_number(sur, dehn_twist(sur, w, W("a2"))) ==
        self_intersection_number(sur, w));
}

TEST_CASE("compositions apply factors in order and invert cleanly") {
  auto sur = make_surface(2);
  MappingClass phi(sur);
  phi.twist(W("b1")).twist(W("a1"), -1).twist(W("a1 B2"));
  const Word w = W("a2 b1");
  Word by_hand = dehn_twist(sur, w, W("b1"));
  by_hand = dehn_twist(sur, by_hand, W("a1"), -1);
  by_hand = dehn_twist(sur, by_hand, W("a1 B2"));
  CHECK(sur->classes_equal(phi.apply(w), by_hand));
  CHECK(sur->classes_equal(phi.inverse().apply(phi.apply(w)), w));
}

TEST_CASE("twisting about a self-crossing curve is rejected") {
  auto sur = make_surface(2);
  CHECK_THROWS_AS(dehn_twist(sur, W("a1"), W("a1 b1 a1 b2")), NotSimple);
  CHECK_THROWS_AS(dehn_twist(sur, W("a1 A1"), W("b1")), EmptyAfterReduction);
}
