#include "doctest.h"

#include "curveplex/errors.hpp"
#include "curveplex/letters.hpp"

#include <random>

using namespace curveplex;

TEST_CASE("letter parsing round trips and rejects junk") {
  CHECK(parse_letter("a1", 3) == 1);
  CHECK(parse_letter("b1", 3) == 2);
  CHECK(parse_letter("A2", 3) == -3);
  CHECK(parse_letter("B3", 3) == -6);
  CHECK(letter_name(-6) == "B3");
  CHECK(word_name(parse_word("a1 B2 A1 b2", 2)) == "a1 B2 A1 b2");
  CHECK_THROWS_AS(parse_letter("c1", 3), BadInput);
  CHECK_THROWS_AS(parse_letter("a4", 3), BadInput);
  CHECK_THROWS_AS(parse_letter("a", 3), BadInput);
  CHECK_THROWS_AS(parse_letter("a1x", 3), BadInput);
}

TEST_CASE("free and cyclic reduction") {
  Word w = parse_word("a1 b1 B1 A1 a2", 2);
  CHECK(free_reduce(w) == parse_word("a2", 2));
  // seam cancellation only applies cyclically
  Word c = parse_word("A2 a1 b1 a2", 2);
  CHECK(free_reduce(c) == c);
  CHECK(cyclic_free_reduce(c) == parse_word("a1 b1", 2));
  CHECK(cyclic_free_reduce(parse_word("a1 A1", 2)).empty());
  CHECK(is_cyclically_reduced(parse_word("a1 b1", 2)));
  CHECK_FALSE(is_cyclically_reduced(c));
}

TEST_CASE("inverse, rotation and power behave as group operations") {
  Word w = parse_word("a1 b2 A1", 2);
  CHECK(free_reduce(concat(w, inverse(w))).empty());
  CHECK(rotated(w, 1) == parse_word("b2 A1 a1", 2));
  CHECK(rotated(w, -1) == rotated(w, 2));
  CHECK(power(w, 2) == concat(w, w));
  CHECK(power(w, -1) == inverse(w));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-4, 4);
  for (int t = 0; t < 50; ++t) {
    Word u;
    for (int i = 0; i < 12; ++i) {
      int x = pick(rng);
      if (x != 0) u.push_back(x);
    }
    Word r = free_reduce(u);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(concat(u, inverse(u))).empty());
    CHECK(cyclic_free_reduce(rotated(cyclic_free_reduce(u), 1)).size() ==
          cyclic_free_reduce(u).size());
  }
}
