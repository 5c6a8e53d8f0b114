#include "doctest.h"

#include "curveplex/curve.hpp"
#include "curveplex/errors.hpp"
#include "curveplex/surface.hpp"

#include <random>

using namespace curveplex;

namespace {

Word random_word(std::mt19937& rng, int genus, int len) {
  std::uniform_int_distribution<int> pick(1, 2 * genus);
  std::bernoulli_distribution flip(0.5);
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter x = pick(rng);
    if (flip(rng)) x = -x;
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

Word conjugate(const Word& g, const Word& w) {
  return free_reduce(concat(concat(g, w), inverse(g)));
}

}  // namespace

TEST_CASE("polygon model glues to one vertex whose link spells the relator") {
  for (int g = 2; g <= 4; ++g) {
    auto s = make_surface(g);
    CHECK(static_cast<int>(s->boundary_word().size()) == 4 * g);
    // each label appears once with each sign on the boundary
    for (int x = 1; x <= 2 * g; ++x) {
      CHECK(s->side_label(s->side_of(x)) == x);
      CHECK(s->side_label(s->side_of(-x)) == -x);
    }
    Word v = s->vertex_word();
    REQUIRE(static_cast<int>(v.size()) == 4 * g);
    bool matches = false;
    for (int r = 0; r < 4 * g && !matches; ++r) {
      if (rotated(v, r) == s->relator() || rotated(v, r) == inverse(s->relator())) matches = true;
    }
    CHECK_MESSAGE(matches, "vertex link at genus ", g, " spelled ", word_name(v));
  }
}

TEST_CASE("reduction kills products of conjugated relators") {
  auto s = make_surface(2);
  CHECK(s->is_null(s->relator()));
  CHECK(s->is_null(inverse(s->relator())));
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Word w;
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < parts; ++p) {
      Word g = random_word(rng, 2, static_cast<int>(rng() % 5));
      Word r = (rng() % 2) ? s->relator() : inverse(s->relator());
      w = free_reduce(concat(w, conjugate(g, r)));
    }
    CHECK(s->is_null(w));
  }
  CHECK_FALSE(s->is_null(parse_word("a1", 2)));
  CHECK_FALSE(s->is_null(parse_word("a1 b1 A1 B1", 2)));
}

TEST_CASE("reduction shortens without changing the group element") {
  std::mt19937 rng(13);
  for (int genus : {2, 3}) {
    auto s = make_surface(genus);
    for (int t = 0; t < 30; ++t) {
      Word w = random_word(rng, genus, 6 + static_cast<int>(rng() % 14));
      // pad with a relator chunk so there is often something to reduce
      Word r = rotated(s->relator(), static_cast<int>(rng() % (4 * genus)));
      Word padded = concat(concat(Word(w.begin(), w.begin() + 3),
                                  Word(r.begin(), r.begin() + 2 * genus + 1)),
                           Word(w.begin() + 3, w.end()));
      Word red = s->dehn_reduce(padded);
      CHECK(red.size() <= padded.size());
      CHECK(s->is_null(free_reduce(concat(inverse(red), padded))));
      // no over-half relator subword remains
      Word again = s->dehn_reduce(red);
      CHECK(again == red);

      Word cred = s->dehn_reduce_cyclic(padded);
      CHECK(cred.size() <= red.size());
      CHECK_FALSE(s->has_long_relator_subword_cyclic(cred));
      CHECK((is_cyclically_reduced(cred) || cred.empty()));
    }
  }
}

TEST_CASE("conjugacy keys identify rotations and conjugates") {
  auto s = make_surface(2);
  std::mt19937 rng(17);
  for (int t = 0; t < 25; ++t) {
    Word w = s->dehn_reduce_cyclic(random_word(rng, 2, 5 + static_cast<int>(rng() % 8)));
    if (w.empty()) continue;
    Word g = random_word(rng, 2, 1 + static_cast<int>(rng() % 4));
    CHECK(s->classes_equal(w, rotated(w, 2)));
    CHECK(s->classes_equal(w, conjugate(g, w)));
    CHECK(s->class_key(w) == s->class_key(conjugate(g, w)));
    CHECK(s->classes_equal_unoriented(w, inverse(w)));
  }
  CHECK_FALSE(s->classes_equal(parse_word("a1", 2), parse_word("b1", 2)));
  CHECK_FALSE(s->classes_equal(parse_word("a1", 2), parse_word("A1", 2)));
  CHECK(s->classes_equal_unoriented(parse_word("a1", 2), parse_word("A1", 2)));
  // same homology, different classes
  Word u = parse_word("a1 b2 A1 B2", 2);
  CHECK(s->homology_zero(u));
  CHECK_FALSE(s->classes_equal(u, parse_word("a2 b1 A2 B1", 2)));
}

TEST_CASE("conjugacy keys identify exchange-related geodesics") {
  // two spellings of the same class that differ by an exactly-half relator swap
  auto s = make_surface(2);
  const Word& R = s->relator();
  Word half1(R.begin(), R.begin() + 4);
  Word half2inv = inverse(Word(R.begin() + 4, R.end()));
  Word tail = parse_word("b2 b2 a1", 2);
  Word w1 = free_reduce(concat(half1, tail));
  Word w2 = free_reduce(concat(half2inv, tail));
  CHECK(w1 != w2);
  CHECK(s->dehn_reduce_cyclic(w1) == w1);
  CHECK(s->dehn_reduce_cyclic(w2) == w2);
  CHECK(s->classes_equal(w1, w2));
}

TEST_CASE("primitive root extraction") {
  auto s = make_surface(2);
  Word z = parse_word("a1 b1", 2);
  int k = 0;
  Word root = s->primitive_root(power(z, 3), &k);
  CHECK(k == 3);
  CHECK(s->classes_equal(root, z));
  k = 0;
  Word g = parse_word("b2 a2", 2);
  Word conj_pow = free_reduce(concat(concat(g, power(z, 2)), inverse(g)));
  root = s->primitive_root(conj_pow, &k);
  CHECK(k == 2);
  CHECK(s->classes_equal(root, z));
  k = 0;
  root = s->primitive_root(parse_word("a1", 2), &k);
  CHECK(k == 1);
}

TEST_CASE("homology and algebraic pairing") {
  auto s = make_surface(3);
  Word a1 = parse_word("a1", 3), b1 = parse_word("b1", 3);
  CHECK(s->pairing(a1, b1) == 1);
  CHECK(s->pairing(b1, a1) == -1);
  CHECK(s->pairing(a1, parse_word("b2", 3)) == 0);
  CHECK(s->homology_zero(s->relator()));
  Word w = parse_word("a1 b1 A1 B1 a2", 3);
  auto h = s->homology(w);
  CHECK(h[2] == 1);
  CHECK(s->pairing(w, parse_word("b2", 3)) == 1);
}

TEST_CASE("curve classes reject null input and cache keys") {
  auto s = make_surface(2);
  CHECK_THROWS_AS(CurveClass(s, s->relator()), EmptyAfterReduction);
  CHECK_THROWS_AS(CurveClass(s, parse_word("a1 A1", 2)), EmptyAfterReduction);
  CurveClass c(s, "a1 b1");
  CHECK(c.word() == parse_word("a1 b1", 2));
  CHECK(c.same_class(CurveClass(s, "b1 a1")));
  CHECK_FALSE(c.same_class(c.reversed()));
  CHECK(c.same_class_unoriented(c.reversed()));
  CHECK(c.powered(2).word() == power(c.word(), 2));
  CHECK(CurveClass(s, s->boundary_word()).separating_homology());
}
