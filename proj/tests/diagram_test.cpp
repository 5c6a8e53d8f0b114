#include <memory>
#include <string>
#include <vector>

#include "doctest.h"

#include "curveplex/diagram.hpp"
#include "curveplex/errors.hpp"
#include "curveplex/letters.hpp"
#include "curveplex/surface.hpp"

using namespace curveplex;

namespace {

// every word in this file fits inside genus 3
Word W(const std::string& text) { return parse_word(text, 3); }

int pair_count(const std::shared_ptr<const SurfaceModel>& s, const std::string& u,
               const std::string& v) {
  Diagram d(s, {W(u), W(v)});
  d.tauten();
  return d.crossings_between(0, 1);
}

int self_count(const std::shared_ptr<const SurfaceModel>& s, const std::string& u) {
  Diagram d(s, {W(u)});
  d.tauten();
  return d.self_crossings(0);
}

}  // namespace

TEST_CASE("dual generator curves meet exactly once") {
  for (int g : {2, 3}) {
    auto s = make_surface(g);
    Diagram d(s, {W("a1"), W("b1")});
    d.tauten();
    CHECK(d.is_taut());
    CHECK(d.total_crossings() == 1);
    CHECK(d.crossings_between(0, 1) == 1);
    CHECK(d.self_crossings(0) == 0);
    CHECK(d.self_crossings(1) == 0);
    auto xs = d.crossings_of_pair(0, 1);
    REQUIRE(xs.size() == 1);
    CHECK(xs[0].a_arc == 0);
    CHECK(xs[0].b_arc == 0);
    CHECK(xs[0].a_rank == 0);
    CHECK((xs[0].sign == 1 || xs[0].sign == -1));
  }
}

TEST_CASE("curves on different handles can be pulled apart") {
  auto s = make_surface(2);
  CHECK(pair_count(s, "a1", "a2") == 0);
  CHECK(pair_count(s, "a1", "b2") == 0);
  CHECK(pair_count(s, "b1", "b2") == 0);
  auto s3 = make_surface(3);
  CHECK(pair_count(s3, "a1 b1", "a3") == 0);
}

TEST_CASE("twisting a curve about its dual accumulates crossings linearly") {
  auto s = make_surface(2);
  for (int n = 1; n <= 4; ++n) {
    std::string w = "a1";
    for (int i = 0; i < n; ++i) w += " b1";
    Diagram d(s, {W(w), W("a1")});
    d.tauten();
    CHECK(d.crossings_between(0, 1) == n);
    auto xs = d.crossings_of_pair(0, 1);
    REQUIRE(static_cast<int>(xs.size()) == n);
    for (const auto& x : xs) CHECK(x.sign == xs[0].sign);
  }
  CHECK(pair_count(s, "a1 b1", "b1") == 1);
}

TEST_CASE("a handle boundary avoids the curves it engulfs") {
  auto s = make_surface(2);
  CHECK(pair_count(s, "a1 b1 A1 B1", "a1") == 0);
  CHECK(pair_count(s, "a1 b1 A1 B1", "b1") == 0);
  CHECK(pair_count(s, "a1 b1 A1 B1", "a1 b1") == 0);
  CHECK(self_count(s, "a1 b1 A1 B1") == 0);
}

TEST_CASE("a handle boundary separates the remaining handles from its own") {
  auto s = make_surface(2);
  CHECK(pair_count(s, "a1 b1 A1 B1", "a1 b2") == 2);
  auto s3 = make_surface(3);
  CHECK(pair_count(s3, "a1 b1 A1 B1", "a2") == 0);
  CHECK(pair_count(s3, "a1 b1 A1 B1", "a1 b3") == 2);
}

TEST_CASE("proper powers of embedded curves need self crossings") {
  auto s = make_surface(2);
  CHECK(self_count(s, "a1") == 0);
  CHECK(self_count(s, "a1 b1") == 0);
  CHECK(self_count(s, "a1 a1") == 1);
  CHECK(self_count(s, "a1 b1 a1 b1") == 1);
}

TEST_CASE("construction reduces wall words before laying out strands") {
  auto s = make_surface(2);
  // cyclic conjugation cancels at the seam
  Diagram d1(s, {W("b2 a1 B2")});
  CHECK(d1.word(0) == W("a1"));
  // a half-handle boundary times a2 is freely homotopic to a2 itself
  Diagram d2(s, {W("a1 b1 A1 B1 a2")});
  CHECK(d2.word(0) == W("a2"));
  CHECK_THROWS_AS(Diagram(s, {Word{1, -1}}), EmptyAfterReduction);
  Diagram d3(s, {W("a1"), W("b1")});
  CHECK_THROWS_AS(d3.crossings_between(0, 0), BadInput);
}

TEST_CASE("the region around a once-crossing pair is bounded by the handle boundary") {
  auto s = make_surface(2);
  Diagram d(s, {W("a1"), W("b1")});
  d.tauten();
  auto walks = d.faces();
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].edges.size() == 4);
  CHECK_FALSE(s->is_null(walks[0].word));
  CHECK(s->classes_equal_unoriented(walks[0].word, W("a1 b1 A1 B1")));
  auto nb = d.neighborhood_boundary_words();
  REQUIRE(nb.size() == 1);
  CHECK(s->classes_equal_unoriented(nb[0], W("a1 b1 A1 B1")));
}

TEST_CASE("boundary circles of a crossing-free curve come in mirror pairs") {
  auto s = make_surface(2);
  Diagram d(s, {W("a1")});
  d.tauten();
  CHECK(d.faces().empty());
  auto nb = d.neighborhood_boundary_words();
  REQUIRE(nb.size() == 2);
  CHECK(s->classes_equal(nb[0], W("a1")));
  CHECK(s->classes_equal(nb[1], W("A1")));
}

TEST_CASE("cutting along core systems yields the expected pieces") {
  auto s = make_surface(2);

  auto one = cut_profile(s, {W("a1")});
  REQUIRE(one.size() == 1);
  CHECK(one[0].genus == 1);
  CHECK(one[0].boundaries == 2);
  CHECK(one[0].boundary_curves == std::vector<int>{0, 0});

  auto split = cut_profile(s, {W("a1 b1 A1 B1")});
  REQUIRE(split.size() == 2);
  for (const auto& p : split) {
    CHECK(p.genus == 1);
    CHECK(p.boundaries == 1);
    CHECK(p.boundary_curves == std::vector<int>{0});
  }

  auto planar = cut_profile(s, {W("a1"), W("a2")});
  REQUIRE(planar.size() == 1);
  CHECK(planar[0].genus == 0);
  CHECK(planar[0].boundaries == 4);

  auto whole = cut_profile(s, {});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].genus == 2);
  CHECK(whole[0].boundaries == 0);

  auto s3 = make_surface(3);
  auto uneven = cut_profile(s3, {W("a1 b1 A1 B1")});
  REQUIRE(uneven.size() == 2);
  CHECK(uneven[0].genus == 1);
  CHECK(uneven[1].genus == 2);
  CHECK(uneven[0].boundaries == 1);
  CHECK(uneven[1].boundaries == 1);

  CHECK_THROWS_AS(cut_profile(s, {W("a1"), W("b1")}), NotDisjoint);
  CHECK_THROWS_AS(cut_profile(s, {W("a1 a1")}), NotSimple);
}

TEST_CASE("taut positions are reproducible") {
  auto s = make_surface(2);
  auto run = [&] {
    Diagram d(s, {W("a1 b1 b1"), W("a1")});
    d.tauten();
    auto xs = d.crossings_of_pair(0, 1);
    std::vector<int> flat;
    for (const auto& x : xs) {
      flat.push_back(x.a_arc);
      flat.push_back(x.a_rank);
      flat.push_back(x.b_arc);
      flat.push_back(x.sign);
    }
    flat.push_back(static_cast<int>(d.word(0).size()));
    return flat;
  };
  CHECK(run() == run());
}
