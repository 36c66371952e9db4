#include <doctest.h>

#include <algorithm>
#include <random>

#include "gerst/lattice.hpp"
#include "support.hpp"

using namespace gerst;
using gerst::testing::brute_standard_monomials;

namespace {

MonomialIdeal ideal2(std::vector<Point> gens) { return MonomialIdeal(2, std::move(gens)); }

// Staircase gluing ideals.
const std::vector<Point> kI = {{5, 0}, {4, 1}, {2, 3}, {1, 4}, {0, 5}};
const std::vector<Point> kJ = {{7, 0}, {6, 1}, {3, 3}, {2, 4}, {0, 5}};
const std::vector<Point> kK = {{0, 3}, {2, 2}, {3, 1}, {4, 0}};
const std::vector<Point> kL = {{1, 3}, {4, 2}, {5, 1}, {6, 0}};

MonomialIdeal axis_split_I() {
  const MonomialIdeal x12(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const MonomialIdeal x34(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  return x12 * x12 + x34;
}

MonomialIdeal axis_split_J() {
  const MonomialIdeal x12(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const MonomialIdeal x34(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  return x34 * x34 + x12;
}

}  // namespace

TEST_CASE("diagram_from_ideal") {
  SUBCASE("maximal ideal") {
    const auto d = diagram_from_ideal(ideal2({{1, 0}, {0, 1}}));
    CHECK(d.boxes().boxes() == std::vector<Point>{{0, 0}});
  }
  SUBCASE("staircase ideal matches brute force and row profile") {
    const auto d = diagram_from_ideal(ideal2(kI));
    CHECK(d.boxes().boxes() == brute_standard_monomials(kI, 2, 10) );
    CHECK(d.size() == 16);
    CHECK(gerst::testing::row_lengths(d) == std::vector<int>{5, 4, 4, 2, 1});
  }
  SUBCASE("four variables") {
    const auto d = diagram_from_ideal(axis_split_I());
    const auto oracle = brute_standard_monomials(axis_split_I().generators(), 4, 3);
    CHECK(d.boxes().boxes() == oracle);
    CHECK(d.boxes().boxes() == std::vector<Point>{{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  }
  SUBCASE("infinite quotient") {
    CHECK_THROWS_AS(diagram_from_ideal(ideal2({{1, 1}})), Error);
    try {
      diagram_from_ideal(ideal2({{2, 0}, {1, 1}}));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteQuotient);
    }
  }
  SUBCASE("unit ideal") { CHECK(diagram_from_ideal(ideal2({{0, 0}})).empty()); }
}

TEST_CASE("ideal_from_diagram") {
  CHECK(ideal_from_diagram(YoungDiagram(BoxSet(2, {{0, 0}}))).generators() ==
        std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(ideal_from_diagram(YoungDiagram(3)).generators() == std::vector<Point>{{0, 0, 0}});
  const auto d = diagram_from_ideal(ideal2(kI));
  auto expected = kI;
  std::sort(expected.begin(), expected.end());
  CHECK(ideal_from_diagram(d).generators() == expected);
}

TEST_CASE("monomial ideal keeps a minimal antichain") {
  const MonomialIdeal i(2, {{2, 0}, {3, 0}, {0, 1}, {2, 1}});
  CHECK(i.generators() == std::vector<Point>{{0, 1}, {2, 0}});
  CHECK(i.is_cofinite());
  CHECK_FALSE(MonomialIdeal(2, {{2, 0}, {1, 1}}).is_cofinite());
}

TEST_CASE("round trip over every partition up to 30 boxes") {
  int checked = 0;
  for (int total = 0; total <= 30; ++total) {
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    gerst::testing::partitions(total, total, prefix, parts);
    for (const auto& rows : parts) {
      const auto d = gerst::testing::diagram_from_row_lengths(rows);
      const auto ideal = ideal_from_diagram(d);
      REQUIRE(diagram_from_ideal(ideal) == d);
      // Oracle: minimal elements of the complement inside a padded box.
      const int side = total + 2;
      std::vector<Point> outside;
      for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
          if (!d.contains({x, y})) outside.push_back({x, y});
        }
      }
      std::vector<Point> minimal;
      for (const auto& a : outside) {
        const bool covered = std::any_of(outside.begin(), outside.end(),
                                         [&](const Point& b) { return b != a && dominated(b, a); });
        if (!covered) minimal.push_back(a);
      }
      std::sort(minimal.begin(), minimal.end());
      REQUIRE(ideal.generators() == minimal);
      ++checked;
    }
  }
  CHECK(checked == 28629);  // sum of p(k) for k <= 30
}

TEST_CASE("round trip on random diagrams in dimensions 3 and 4") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 2;
    const auto d = gerst::testing::random_diagram(rng, n, 4, 1 + trial % 4, 30);
    const auto ideal = ideal_from_diagram(d);
    REQUIRE(diagram_from_ideal(ideal) == d);
    for (const auto& g : ideal.generators()) {
      for (const auto& h : ideal.generators()) REQUIRE((g == h || !dominated(g, h)));
    }
  }
}

TEST_CASE("order_ideal") {
  CHECK(order_ideal(BoxSet(3)).empty());
  CHECK(order_ideal(BoxSet(3, {{1, 1, 0}})).boxes().boxes() ==
        std::vector<Point>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}});
  const auto right = order_ideal(BoxSet(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  // Oracle: cube points below one of the tops.
  std::vector<Point> oracle;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z)
        if ((y == 0 && z == 0) || (x == 0 && z == 0) || (x == 0 && y == 0)) oracle.push_back({x, y, z});
  std::sort(oracle.begin(), oracle.end());
  CHECK(right.boxes().boxes() == oracle);
  CHECK(right.size() == 7);
}

TEST_CASE("order_ideal is a closure operator") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> a, b;
    for (int k = 0; k < 4; ++k) a.push_back({coord(rng), coord(rng), coord(rng)});
    b = a;
    b.push_back({coord(rng), coord(rng), coord(rng)});
    const BoxSet sa(3, a), sb(3, b);
    const auto ca = order_ideal(sa);
    CHECK(sa.is_subset_of(ca.boxes()));
    CHECK(order_ideal(ca.boxes()) == ca);
    CHECK(ca.is_subset_of(order_ideal(sb)));
  }
}

TEST_CASE("skew_difference") {
  const YoungDiagram tri(BoxSet(2, {{0, 0}, {1, 0}, {0, 1}}));
  const YoungDiagram dot(BoxSet(2, {{0, 0}}));
  CHECK(skew_difference(tri, tri).empty());
  CHECK(skew_difference(tri, dot).boxes().boxes() == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(skew_difference(dot, tri), Error);

  const auto lambda = diagram_from_ideal(ideal2(kI));
  const auto inner = diagram_from_ideal(ideal2(kK));
  const auto nu = skew_difference(lambda, inner);
  // Oracle: set difference of the brute-force standard monomial lists.
  const auto a = brute_standard_monomials(kI, 2, 10);
  const auto b = brute_standard_monomials(kK, 2, 10);
  std::vector<Point> diff;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  CHECK(nu.boxes().boxes() == diff);
  CHECK(nu.size() == 7);
}

TEST_CASE("skew shapes must be convex") {
  CHECK(is_skew(BoxSet(2, {{0, 0}, {1, 1}})) == false);
  CHECK(is_skew(BoxSet(2, {{1, 0}, {0, 1}})));
  CHECK_THROWS_AS(SkewShape(BoxSet(2, {{0, 0}, {2, 0}})), Error);
}

TEST_CASE("connected_components") {
  SUBCASE("single box") {
    CHECK(connected_components(SkewShape(BoxSet(2, {{3, 4}}))).size() == 1);
  }
  SUBCASE("incomparable boxes with no common bound") {
    const auto comps = connected_components(SkewShape(BoxSet(2, {{1, 0}, {0, 1}})));
    CHECK(comps.size() == 2);
  }
  SUBCASE("staircase example") {
    const auto nu = skew_difference(diagram_from_ideal(ideal2(kI)), diagram_from_ideal(ideal2(kK)));
    const auto comps = connected_components(nu);
    REQUIRE(comps.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 3});
    CHECK(comps[0].boxes().boxes() == std::vector<Point>{{0, 3}, {0, 4}, {1, 3}});
  }
  SUBCASE("strict pairwise joinability fails on the staircase example") {
    // (1,3) and (0,4) are joined only through (0,3), a common lower bound.
    const auto nu = skew_difference(diagram_from_ideal(ideal2(kI)), diagram_from_ideal(ideal2(kK)));
    try {
      connected_components(nu, JoinabilityCheck::StrictPairwise);
      FAIL("expected NonTransitiveJoinability");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonTransitiveJoinability);
    }
    const auto bad = non_joinable_pair(BoxSet(2, {{0, 3}, {1, 3}, {0, 4}}));
    REQUIRE(bad);
    CHECK(bad->first == Point{0, 4});
    CHECK(bad->second == Point{1, 3});
  }
}

TEST_CASE("connected_components partitions random skew shapes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    const auto outer = gerst::testing::random_diagram(rng, n, 5, 4, 60);
    const auto inner = diagram_intersection(outer, gerst::testing::random_diagram(rng, n, 5, 3, 60));
    const auto shape = skew_difference(outer, inner);
    const auto comps = connected_components(shape);
    std::vector<Point> all;
    for (const auto& c : comps) {
      CHECK(is_connected(c.boxes()));
      all.insert(all.end(), c.boxes().begin(), c.boxes().end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == shape.boxes().boxes());
    // Distinct components never share an upper bound in the shape.
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        for (const auto& a : comps[i].boxes()) {
          for (const auto& b : comps[j].boxes()) {
            const bool joined = std::any_of(shape.boxes().begin(), shape.boxes().end(), [&](const Point& c) {
              return dominated(a, c) && dominated(b, c);
            });
            REQUIRE_FALSE(joined);
          }
        }
      }
    }
  }
}

TEST_CASE("normalize and translation_match") {
  auto n1 = normalize(SkewShape(BoxSet(2, {{3, 4}})));
  CHECK(n1.shape.boxes().boxes() == std::vector<Point>{{0, 0}});
  CHECK(n1.offset == Point{3, 4});

  auto n2 = normalize(SkewShape(BoxSet(2, {{1, 2}, {1, 3}, {2, 2}})));
  CHECK(n2.shape.boxes().boxes() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(n2.offset == Point{1, 2});

  auto n3 = normalize(SkewShape(BoxSet(3, {{2, 5, 1}, {2, 5, 2}})));
  CHECK(n3.shape.boxes().boxes() == std::vector<Point>{{0, 0, 0}, {0, 0, 1}});
  CHECK(n3.offset == Point{2, 5, 1});

  CHECK_THROWS_AS(normalize(SkewShape(2)), Error);

  const AbstractSkewShape vertical(BoxSet(2, {{0, 0}, {0, 1}}));
  const AbstractSkewShape horizontal(BoxSet(2, {{0, 0}, {1, 0}}));
  CHECK(translation_match(vertical, vertical));
  CHECK_FALSE(translation_match(vertical, horizontal));

  // The three-box component sits in both diagrams of the staircase example.
  const auto in_lambda = skew_difference(diagram_from_ideal(ideal2(kI)), diagram_from_ideal(ideal2(kK)));
  const auto in_mu = skew_difference(diagram_from_ideal(ideal2(kJ)), diagram_from_ideal(ideal2(kL) + ideal2(kJ)));
  const auto cl = connected_components(in_lambda);
  const auto cm = connected_components(in_mu);
  REQUIRE(cl.size() == 3);
  REQUIRE(cm.size() == 3);
  const auto a = normalize(cl[0]);
  const auto b = normalize(cm[0]);
  CHECK(translation_match(a.shape, b.shape));
  CHECK(a.offset == Point{0, 3});
  CHECK(b.offset == Point{1, 3});
}

TEST_CASE("height maps") {
  const auto h1 = heights_from_diagram(YoungDiagram(BoxSet(3, {{0, 0, 0}})));
  CHECK(h1(0, 0) == 1);
  CHECK(h1(1, 0) == 0);
  const auto h2 = heights_from_diagram(order_ideal(BoxSet(3, {{0, 0, 2}})));
  CHECK(h2(0, 0) == 3);
  CHECK(h2.total() == 3);
  CHECK_THROWS_AS(HeightMap::from_rows({{1, 2}}), Error);
  CHECK_THROWS_AS(HeightMap::from_rows({{1}, {2}}), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = gerst::testing::random_diagram(rng, 3, 4, 3, 64);
    const auto h = heights_from_diagram(d);
    CHECK(diagram_from_heights(h) == d);
    CHECK(heights_from_diagram(diagram_from_heights(h)) == h);
  }
}

TEST_CASE("intersection and union counts") {
  const auto lambda = diagram_from_ideal(ideal2(kI));
  const auto mu = diagram_from_ideal(ideal2(kJ));
  CHECK(diagram_intersection(lambda, lambda) == lambda);
  CHECK(count(YoungDiagram(2)) == 0);
  CHECK(count(diagram_intersection(lambda, mu)) == 16);
  CHECK(count(mu) == 24);

  const auto l4 = diagram_from_ideal(axis_split_I());
  const auto m4 = diagram_from_ideal(axis_split_J());
  CHECK(diagram_intersection(l4, m4).boxes().boxes() == std::vector<Point>{{0, 0, 0, 0}});
  CHECK(count(diagram_union(l4, m4)) == 5);

  CHECK_THROWS_AS(diagram_intersection(lambda, l4), Error);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gerst::testing::random_diagram(rng, 3, 4, 3, 64);
    const auto b = gerst::testing::random_diagram(rng, 3, 4, 3, 64);
    CHECK(count(a) + count(b) == count(diagram_intersection(a, b)) + count(diagram_union(a, b)));
  }
}

TEST_CASE("box cap") {
  // A 2000 x 2000 staircase quotient exceeds the configured cap.
  CHECK_THROWS_AS(diagram_from_ideal(ideal2({{2000, 0}, {0, 2000}})), Error);
}
