#include <doctest.h>

#include <vector>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/root_system.hpp"

using namespace orbitwidth;

namespace {
const GroupSpec B1(Family::B, 1);
const GroupSpec B2(Family::B, 2);
const GroupSpec D2(Family::D, 2);
const GroupSpec D3(Family::D, 3);

GTPattern b2_pattern(double x2, double x3, double x41, double x42) {
  GTPattern p{B2, {6, 1}, {}};
  p.rows[2] = {x2};
  p.rows[3] = {x3};
  p.rows[4] = {x41, x42};
  return p;
}
}  // namespace

TEST_CASE("gt_pattern: shape, indexing, names") {
  const GTPattern p = pattern_of_lambda(B2, WeylPoint(B2, {6, 1}));
  CHECK(p.top_level() == 5);
  CHECK(p.coordinate_count() == 4);
  CHECK(p.rows.at(2) == std::vector<double>{6});
  CHECK(p.rows.at(3) == std::vector<double>{6});
  CHECK(p.rows.at(4) == std::vector<double>{6, 1});
  CHECK(p.value_at(5, 2) == 1.0);
  CHECK(p.coordinate_index(2, 1) == 0);
  CHECK(p.coordinate_index(4, 2) == 3);
  CHECK(GTPattern::coordinate_name(4, 2) == "x4_2");
  CHECK_NOTHROW(p.check_shape());

  CHECK(pattern_of_lambda(D3, WeylPoint(D3, {5, 3, 1})).coordinate_count() ==
        6);
  CHECK_THROWS_AS(pattern_of_lambda(B2, WeylPoint(B2, {1, 6})), InvalidInput);

  GTPattern broken = p;
  broken.rows.erase(3);
  CHECK_THROWS_AS(broken.check_shape(), InvalidInput);
  CHECK_THROWS_AS(validate_pattern(broken, 0.0), InvalidInput);
}

TEST_CASE("gt_pattern: interlacing validation") {
  CHECK(validate_pattern(b2_pattern(-4, 4, 5, 0), 0.0).empty());
  CHECK(validate_pattern(b2_pattern(1, 6, 6, -1), 0.0).empty());

  const auto violations = validate_pattern(b2_pattern(-5, 4, 5, 0), 0.0);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].level == 2);
  CHECK(violations[0].position == 1);
  CHECK(violations[0].amount == 1.0);
  CHECK(violations[0].description == "x3_1 >= |x2_1| fails: 4 < 5");

  // slack forgives a small overshoot
  CHECK(validate_pattern(b2_pattern(-4.0000001, 4, 5, 0), 1e-6).empty());
  CHECK(!validate_pattern(b2_pattern(-4.0000001, 4, 5, 0), 0.0).empty());

  // upper chain: x4_1 above lambda_1
  const auto high = validate_pattern(b2_pattern(1, 6, 6.5, 0), 0.0);
  REQUIRE(high.size() == 1);
  CHECK(high[0].level == 4);
  CHECK(high[0].position == 1);
  CHECK(high[0].amount == 0.5);
}

TEST_CASE("gt_pattern: edge table at a regular vertex of B2") {
  const WeylPoint lam(B2, {6, 1});
  const auto edges = enumerate_edges_at_lambda(B2, lam);
  REQUIRE(edges.size() == 4);

  CHECK(edges[0].name() == "E(2,1)");
  CHECK(edges[0].lattice_length == 12.0);
  CHECK(edges[0].weight == std::vector<int>{1, 0, 0, 0});
  CHECK(edges[0].endpoint_low == -6.0);
  CHECK(edges[0].endpoint_high == 6.0);

  CHECK(edges[1].name() == "E(4,1)");
  CHECK(edges[1].lattice_length == 5.0);
  CHECK(edges[1].weight == std::vector<int>{1, 1, 1, 0});
  CHECK(edges[1].endpoint_low == 1.0);

  CHECK(edges[2].name() == "E(4,2)");
  CHECK(edges[2].lattice_length == 2.0);
  CHECK(edges[2].weight == std::vector<int>{0, 0, 0, 1});

  CHECK(edges[3].name() == "F(3,1)");
  CHECK(edges[3].lattice_length == 5.0);
  CHECK(edges[3].weight == std::vector<int>{1, 1, 0, 0});
  for (const auto& e : edges) CHECK_FALSE(e.subset_of_edge);
}

TEST_CASE("gt_pattern: D corner edge is only a subset of a polytope edge") {
  const auto edges = enumerate_edges_at_lambda(D2, WeylPoint(D2, {4, 1}));
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].name() == "E(2,1)");
  CHECK(edges[0].lattice_length == 8.0);
  CHECK_FALSE(edges[0].subset_of_edge);
  CHECK(edges[1].name() == "F(3,1)");
  CHECK(edges[1].lattice_length == 3.0);
  CHECK(edges[1].endpoint_low == 1.0);
  CHECK(edges[1].endpoint_high == 4.0);
  CHECK(edges[1].subset_of_edge);

  // negative last coordinate enters through its absolute value
  const auto neg = enumerate_edges_at_lambda(D2, WeylPoint(D2, {4, -1}));
  CHECK(neg[1].lattice_length == 3.0);
  CHECK(neg[1].endpoint_low == 1.0);
}

TEST_CASE("gt_pattern: rank one has the single doubled edge") {
  const auto edges = enumerate_edges_at_lambda(B1, WeylPoint(B1, {5}));
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].name() == "E(2,1)");
  CHECK(edges[0].lattice_length == 10.0);
  CHECK(edges[0].weight == std::vector<int>{1});
}

TEST_CASE("gt_pattern: points along an edge stay valid patterns") {
  const WeylPoint lam(B2, {6, 1});
  const auto edges = enumerate_edges_at_lambda(B2, lam);
  const GTPattern mid = edge_point(edges[0], lam, 0.5);
  CHECK(mid.rows.at(2) == std::vector<double>{0});
  CHECK(mid.rows.at(3) == std::vector<double>{6});
  CHECK(validate_pattern(mid, 0.0).empty());

  const GTPattern far = edge_point(edges[0], lam, 1.0);
  CHECK(far.rows.at(2) == std::vector<double>{-6});
  CHECK(validate_pattern(far, 0.0).empty());

  const GTPattern moved = edge_point(edges[1], lam, 1.0);
  CHECK(moved.rows.at(2) == std::vector<double>{1});
  CHECK(moved.rows.at(3) == std::vector<double>{1});
  CHECK(moved.rows.at(4) == std::vector<double>{1, 1});
  CHECK(validate_pattern(moved, 0.0).empty());

  CHECK_THROWS_AS(edge_point(edges[0], lam, 1.5), InvalidInput);
  CHECK_THROWS_AS(edge_point(edges[0], lam, -0.1), InvalidInput);
}

TEST_CASE("gt_pattern: edges require a regular point") {
  CHECK_THROWS_AS(enumerate_edges_at_lambda(GroupSpec(Family::B, 3),
                                            WeylPoint(GroupSpec(Family::B, 3),
                                                      {4, 4, 1})),
                  InvalidInput);
}

TEST_CASE("gt_pattern: exact edge minimum equals exact pairing minimum") {
  const std::vector<Rational> b{Rational(13, 3), Rational(4), Rational(1, 7)};
  CHECK(min_edge_length_t(GroupSpec(Family::B, 3), b) ==
        min_coroot_pairing_t(GroupSpec(Family::B, 3), b, false));
  const std::vector<Rational> d{Rational(9), Rational(7, 2), Rational(-2)};
  CHECK(min_edge_length_t(D3, d) == min_coroot_pairing_t(D3, d, false));
  CHECK(min_edge_length_t(D3, d) == Rational(3, 2));
}
