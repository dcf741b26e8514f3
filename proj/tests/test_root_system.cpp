#include <doctest.h>

#include <algorithm>

#include "orbitwidth/root_system.hpp"

using namespace orbitwidth;

namespace {
const GroupSpec B2(Family::B, 2);
const GroupSpec B3(Family::B, 3);
const GroupSpec D2(Family::D, 2);
const GroupSpec D3(Family::D, 3);
const GroupSpec D4(Family::D, 4);
}  // namespace

TEST_CASE("root_system: B2 coroot enumeration order and pairings at (6,1)") {
  const auto coroots = positive_coroots(B2);
  REQUIRE(coroots.size() == 4);
  CHECK(coroots[0].name() == "e1");
  CHECK(coroots[1].name() == "e2");
  CHECK(coroots[2].name() == "e1+e2");
  CHECK(coroots[3].name() == "e1-e2");
  const auto pairings = coroot_pairings(B2, WeylPoint(B2, {6, 1}));
  REQUIRE(pairings.size() == 4);
  CHECK(pairings[0].second == 12.0);
  CHECK(pairings[1].second == 2.0);
  CHECK(pairings[2].second == 7.0);
  CHECK(pairings[3].second == 5.0);
}

TEST_CASE("root_system: coroot counts are n^2 and n(n-1)") {
  CHECK(positive_coroots(B2).size() == 4);
  CHECK(positive_coroots(B3).size() == 9);
  CHECK(positive_coroots(GroupSpec(Family::B, 4)).size() == 16);
  CHECK(positive_coroots(D2).size() == 2);
  CHECK(positive_coroots(D3).size() == 6);
  CHECK(positive_coroots(D4).size() == 12);
}

TEST_CASE("root_system: B3 pairing multiset at (4,2,1)") {
  auto values = coroot_pairing_values(B3, std::vector<double>{4, 2, 1});
  std::vector<double> expected{8, 4, 2, 2, 1, 3, 6, 5, 3};
  std::sort(values.begin(), values.end());
  std::sort(expected.begin(), expected.end());
  CHECK(values == expected);
}

TEST_CASE("root_system: minimum pairings") {
  CHECK(min_coroot_pairing(B3, WeylPoint(B3, {4, 2, 1})) == 1.0);
  CHECK(min_coroot_pairing(D3, WeylPoint(D3, {5, 3, 1})) == 2.0);
  CHECK(min_coroot_pairing(B2, WeylPoint(B2, {6, 1})) == 2.0);
  // D pairings are lambda_j +- lambda_k; a negative last coordinate flips
  // which of the pair is smaller but not the minimum's value here.
  CHECK(min_coroot_pairing(D3, WeylPoint(D3, {5, 3, -1})) == 2.0);
}

TEST_CASE("root_system: minimum pairing rejects points outside the chamber") {
  CHECK_THROWS_AS(min_coroot_pairing(B2, WeylPoint(B2, {1, 6})), InvalidInput);
  CHECK_THROWS_AS(min_coroot_pairing(B2, WeylPoint(B2, {0, 0})), InvalidInput);
}

TEST_CASE("root_system: positive_only skips the vanishing pairings") {
  CHECK(min_coroot_pairing(B3, WeylPoint(B3, {4, 4, 1}), true) == 2.0);
  // With zeros present the unsigned minimum is degenerate.
  CHECK_THROWS_AS(min_coroot_pairing(B3, WeylPoint(B3, {4, 4, 1}), false),
                  InvalidInput);
}

TEST_CASE("root_system: exact pairing lane matches the double lane") {
  const std::vector<Rational> lam{Rational(9, 2), Rational(2), Rational(1, 3)};
  const auto exact = coroot_pairing_values(B3, lam);
  const auto approx =
      coroot_pairing_values(B3, std::vector<double>{4.5, 2.0, 1.0 / 3.0});
  REQUIRE(exact.size() == approx.size());
  CHECK(exact[0] == Rational(9));
  CHECK(min_coroot_pairing_t(B3, lam, false) == Rational(2, 3));
}

TEST_CASE("root_system: chamber classification") {
  CHECK(chamber_classify(WeylPoint(B2, {6, 1})).kind == ChamberKind::regular);
  CHECK(chamber_classify(WeylPoint(D3, {5, 3, -1})).kind ==
        ChamberKind::regular);
  CHECK(chamber_classify(WeylPoint(D3, {5, 3, 0})).kind ==
        ChamberKind::regular);

  const auto b441 = chamber_classify(WeylPoint(B3, {4, 4, 1}));
  CHECK(b441.kind == ChamberKind::nonregular_single_block);
  CHECK(b441.s == 1);
  CHECK(b441.l == 2);

  // A run touching position n is allowed in B when lambda_n > 0.
  const auto b444 = chamber_classify(WeylPoint(B3, {4, 4, 4}));
  CHECK(b444.kind == ChamberKind::nonregular_single_block);
  CHECK(b444.s == 1);
  CHECK(b444.l == 3);

  const auto d331 = chamber_classify(WeylPoint(D3, {3, 3, 1}));
  CHECK(d331.kind == ChamberKind::nonregular_single_block);
  CHECK(d331.s == 1);
  CHECK(d331.l == 2);

  const auto d4 = chamber_classify(WeylPoint(D4, {7, 5, 5, 2}));
  CHECK(d4.kind == ChamberKind::nonregular_single_block);
  CHECK(d4.s == 2);
  CHECK(d4.l == 2);
}

TEST_CASE("root_system: out-of-scope classifications") {
  CHECK(chamber_classify(WeylPoint(B2, {1, 6})).kind ==
        ChamberKind::outside_scope);
  CHECK(chamber_classify(WeylPoint(B3, {4, 4, 0})).kind ==
        ChamberKind::outside_scope);
  CHECK(chamber_classify(WeylPoint(B2, {6, -1})).kind ==
        ChamberKind::outside_scope);
  // D needs lambda_{n-1} > |lambda_n| strictly, so runs never reach n.
  CHECK(chamber_classify(WeylPoint(D3, {3, 1, 1})).kind ==
        ChamberKind::outside_scope);
  CHECK(chamber_classify(WeylPoint(D3, {3, 1, -1})).kind ==
        ChamberKind::outside_scope);
  CHECK(chamber_classify(WeylPoint(D2, {4, 4})).kind ==
        ChamberKind::outside_scope);
  // two separate equal blocks
  CHECK(chamber_classify(WeylPoint(GroupSpec(Family::B, 5), {5, 5, 3, 3, 1}))
            .kind == ChamberKind::outside_scope);
}

TEST_CASE("root_system: D rank 2 is never a single-block case") {
  CHECK(chamber_classify(WeylPoint(D2, {4, 1})).kind == ChamberKind::regular);
  CHECK(chamber_classify(WeylPoint(D2, {4, -1})).kind == ChamberKind::regular);
  CHECK(chamber_classify(WeylPoint(D2, {4, -4})).kind ==
        ChamberKind::outside_scope);
}

TEST_CASE("root_system: classification slack merges nearby values") {
  const WeylPoint nearly(B2, {6.0, 6.0 - 1e-12});
  CHECK(chamber_classify(nearly).kind == ChamberKind::regular);
  const auto merged = chamber_classify(nearly, 1e-9);
  CHECK(merged.kind == ChamberKind::nonregular_single_block);
  CHECK(merged.s == 1);
  CHECK(merged.l == 2);
}

TEST_CASE("root_system: exact-lane classification agrees") {
  const auto c =
      chamber_classify_t(Family::B, std::vector<Rational>{4, 4, 1});
  CHECK(c.kind == ChamberKind::nonregular_single_block);
  CHECK(c.s == 1);
  CHECK(c.l == 2);
  CHECK(chamber_classify_t(Family::D, std::vector<Rational>{5, 3, -1}).kind ==
        ChamberKind::regular);
  CHECK(chamber_classify_t(Family::D, std::vector<Rational>{3, 1, 1}).kind ==
        ChamberKind::outside_scope);
}
