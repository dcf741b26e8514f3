#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "orbitwidth/oracle.hpp"
#include "orbitwidth/reconstruction.hpp"

using namespace orbitwidth;

namespace {
const GroupSpec B2(Family::B, 2);
const GroupSpec B3(Family::B, 3);
const GroupSpec D2(Family::D, 2);

InterlacingPair odd_pair(std::vector<double> inner, std::vector<double> outer) {
  return {InterlacingPair::Parity::odd_extension, std::move(inner),
          std::move(outer)};
}

InterlacingPair even_pair(std::vector<double> inner,
                          std::vector<double> outer) {
  return {InterlacingPair::Parity::even_extension, std::move(inner),
          std::move(outer)};
}
}  // namespace

TEST_CASE("reconstruction: cauchy weights, regular and degenerate") {
  CHECK(solve_cauchy_weights<double>({9}, {25}) == std::vector<double>{16});
  CHECK(solve_cauchy_weights<double>({9, 1}, {25, 4}) ==
        std::vector<double>{10, 9});
  // matched top pair drops out with weight zero
  CHECK(solve_cauchy_weights<double>({25, 1}, {25, 4}) ==
        std::vector<double>{0, 3});
  CHECK(solve_cauchy_weights<double>({25, 25}, {25, 25}) ==
        std::vector<double>{0, 0});
  CHECK_THROWS_AS(solve_cauchy_weights<double>({30}, {25}), NoSolution);
  CHECK_THROWS_AS(solve_cauchy_weights<double>({9, 1}, {25}), InvalidInput);
}

TEST_CASE("reconstruction: cauchy weights are exact on rationals") {
  const std::vector<Rational> a{4, 1};
  const std::vector<Rational> b{9, 2};
  const auto w = solve_cauchy_weights(a, b);
  CHECK(w == std::vector<Rational>{Rational(10, 3), Rational(8, 3)});
  // trace identity: sum w = sum b^2 - sum a^2
  CHECK(w[0] + w[1] == Rational(6));
}

TEST_CASE("reconstruction: odd extension realizes the target spectrum") {
  const BorderSolution one = extend_odd(odd_pair({3}, {5}));
  CHECK(one.y == std::vector<double>{4, 0});
  CHECK(one.circle_norms == std::vector<double>{16});
  CHECK(char_poly(assemble_bordered(odd_pair({3}, {5}), one.y)) ==
        std::vector<double>{1, 0, 25, 0});

  const BorderSolution two = extend_odd(odd_pair({3, 1}, {5, 2}));
  CHECK(two.circle_norms == std::vector<double>{10, 9});
  CHECK(two.y[1] == 0.0);
  CHECK(two.y[3] == 0.0);
  const auto cp = char_poly(assemble_bordered(odd_pair({3, 1}, {5, 2}), two.y));
  const std::vector<double> expected{1, 0, 29, 0, 100, 0};
  CHECK(char_poly_residual(cp, expected) <= 1e-14);

  // negative inner values enter through their squares
  const BorderSolution neg = extend_odd(odd_pair({-3}, {5}));
  CHECK(neg.circle_norms == std::vector<double>{16});

  CHECK_THROWS_AS(extend_odd(odd_pair({6}, {5})), NoSolution);
  CHECK_THROWS_AS(extend_odd(even_pair({3}, {5, 2})), InvalidInput);
  CHECK_THROWS_AS(extend_odd(odd_pair({3}, {5}), {0.1, 0.2}), InvalidInput);
}

TEST_CASE("reconstruction: gauge angles rotate circles without moving norms") {
  const auto plain = extend_odd(odd_pair({3, 1}, {5, 2}));
  const auto turned = extend_odd(odd_pair({3, 1}, {5, 2}), {0.7, -1.2});
  CHECK(turned.circle_norms == plain.circle_norms);
  CHECK(turned.y[0] * turned.y[0] + turned.y[1] * turned.y[1] ==
        doctest::Approx(10.0).epsilon(1e-12));
  CHECK(turned.y[2] * turned.y[2] + turned.y[3] * turned.y[3] ==
        doctest::Approx(9.0).epsilon(1e-12));
  CHECK(turned.y != plain.y);
  const auto cp =
      char_poly(assemble_bordered(odd_pair({3, 1}, {5, 2}), turned.y));
  CHECK(char_poly_residual(cp, {1, 0, 29, 0, 100, 0}) <= 1e-12);
}

TEST_CASE("reconstruction: arrow inverse eigenvalue problem") {
  const ArrowSolution sol = arrow_matrix_solve({2, 0, -2}, {3, 1, -1, -3});
  CHECK(sol.norms_sq == std::vector<double>{1.875, 2.25, 1.875});
  CHECK(sol.tip == 0.0);

  const Eigen::MatrixXd arrow = assemble_arrow({2, 0, -2}, sol.norms_sq, sol.tip);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(arrow);
  const std::vector<double> mu{-3, -1, 1, 3};  // ascending
  for (int i = 0; i < 4; ++i)
    CHECK(es.eigenvalues()(i) == doctest::Approx(mu[i]).epsilon(1e-12));

  CHECK_THROWS_AS(arrow_matrix_solve({2, 0}, {3, 1}), InvalidInput);
  CHECK_THROWS_AS(arrow_matrix_solve({4, 0, -2}, {3, 1, -1, -3}), NoSolution);
}

TEST_CASE("reconstruction: even extension fixes the pfaffian sign") {
  const BorderSolution sol = extend_even(even_pair({2}, {3, 1}));
  REQUIRE(sol.y.size() == 3);
  CHECK(sol.circle_norms == std::vector<double>{3.75});
  CHECK(sol.y[0] == doctest::Approx(std::sqrt(3.75)).epsilon(1e-15));
  CHECK(sol.y[1] == 0.0);
  CHECK(sol.y[2] == -1.5);

  const SkewMatrix m = assemble_bordered(even_pair({2}, {3, 1}), sol.y);
  CHECK(char_poly_residual(char_poly(m), {1, 0, 10, 0, 9}) <= 1e-14);
  CHECK(pfaffian(m) == doctest::Approx(3.0).epsilon(1e-12));

  // boundary case: inner value matched by both outer neighbors
  const BorderSolution edge = extend_even(even_pair({1}, {3, 1}));
  const SkewMatrix em = assemble_bordered(even_pair({1}, {3, 1}), edge.y);
  CHECK(char_poly_residual(char_poly(em), {1, 0, 10, 0, 9}) <= 1e-12);
  CHECK(pfaffian(em) == doctest::Approx(3.0).epsilon(1e-10));

  // negative trailing outer value flips the sign of the last entry
  const BorderSolution neg = extend_even(even_pair({2}, {3, -1}));
  CHECK(neg.y[2] == 1.5);
  const SkewMatrix nm = assemble_bordered(even_pair({2}, {3, -1}), neg.y);
  CHECK(pfaffian(nm) == doctest::Approx(-3.0).epsilon(1e-12));

  CHECK_THROWS_AS(extend_even(even_pair({2}, {3, 2.5})), NoSolution);
  CHECK_THROWS_AS(extend_even(odd_pair({2}, {3})), InvalidInput);
}

TEST_CASE("reconstruction: even extension trivial and rank-one paths") {
  const BorderSolution triv = extend_even(even_pair({6}, {6, 1}));
  CHECK(triv.y == std::vector<double>{0, 0, -1});
  const SkewMatrix m = assemble_bordered(even_pair({6}, {6, 1}), triv.y);
  CHECK(m.mat() == embed_lambda(WeylPoint(D2, {6, 1})).mat());

  const BorderSolution first = extend_even(even_pair({}, {5}));
  CHECK(first.y == std::vector<double>{-5});
  CHECK(spectrum_to_chamber(assemble_bordered(even_pair({}, {5}), first.y))
            .values == std::vector<double>{5});
}

TEST_CASE("reconstruction: vertex pattern rebuilds the canonical embedding") {
  for (const auto& [group, coords] :
       std::vector<std::pair<GroupSpec, std::vector<double>>>{
           {B2, {6, 1}}, {B3, {5, 3, 1}}, {D2, {6, 1}}}) {
    const WeylPoint lam(group, coords);
    const GTPattern vertex = pattern_of_lambda(group, lam);
    const SkewMatrix built = build_orbit_point(group, lam, vertex);
    CHECK(built.mat() == embed_lambda(lam).mat());
  }
}

TEST_CASE("reconstruction: random pattern roundtrip with gauges") {
  const WeylPoint lam(B3, {5, 3, 1});
  const GTPattern p = sample_valid_pattern(B3, lam, 424242);
  const std::map<int, std::vector<double>> gauges{
      {3, {0.4}}, {4, {1.1}}, {5, {-0.3, 0.8}}, {6, {2.0, -1.4}},
      {7, {0.5, 0.6, -2.2}}};

  const ReconstructionReport rep = build_orbit_point_report(B3, lam, p, gauges);
  CHECK(rep.charpoly_residual <= 1e-9);
  REQUIRE(rep.per_level_residuals.size() == 5);
  for (double r : rep.per_level_residuals) CHECK(r <= 1e-9);

  const GTPattern back = gt_map(rep.matrix, B3);
  for (const auto& [level, row] : p.rows)
    for (size_t j = 0; j < row.size(); ++j)
      CHECK(back.rows.at(level)[j] ==
            doctest::Approx(row[j]).epsilon(1e-8));

  // same pattern, no gauges: different matrix, same pattern values
  const SkewMatrix plain = build_orbit_point(B3, lam, p);
  CHECK((plain.mat() - rep.matrix.mat()).cwiseAbs().maxCoeff() > 1e-3);
  const GTPattern back2 = gt_map(plain, B3);
  for (const auto& [level, row] : p.rows)
    for (size_t j = 0; j < row.size(); ++j)
      CHECK(back2.rows.at(level)[j] ==
            doctest::Approx(row[j]).epsilon(1e-8));
}

TEST_CASE("reconstruction: input checking") {
  const WeylPoint lam(B2, {6, 1});
  const GTPattern vertex = pattern_of_lambda(B2, lam);
  CHECK_THROWS_AS(build_orbit_point(D2, WeylPoint(D2, {6, 1}), vertex),
                  InvalidInput);
  CHECK_THROWS_AS(build_orbit_point(B2, WeylPoint(B2, {6, 2}), vertex),
                  InvalidInput);

  GTPattern bad = vertex;
  bad.rows[2] = {7.5};  // above its upper bound x3_1 = 6
  CHECK_THROWS_AS(build_orbit_point(B2, lam, bad), NoSolution);
}
