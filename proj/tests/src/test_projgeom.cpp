#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rdlab/gf.hpp"
#include "rdlab/mvpoly.hpp"
#include "rdlab/projgeom.hpp"

using namespace rdlab;

namespace {

VarietySystem y123_system(const FieldPtr& f, uint32_t n) {
  return VarietySystem::make({MultiPoly::elementary_symmetric(f, n, 1),
                              MultiPoly::elementary_symmetric(f, n, 2),
                              MultiPoly::elementary_symmetric(f, n, 3)});
}

}  // namespace

TEST_CASE("projective sizes") {
  CHECK(projective_size(7, 7) == 137257);
  CHECK(projective_size(7, 2) == 8);
  CHECK(projective_size(2, 3) == 7);   // Fano plane
  CHECK(projective_size(4, 4) == 85);
  CHECK(projective_size(9, 2) == 10);
  CHECK(projective_size(3, 4) == 40);
  CHECK(projective_size(49, 4) == 120100);
}

TEST_CASE("normalization") {
  auto f7 = Field::make(7, 1);
  // 3^{-1} = 5 mod 7, so (3,5) ~ (1,4).
  CHECK(normalize_point(*f7, {3, 5}) == ProjPoint({1, 4}));
  CHECK(normalize_point(*f7, {0, 4}) == ProjPoint({0, 1}));
  CHECK(normalize_point(*f7, {1, 6}) == ProjPoint({1, 6}));
  CHECK_THROWS(normalize_point(*f7, {0, 0}));
  // Scaling invariance across every nonzero scalar.
  for (uint32_t c = 1; c < 7; ++c)
    CHECK(normalize_point(*f7, {f7->mul(c, 2), f7->mul(c, 3), f7->mul(c, 0)}) ==
          normalize_point(*f7, {2, 3, 0}));
}

TEST_CASE("projective enumeration") {
  auto f3 = Field::make(3, 1);
  auto pts = projective_points(f3, 3, 1000);
  CHECK(pts.size() == 13);
  // All canonical, all distinct.
  std::set<ProjPoint> seen(pts.begin(), pts.end());
  CHECK(seen.size() == 13);
  for (const auto& x : pts) {
    CHECK(normalize_point(*f3, x) == x);
    CHECK(x.size() == 3);
  }
  // The enumeration respects the budget.
  CHECK_THROWS_AS(projective_points(f3, 5, 10), BudgetExceeded);
}

TEST_CASE("variety membership and counting") {
  auto f7 = Field::make(7, 1);
  VarietySystem y = y123_system(f7, 7);
  CHECK(y.nvars == 7);
  CHECK(y.degree_product() == 6);

  auto pts = variety_points(y);
  CHECK(pts.size() == 841);
  CHECK(variety_point_count(y) == 841);
  // The vertex (1:1:...:1) lies on Y because C(7,1), C(7,2), C(7,3) are
  // all divisible by 7.
  ProjPoint vertex(7, 1);
  CHECK(y.vanishes_at(vertex));
  CHECK(std::find(pts.begin(), pts.end(), vertex) != pts.end());
  for (const auto& x : pts) CHECK(y.vanishes_at(x));

  // Affine cone size (with origin): 1 + (q-1) * #projective.
  CHECK(1 + 6 * 841 == 5047);
}

TEST_CASE("hyperplane count over F7 in 7 variables") {
  auto f7 = Field::make(7, 1);
  VarietySystem h =
      VarietySystem::make({MultiPoly::elementary_symmetric(f7, 7, 1)});
  CHECK(variety_point_count(h) == 19608);  // (7^6 - 1)/6
}

TEST_CASE("base change preserves rational points") {
  auto f2 = Field::make(2, 1);
  auto f4 = Field::make(2, 2);
  // Conic x1 x3 = x2^2.
  MultiPoly f = MultiPoly::variable(f2, 3, 0) * MultiPoly::variable(f2, 3, 2) -
                MultiPoly::variable(f2, 3, 1).pow(2);
  VarietySystem c = VarietySystem::make({f});
  uint64_t over_f2 = variety_point_count(c);
  CHECK(over_f2 == 3);  // smooth conic has q+1 points
  VarietySystem c4 = c.base_change(f4);
  CHECK(c4.field->size() == 4);
  CHECK(variety_point_count(c4) == 5);
}

TEST_CASE("singular point detection") {
  auto f3 = Field::make(3, 1);
  // Smooth conic in P^2: sum of squares has no singular points over F3.
  MultiPoly x = MultiPoly::variable(f3, 3, 0);
  MultiPoly y = MultiPoly::variable(f3, 3, 1);
  MultiPoly z = MultiPoly::variable(f3, 3, 2);
  CHECK(singular_points(x.pow(2) + y.pow(2) + z.pow(2)).empty());
  // The cuspidal cubic zy^2 = x^3 is singular at (0:0:1).
  auto sing = singular_points(z * y.pow(2) - x.pow(3));
  REQUIRE(sing.size() == 1);
  CHECK(sing[0] == ProjPoint({0, 0, 1}));
  // x1^3 kills its own gradient in characteristic 3: the whole hyperplane
  // x1 = 0 is singular.
  auto bad = singular_points(x.pow(3));
  CHECK(bad.size() == projective_size(3, 2));
}

TEST_CASE("random slices of the hyperplane hit single points") {
  auto f7 = Field::make(7, 1);
  VarietySystem h =
      VarietySystem::make({MultiPoly::elementary_symmetric(f7, 7, 1)});
  SliceStats st = slice_point_count(h, 1, 5, 12345, 1);
  CHECK(st.trials == 5);
  CHECK(st.improper_count == 0);
  CHECK(st.min_count == 1);
  CHECK(st.max_count == 1);
  CHECK(st.histogram.at(1) == 5);
}

TEST_CASE("slice redraw machinery yields a usable system") {
  auto f7 = Field::make(7, 1);
  VarietySystem y = y123_system(f7, 7);
  std::mt19937_64 rng(99);
  VarietySystem sl = random_linear_slice(y, 3, rng);
  CHECK(sl.nvars == 4);  // P^3 worth of parameters
  CHECK(sl.members.size() == 3);
  for (const auto& m : sl.members) {
    CHECK_FALSE(m.is_zero());
    CHECK(m.homogeneous());
  }
}

TEST_CASE("point count growth levels") {
  auto f7 = Field::make(7, 1);
  VarietySystem y = y123_system(f7, 7);
  GrowthResult g = point_count_growth(y, 1);
  REQUIRE(g.levels.size() == 1);
  CHECK(g.truncated_at_m == 0);
  CHECK(g.levels[0].m == 1);
  CHECK(g.levels[0].count == 841);
  CHECK(g.levels[0].dim_estimate == doctest::Approx(std::log(841.0) / std::log(7.0)));

  // A tiny budget truncates rather than throwing.
  GrowthResult t = point_count_growth(y, 2, 200000);
  CHECK(t.truncated_at_m == 2);
  CHECK(t.levels.size() == 1);
}

TEST_CASE("z123 representative count over F7") {
  // Dehomogenized representatives of the quotient construction: the
  // 841 projective points minus the vertex fall into fibers of size 7,
  // 841 = 1 + 7 * 120.
  CHECK((841 - 1) % 7 == 0);
  CHECK((841 - 1) / 7 == 120);
}
