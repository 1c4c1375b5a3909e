#include <doctest.h>

#include "fixtures.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"
#include "torelli/joints.hpp"

using namespace torelli;

TEST_CASE("classify_curve") {
  auto s = fixtures::g3();
  auto r = classify_curve(fixtures::handle_boundary(s, 0));
  CHECK(r.separating);
  REQUIRE(r.side_genera);
  CHECK(*r.side_genera == std::pair<int, int>{1, 2});
  auto n = classify_curve(fixtures::basis(s, 0));
  CHECK_FALSE(n.separating);
  CHECK_FALSE(n.side_genera);
}

TEST_CASE("separating agrees with null-homologous on the census") {
  auto s = fixtures::g3();
  for (const auto& c : census(s, 14)) CHECK(classify_curve(c).separating == is_null_homologous(c));
}

TEST_CASE("is_bounding_pair") {
  auto s = fixtures::g3();
  auto a1 = fixtures::basis(s, 0);
  CHECK_FALSE(is_bounding_pair(a1, a1));
  CHECK_FALSE(is_bounding_pair(a1, fixtures::basis(s, 1)));
  CHECK_FALSE(is_bounding_pair(a1, fixtures::basis(s, 2)));  // disjoint, not homologous

  auto arms = bounding_pair_arms(a1, 20);
  REQUIRE_FALSE(arms.empty());
  for (const auto& b : arms) {
    auto bp = is_bounding_pair(a1, b);
    REQUIRE(bp);
    CHECK(bp->left.genus + bp->right.genus == s->genus() - 1);
    CHECK(bp->left.boundary_count() == 2);
    CHECK(bp->right.boundary_count() == 2);
    CHECK(cut_along({a1, b}).size() == 2);
  }
}

TEST_CASE("classify_joint") {
  auto s = fixtures::g3();
  auto joints = joint_census(s, 20);
  REQUIRE_FALSE(joints.empty());
  bool saw2 = false;
  for (const auto& j : joints) {
    CHECK(j.k % 2 == 0);
    if (j.k == 2 && !saw2) {
      saw2 = true;
      CHECK(classify_joint(j.base, j.arms[0], j.arms[1]).k == 2);
    }
  }
  CHECK(saw2);
  const auto& b = joints.front().arms[0];
  CHECK_THROWS_AS(classify_joint(joints.front().base, b, b), PreconditionError);
}

TEST_CASE("detect_two_holed_torus") {
  auto s = fixtures::g3();
  CurveClass s1 = fixtures::handle_boundary(s, 0), s3 = fixtures::handle_boundary(s, 2);
  REQUIRE(s1.valid());
  REQUIRE(s3.valid());
  // The complement of the first and third handles is the middle handle.
  auto z = detect_two_holed_torus(s1, s3);
  REQUIRE(z);
  CHECK(z->genus == 1);
  CHECK(z->boundary_count() == 2);
  CHECK_THROWS_AS(detect_two_holed_torus(s1, s1), PreconditionError);
}

TEST_CASE("separating sides and two-holed tori over the census") {
  auto s = fixtures::g4();
  CurveClass s1 = fixtures::handle_boundary(s, 0, 28);
  REQUIRE(s1.valid());
  int tori = 0;
  for (const auto& c : separating_census(s, 20)) {
    if (c == s1 || !are_disjoint(c, s1)) continue;
    auto pieces = cut_along({s1, c});
    REQUIRE(pieces.size() == 3);
    int chi = 0;
    for (auto& p : pieces) chi += p.euler_characteristic;
    CHECK(chi == 2 - 2 * s->genus());
    auto z = detect_two_holed_torus(s1, c);
    for (auto& p : pieces)
      if (p.boundary_count() == 2) CHECK(z.has_value() == (p.genus == 1));
    tori += z.has_value();
  }
  CHECK(tori > 0);
}
