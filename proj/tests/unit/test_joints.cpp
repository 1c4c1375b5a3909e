#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"
#include "torelli/joints.hpp"

using namespace torelli;

namespace {

HomologyVector hom(const LabeledBoundary& b) {
  REQUIRE(b.circle.curve);
  return homology_class(*b.circle.curve);
}

HomologyVector sum(std::initializer_list<std::pair<int, HomologyVector>> terms) {
  HomologyVector out;
  for (const auto& [k, h] : terms) {
    out.resize(h.size(), 0);
    for (size_t i = 0; i < h.size(); ++i) out[i] += k * h[i];
  }
  return out;
}

bool zero(const HomologyVector& h) {
  for (int x : h)
    if (x) return false;
  return true;
}

const std::vector<Joint>& g3_joints() {
  static auto j = joint_census(fixtures::g3(), 24);
  return j;
}

}  // namespace

TEST_CASE("2-joint neighbourhood is a four-holed sphere with the expected homology") {
  int n = 0;
  for (const auto& j : g3_joints()) {
    if (j.k != 2 || n >= 12) continue;
    ++n;
    JointReport r = analyze_two_joint(j);
    CHECK(r.neighborhood.genus == 0);
    CHECK(r.neighborhood.euler_characteristic == -2);
    REQUIRE(r.boundaries.size() == 4);
    for (const auto& b : r.boundaries) CHECK(b.circle.essential);
    auto h11 = hom(r.boundary("D11")), h22 = hom(r.boundary("D22"));
    auto h12 = hom(r.boundary("D12")), h21 = hom(r.boundary("D21"));
    CHECK(zero(h11));
    CHECK(zero(h22));
    HomologyVector a = homology_class({j.base, 1});
    CHECK((h21 == a || h21 == sum({{-1, a}})));
    CHECK(zero(sum({{1, h12}, {1, h21}})));
    CHECK(check_joint_report(r).empty());
    if (r.mediator) {
      CHECK(r.mediator->weight() > 0);
      CHECK(classify_joint(j.base, j.arms[0], *r.mediator).k == 0);
      CHECK(classify_joint(j.base, *r.mediator, j.arms[1]).k == 0);
    }
  }
  CHECK(n == 12);
}

TEST_CASE("4-joint neighbourhood is a six-holed sphere") {
  int type2 = 0;
  for (const auto& j : g3_joints()) {
    if (j.k != 4 || type2 >= 8) continue;
    JointReport r = analyze_four_joint(j);
    CHECK(r.neighborhood.genus == 0);
    CHECK(r.neighborhood.euler_characteristic == -4);
    REQUIRE(r.boundaries.size() == 6);
    if (r.order_type == 1) {
      CHECK(r.outcome == JointOutcome::forbidden_configuration);
      continue;
    }
    REQUIRE(r.order_type == 2);
    ++type2;
    HomologyVector a = homology_class({j.base, 1});
    std::map<std::string, HomologyVector> h;
    for (const auto& b : r.boundaries) h[b.label] = b.circle.curve ? hom(b) : HomologyVector(a.size(), 0);
    CHECK(zero(h["D4"]));
    CHECK(zero(h["D5"]));
    CHECK(zero(sum({{1, h["D1"]}, {1, h["D3"]}, {-1, a}})) != zero(sum({{1, h["D1"]}, {1, h["D3"]}, {1, a}})));
    CHECK(zero(sum({{1, h["D1"]}, {1, h["D3"]}, {1, h["D2"]}, {1, h["D6"]}})));
    CHECK(check_joint_report(r).empty());
  }
  CHECK(type2 == 8);
}

TEST_CASE("analyze_joint rejects odd or large k") {
  for (const auto& j : g3_joints())
    if (j.k == 6) {
      CHECK_THROWS_AS(analyze_joint(j), PreconditionError);
      break;
    }
}

TEST_CASE("0-joints at genus 4 admit common duals") {
  auto s = fixtures::g4();
  auto a = fixtures::basis(s, 0);
  auto arms = bounding_pair_arms(a, 24);
  int done = 0;
  for (size_t i = 0; i < arms.size() && done < 2; ++i)
    for (size_t k = i + 1; k < arms.size() && done < 2; ++k) {
      if (!are_disjoint(arms[i], arms[k])) continue;
      Joint j = classify_joint(a, arms[i], arms[k]);
      auto [j1, j2] = find_common_duals(j);
      for (const auto& x : {a, arms[i], arms[k]}) {
        CHECK(intersection_number(j1, x) == 1);
        CHECK(intersection_number(j2, x) == 1);
      }
      CHECK(are_disjoint(j1, j2));
      CHECK_FALSE(j1 == j2);
      ++done;
    }
  CHECK(done == 2);
}
