#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"

using namespace torelli;

TEST_CASE("basis curves are a geometric symplectic basis") {
  for (const auto& s : {fixtures::g2(), fixtures::g3()}) {
    auto b = basis_curves(s);
    REQUIRE(static_cast<int>(b.size()) == 2 * s->genus());
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t k = 0; k < b.size(); ++k) {
        bool dual = i / 2 == k / 2 && i != k;
        CHECK(intersection_number(b[i].curve, b[k].curve) == (dual ? 1 : 0));
        int expect = dual ? (i % 2 == 0 ? 1 : -1) : 0;
        CHECK(algebraic_intersection(b[i], b[k]) == expect);
      }
    for (size_t i = 0; i < b.size(); ++i) {
      HomologyVector e(b.size(), 0);
      e[i] = 1;
      CHECK(homology_class(b[i]) == e);
    }
  }
}

TEST_CASE("canonical coordinates") {
  auto s = fixtures::g3();
  auto a1 = fixtures::basis(s, 0);
  CHECK(normalize(s, trace(a1)) == a1);
  CHECK(is_isotopic(a1, a1));
  CHECK_FALSE(is_isotopic(a1, fixtures::basis(s, 1)));

  // Traced strands match the coordinates edge by edge.
  TracedCurve t = trace(a1);
  CHECK(t.coords(*s) == a1.coords());

  // Noncanonical or inessential coordinates are rejected.
  std::vector<int> doubled = a1.coords();
  for (int& x : doubled) x *= 2;
  CHECK_THROWS_AS(CurveClass::from_coords(s, doubled), PreconditionError);
  CHECK_THROWS_AS(CurveClass::from_coords(s, std::vector<int>(s->num_edges(), 0)), PreconditionError);
  CHECK_THROWS_AS(CurveClass::from_coords(s, std::vector<int>(3, 1)), PreconditionError);
}

TEST_CASE("trace and normalize round-trip over the census") {
  auto s = fixtures::g3();
  const auto& cs = census(s, 16);
  REQUIRE(cs.size() > 100);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const auto& c = cs[pick(rng)];
    CHECK(normalize(s, trace(c)) == c);
    CHECK(is_essential(*s, trace(c)));
  }
}

TEST_CASE("census is sorted, duplicate free and weight bounded") {
  auto s = fixtures::g3();
  const auto& cs = census(s, 14);
  for (size_t i = 0; i < cs.size(); ++i) {
    CHECK(cs[i].weight() <= 14);
    if (i) {
      bool ordered = cs[i - 1].weight() < cs[i].weight() ||
                     (cs[i - 1].weight() == cs[i].weight() && cs[i - 1].coords() < cs[i].coords());
      CHECK(ordered);
    }
  }
}

TEST_CASE("homology of separating and bounding-pair curves") {
  auto s = fixtures::g3();
  CurveClass sigma = fixtures::handle_boundary(s, 0);
  REQUIRE(sigma.valid());
  CHECK(is_null_homologous(sigma));
  for (const auto& b : census(s, 20)) {
    if (b == fixtures::basis(s, 0)) continue;
    if (auto bp = is_bounding_pair(fixtures::basis(s, 0), b)) {
      CHECK(homology_class({bp->first, 1}) == homology_class({bp->second, bp->direction}));
    }
  }
}

TEST_CASE("intersection numbers") {
  auto s = fixtures::g3();
  auto a1 = fixtures::basis(s, 0);
  CHECK(intersection_number(a1, fixtures::basis(s, 1)) == 1);
  CHECK(intersection_number(a1, a1) == 0);

  const auto& cs = census(s, 16);
  REQUIRE(cs.size() > 42);
  std::mt19937_64 rng(17);
  int expected = intersection_number(cs[17], cs[42]);
  for (int k = 0; k < 8; ++k) CHECK(oracle::random_order_intersection(cs[17], cs[42], rng) == expected);
  CHECK(geodesic_crossings(cs[17], cs[42]) == expected);

  std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
  for (int k = 0; k < 60; ++k) {
    const auto& a = cs[pick(rng)];
    const auto& b = cs[pick(rng)];
    int i = intersection_number(a, b);
    CHECK(i == intersection_number(b, a));
    CHECK((i == 0) == are_disjoint(a, b));
    OrientedCurve oa{a, 1}, ob{b, 1};
    int alg = algebraic_intersection(oa, ob);
    CHECK(std::abs(alg) <= i);
    CHECK((i - alg) % 2 == 0);
  }
}
