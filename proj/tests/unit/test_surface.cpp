#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "torelli/error.hpp"
#include "torelli/subsurface.hpp"

using namespace torelli;

TEST_CASE("fan triangulation has one vertex and the right Euler characteristic") {
  for (int g = 2; g <= 5; ++g) {
    auto s = Surface::build(g);
    CHECK(s->num_triangles() == 4 * g - 2);
    CHECK(s->num_edges() == 6 * g - 3);
    // V - E + F with V = 1
    CHECK(1 - s->num_edges() + s->num_triangles() == 2 - 2 * g);
    for (int h = 0; h < s->num_half_edges(); ++h) {
      CHECK(s->partner(h) != h);
      CHECK(s->partner(s->partner(h)) == h);
    }
  }
}

TEST_CASE("vertex link is a single cycle of corners") {
  auto s = fixtures::g3();
  // Corner at side k of triangle t is followed by the corner across side k.
  std::set<int> seen;
  int h = 0, steps = 0;
  do {
    seen.insert(h);
    int across = s->partner(h);
    h = Surface::half_edge(Surface::triangle_of(across), Surface::side_of(across) + 1);
    ++steps;
  } while (h != 0 && steps < 1000);
  CHECK(static_cast<int>(seen.size()) == s->num_half_edges());
}

TEST_CASE("genus below 2 is rejected") {
  CHECK_THROWS_AS(Surface::build(1), PreconditionError);
  CHECK_THROWS_AS(Surface::build(0), PreconditionError);
}

TEST_CASE("surface hash is stable and genus dependent") {
  CHECK(Surface::build(3)->hash() == fixtures::g3()->hash());
  CHECK(fixtures::g3()->hash() != fixtures::g4()->hash());
}

TEST_CASE("cutting along curves") {
  auto s = fixtures::g3();
  SUBCASE("genus-1 separating curve") {
    auto pieces = cut_along({fixtures::handle_boundary(s, 0)});
    REQUIRE(pieces.size() == 2);
    std::multiset<int> genera{pieces[0].genus, pieces[1].genus};
    CHECK(genera == std::multiset<int>{1, 2});
    for (auto& p : pieces) CHECK(p.boundary_count() == 1);
  }
  SUBCASE("nonseparating curve") {
    auto pieces = cut_along({fixtures::basis(s, 0)});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].genus == 2);
    CHECK(pieces[0].boundary_count() == 2);
  }
  SUBCASE("neighbourhood of one curve is an annulus") {
    auto n = regular_neighborhood({fixtures::basis(s, 3)});
    CHECK(n.genus == 0);
    CHECK(n.boundary_count() == 2);
    CHECK(n.euler_characteristic == 0);
  }
  SUBCASE("neighbourhood of a dual pair is a one-holed torus") {
    auto n = regular_neighborhood({fixtures::basis(s, 0), fixtures::basis(s, 1)});
    CHECK(n.genus == 1);
    CHECK(n.boundary_count() == 1);
    CHECK(n.euler_characteristic == -1);
  }
}
