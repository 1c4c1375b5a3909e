#include <doctest.h>

#include "fixtures.hpp"
#include "torelli/error.hpp"
#include "torelli/homology.hpp"
#include "torelli/joints.hpp"

using namespace torelli;

namespace {

HomologyVector unit(int dim, int i) {
  HomologyVector e(dim, 0);
  e[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("transvections") {
  auto s = fixtures::g3();
  auto b = basis_curves(s);
  // <beta_1, alpha_1> = -1
  HomologyVector expect = unit(6, 1);
  expect[0] = -1;
  CHECK(transvection(unit(6, 1), b[0]) == expect);
  CHECK(transvection(unit(6, 0), b[0]) == unit(6, 0));
  CHECK(transvection(unit(6, 2), b[0]) == unit(6, 2));

  OrientedCurve sigma{fixtures::handle_boundary(s, 0), 1};
  for (int i = 0; i < 6; ++i) CHECK(transvection(unit(6, i), sigma) == unit(6, i));

  // Applying twice adds twice the shift.
  HomologyVector x{1, 2, -3, 0, 5, 1};
  auto once = transvection(x, b[1]);
  auto twice = transvection(once, b[1]);
  int p = symplectic_pairing(x, unit(6, 1));
  for (int i = 0; i < 6; ++i) CHECK(twice[i] == x[i] + 2 * p * (i == 1));
}

TEST_CASE("word matrices") {
  auto s = fixtures::g3();
  auto b = basis_curves(s);
  CHECK(word_matrix({}, 3).is_identity());
  CHECK(word_matrix({{{{fixtures::handle_boundary(s, 0), 1}, 1}}}, 3).is_identity());

  TwistWord d_a1{{{b[0], 1}}};
  auto m = word_matrix(d_a1, 3);
  CHECK_FALSE(m.is_identity());
  CHECK(is_symplectic(m));
  CHECK_FALSE(is_torelli_on_homology(d_a1, 3));
  CHECK(m.at(0, 1) == -1);

  // Inverse twists cancel and orientation does not matter.
  TwistWord w{{{b[2], 3}, {{b[2].curve, -1}, -3}}};
  CHECK(word_matrix(w, 3).is_identity());
  CHECK(word_matrix({{{b[2], 3}}}, 3) == word_matrix({{{{b[2].curve, -1}, 3}}}, 3));
  TwistWord inv{{{b[2], 2}, {b[2], -2}}};
  CHECK(word_matrix(inv, 3).is_identity());

  // Word order: the last letter acts first.
  TwistWord ab{{{b[0], 1}, {b[1], 1}}};
  CHECK(word_matrix(ab, 3) == word_matrix({{{b[0], 1}}}, 3) * word_matrix({{{b[1], 1}}}, 3));
  CHECK_FALSE(word_matrix(ab, 3) == word_matrix({{{b[1], 1}, {b[0], 1}}}, 3));

  CHECK_THROWS_AS(word_matrix(d_a1, 4), PreconditionError);
}

TEST_CASE("bounding-pair maps act trivially, other disjoint pairs do not") {
  auto s = fixtures::g3();
  auto a = fixtures::basis(s, 0);
  for (const auto& c : bounding_pair_arms(a, 20)) {
    TwistWord w = bounding_pair_map(a, c);
    CHECK(is_torelli_on_homology(w, 3));
  }
  TwistWord not_bp{{{{a, 1}, 1}, {{fixtures::basis(s, 2), 1}, -1}}};
  CHECK_FALSE(is_torelli_on_homology(not_bp, 3));
}
