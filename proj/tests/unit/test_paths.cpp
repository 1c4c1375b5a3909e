#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"
#include "torelli/joints.hpp"
#include "torelli/paths.hpp"

using namespace torelli;

namespace {

const std::vector<CurveClass>& g3_sep() { return separating_census(fixtures::g3(), 24); }

// First separating census pairs with each intersection number.
std::map<int, std::vector<std::pair<CurveClass, CurveClass>>> pairs_by_i(int per_value) {
  std::map<int, std::vector<std::pair<CurveClass, CurveClass>>> out;
  const auto& cs = g3_sep();
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t k = i + 1; k < cs.size(); ++k) {
      int n = intersection_number(cs[i], cs[k]);
      if (static_cast<int>(out[n].size()) < per_value) out[n].push_back({cs[i], cs[k]});
    }
  return out;
}

const std::map<int, std::vector<std::pair<CurveClass, CurveClass>>>& samples() {
  static auto s = pairs_by_i(3);
  return s;
}

}  // namespace

TEST_CASE("surger_once lowers the intersection with b") {
  int tested = 0;
  for (const auto& [i, ps] : samples()) {
    if (i < 6) continue;
    for (const auto& [a, b] : ps) {
      CurveClass c = surger_once(a, b);
      CHECK(is_null_homologous(c));
      CHECK(intersection_number(a, c) <= 4);
      CHECK(intersection_number(c, b) < i);
      ++tested;
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("sep_path trivial cases") {
  const auto& cs = g3_sep();
  auto single = sep_path(cs[0], cs[0]);
  CHECK(single.vertices.size() == 1);
  for (size_t k = 1; k < cs.size(); ++k)
    if (are_disjoint(cs[0], cs[k])) {
      auto p = sep_path(cs[0], cs[k]);
      CHECK(p.vertices.size() == 2);
      CHECK(check_sep_path(p).empty());
      break;
    }
  CHECK_THROWS_AS(sep_path(cs[0], fixtures::basis(fixtures::g3(), 0)), PreconditionError);
}

TEST_CASE("base case paths are short") {
  // Distinct separating curves never meet exactly twice.
  CHECK(samples().count(2) == 0);
  for (int i : {4}) {
    REQUIRE(samples().count(i));
    for (const auto& [a, b] : samples().at(i)) {
      auto p = base_case_path(a, b);
      CHECK(check_sep_path(p).empty());
      CHECK(p.vertices.size() <= static_cast<size_t>(i == 2 ? 3 : 4));
    }
  }
  const auto& cs = g3_sep();
  for (size_t k = 1; k < cs.size(); ++k)
    if (are_disjoint(cs[0], cs[k])) {
      CHECK_THROWS_AS(base_case_path(cs[0], cs[k]), PreconditionError);
      break;
    }
}

TEST_CASE("sep_path certificates verify and respect the length bound") {
  for (const auto& [i, ps] : samples()) {
    if (i > 12) continue;
    for (const auto& [a, b] : ps) {
      auto p = sep_path(a, b);
      CHECK(check_sep_path(p).empty());
      CHECK(p.vertices.front() == a);
      CHECK(p.vertices.back() == b);
      CHECK(static_cast<int>(p.vertices.size()) - 1 <= 2 + i / 2);
    }
  }
}

TEST_CASE("the checker rejects bad paths") {
  const auto& cs = g3_sep();
  SepPathCert p{{cs[0], fixtures::basis(fixtures::g3(), 0)}, {0}};
  CHECK(check_sep_path(p) == "vertex 1 is not separating");
  for (size_t k = 1; k < cs.size(); ++k)
    if (!are_disjoint(cs[0], cs[k])) {
      SepPathCert q{{cs[0], cs[k]}, {0}};
      CHECK_FALSE(check_sep_path(q).empty());
      break;
    }
}

TEST_CASE("genus1_refine") {
  auto s = fixtures::g4();
  const auto& cs = separating_census(s, 28);
  SUBCASE("all-genus-1 path is a fixed point") {
    const auto& g3s = g3_sep();
    auto p = sep_path(g3s[0], g3s[0]);
    CHECK(genus1_refine(p).vertices == p.vertices);
  }
  SUBCASE("high-genus middle vertex is replaced from the other side") {
    CurveClass mid;
    for (const auto& c : cs)
      if (min_side_genus(c) == 2) {
        mid = c;
        break;
      }
    REQUIRE(mid.valid());
    std::vector<CurveClass> side;
    for (const auto& c : cs)
      if (min_side_genus(c) == 1 && are_disjoint(c, mid) && side_of(mid, c) == 1) side.push_back(c);
    REQUIRE(side.size() >= 2);
    SepPathCert p{{side[0], mid, side[1]}, {0, 0}};
    REQUIRE(check_sep_path(p).empty());
    std::vector<int> counts;
    auto q = genus1_refine(p, &counts);
    CHECK(check_sep_path(q).empty());
    for (const auto& v : q.vertices) CHECK(min_side_genus(v) == 1);
    REQUIRE(q.vertices.size() == 3);
    CHECK(side_of(mid, q.vertices[1]) == -1);
    CHECK(counts.front() == 1);
    CHECK(counts.back() == 0);
  }
}

TEST_CASE("bp_short_path") {
  auto s = fixtures::g3();
  auto a = fixtures::basis(s, 0);
  auto arms = bounding_pair_arms(a, 24);
  int by_k[12] = {};
  for (size_t i = 0; i < arms.size(); ++i)
    for (size_t k = i + 1; k < arms.size(); ++k) {
      int n = intersection_number(arms[i], arms[k]);
      if (n > 10 || by_k[n] >= 2) continue;
      ++by_k[n];
      std::vector<BpStep> trace;
      auto p = bp_short_path(a, arms[i], arms[k], &trace);
      CHECK(check_bp_path(p).empty());
      if (n == 0) CHECK(p.vertices.size() == 2);
      for (int st : p.steps) CHECK((st == 0 || st == 2 || st == 4));
      for (const auto& t : trace)
        if (t.tubed) CHECK(t.k_after <= t.k_before - 2);
    }
  CHECK(by_k[4] > 0);
}

TEST_CASE("find_enclosing_torus") {
  auto s = fixtures::g3();
  auto a1 = fixtures::basis(s, 0), a2 = fixtures::basis(s, 2);
  CHECK(find_enclosing_torus(a1, {}) == fixtures::handle_boundary(s, 0));

  CurveClass e = find_enclosing_torus(a1, {a2});
  CHECK(are_disjoint(e, a2));
  CHECK(are_disjoint(e, a1));
  CHECK(min_side_genus(e) == 1);
  CHECK(side_of(e, a1) == -side_of(e, a2));

  CurveClass f = find_enclosing_torus(a2, {a1, e});
  for (const auto& [x, y] : std::vector<std::pair<CurveClass, CurveClass>>{{a1, a2}, {a1, e}, {a1, f}, {a2, e}, {a2, f}, {e, f}})
    CHECK(are_disjoint(x, y));
  CHECK_FALSE(e == f);
  CHECK_THROWS_AS(find_enclosing_torus(fixtures::handle_boundary(s, 0), {}), PreconditionError);
}
