#include <doctest.h>

#include "fixtures.hpp"
#include "torelli/error.hpp"
#include "torelli/joints.hpp"
#include "torelli/serialization.hpp"

using namespace torelli;

TEST_CASE("surface JSON round-trip") {
  for (int g : {2, 3, 5}) {
    auto s = Surface::build(g);
    Json j = surface_to_json(*s);
    CHECK(j["triangles"].size() == static_cast<size_t>(4 * g - 2));
    CHECK(surface_from_json(Json::parse(j.dump()))->hash() == s->hash());
  }
}

TEST_CASE("surface JSON is checked strictly") {
  Json j = surface_to_json(*fixtures::g3());
  Json v = j;
  v["format_version"] = 2;
  CHECK_THROWS_AS(surface_from_json(v), PreconditionError);
  Json t = j;
  t["gluing"][0] = t["gluing"][1];
  CHECK_THROWS_WITH_AS(surface_from_json(t), doctest::Contains("gluing"), PreconditionError);
  Json m = j;
  m.erase("basis");
  CHECK_THROWS_WITH_AS(surface_from_json(m), doctest::Contains("basis"), PreconditionError);
}

TEST_CASE("curve JSON round-trip and validation") {
  auto s = fixtures::g3();
  for (const auto& c : census(s, 14)) CHECK(curve_from_json(s, Json::parse(curve_to_json(c).dump())) == c);
  OrientedCurve o{fixtures::basis(s, 1), -1};
  auto back = oriented_from_json(s, oriented_to_json(o));
  CHECK(back.curve == o.curve);
  CHECK(back.direction == -1);

  Json j = curve_to_json(fixtures::basis(s, 0));
  j["surface"] = fixtures::g4()->hash();
  CHECK_THROWS_AS(curve_from_json(s, j), PreconditionError);
  Json k = curve_to_json(fixtures::basis(s, 0));
  k["coords"][0] = k["coords"][0].get<int>() + 2;
  CHECK_THROWS_AS(curve_from_json(s, k), PreconditionError);
}

TEST_CASE("twist word JSON round-trip") {
  auto s = fixtures::g3();
  auto b = basis_curves(s);
  TwistWord w{{{b[0], 2}, {b[3], -1}}};
  TwistWord back = twist_word_from_json(s, twist_word_to_json(w));
  REQUIRE(back.letters.size() == 2);
  CHECK(word_matrix(back, 3) == word_matrix(w, 3));
}

TEST_CASE("certificate verification") {
  auto s = fixtures::g3();
  const auto& cs = separating_census(s, 24);
  CurveClass a, b;
  for (size_t i = 0; i < cs.size() && !b.valid(); ++i)
    for (size_t k = i + 1; k < cs.size(); ++k)
      if (intersection_number(cs[i], cs[k]) == 6) {
        a = cs[i], b = cs[k];
        break;
      }
  REQUIRE(b.valid());
  Json cert = sep_path_to_json(sep_path(a, b));
  CHECK(verify_certificate(cert).empty());
  CHECK(verify_certificate(Json::parse(cert.dump())).empty());

  SUBCASE("nonseparating vertex") {
    REQUIRE(cert["vertices"].size() >= 3);
    cert["vertices"][1] = curve_to_json(fixtures::basis(s, 0));
    CHECK(verify_certificate(cert) == "vertex 1 is not separating");
  }
  SUBCASE("wrong surface") {
    cert["surface"] = fixtures::g4()->hash();
    CHECK_THROWS_AS(verify_certificate(cert), PreconditionError);
  }
  SUBCASE("unknown version") {
    cert["format_version"] = 0;
    CHECK_THROWS_AS(verify_certificate(cert), PreconditionError);
  }
}

TEST_CASE("joint report certificates") {
  auto s = fixtures::g3();
  auto joints = joint_census(s, 20);
  int seen = 0;
  for (const auto& j : joints) {
    if (j.k != 2 && j.k != 4) continue;
    JointReport r = analyze_joint(j);
    if (r.outcome == JointOutcome::forbidden_configuration) continue;
    Json cert = Json::parse(joint_report_to_json(r).dump());
    CHECK(verify_certificate(cert).empty());
    Json bad = cert;
    bad["vertices"][2] = bad["vertices"][1];
    CHECK_FALSE(verify_certificate(bad).empty());
    if (!cert["duals"].is_null()) {
      Json d = cert;
      d["duals"][1] = d["duals"][0];
      CHECK(verify_certificate(d) == "duals are equal");
    }
    if (!cert["mediator"].is_null()) {
      Json m = cert;
      m["mediator"] = cert["vertices"][0];
      CHECK_FALSE(verify_certificate(m).empty());
    }
    ++seen;
  }
  CHECK(seen > 0);
}
