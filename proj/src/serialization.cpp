#include "torelli/serialization.hpp"

#include "torelli/error.hpp"
#include "torelli/intersection.hpp"

namespace torelli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw PreconditionError(std::string("expected a JSON object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw PreconditionError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(std::string("field '") + key + "' has the wrong type");
  }
}

void check_version(const Json& j) {
  int v = get<int>(j, "format_version");
  if (v != kFormatVersion)
    throw PreconditionError("unsupported format_version " + std::to_string(v) + " (expected " +
                            std::to_string(kFormatVersion) + ")");
}

void check_surface(const SurfacePtr& s, const Json& j) {
  std::string h = get<std::string>(j, "surface");
  if (h != s->hash()) throw PreconditionError("document refers to surface " + h + ", not " + s->hash());
}

// Directed edge id: 2e for the edge's canonical direction, 2e + 1 for the reverse.
int directed_edge(const Surface& s, int h) { return 2 * s.edge_of(h) + (s.is_lower(h) ? 0 : 1); }

Json checks_to_json(const std::vector<JointCheck>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"holds", c.holds}});
  return out;
}

Json boundary_to_json(const LabeledBoundary& b) {
  Json j = {{"label", b.label},
            {"essential", b.circle.essential},
            {"separating", b.circle.separating},
            {"homology", b.circle.homology}};
  j["curve"] = b.circle.curve ? oriented_to_json(*b.circle.curve) : Json(nullptr);
  return j;
}

}  // namespace

Json surface_to_json(const Surface& s) {
  Json tri = Json::array();
  for (int t = 0; t < s.num_triangles(); ++t)
    tri.push_back({directed_edge(s, 3 * t), directed_edge(s, 3 * t + 1), directed_edge(s, 3 * t + 2)});
  Json basis = Json::array();
  for (size_t i = 0; i < s.basis_coords().size(); ++i)
    basis.push_back({{"coords", s.basis_coords()[i]}, {"direction", s.basis_directions()[i]}});
  return {{"format_version", kFormatVersion}, {"genus", s.genus()}, {"hash", s.hash()},
          {"triangles", tri},       {"gluing", s.gluing()}, {"basis", basis}};
}

SurfacePtr surface_from_json(const Json& j) {
  check_version(j);
  int g = get<int>(j, "genus");
  if (g < 2 || g > 12) throw PreconditionError("genus must be between 2 and 12");
  SurfacePtr s = Surface::build(g);
  Json ref = surface_to_json(*s);
  for (const char* key : {"triangles", "gluing", "basis"})
    if (field(j, key) != ref[key])
      throw PreconditionError(std::string("field '") + key + "' does not match the standard genus-" +
                              std::to_string(g) + " triangulation");
  if (j.contains("hash") && j["hash"] != ref["hash"]) throw PreconditionError("field 'hash' does not match the surface");
  return s;
}

Json curve_to_json(const CurveClass& c) {
  return {{"format_version", kFormatVersion}, {"surface", c.surface().hash()}, {"coords", c.coords()},
          {"hash", c.hash()}};
}

CurveClass curve_from_json(const SurfacePtr& s, const Json& j) {
  check_version(j);
  check_surface(s, j);
  auto coords = get<std::vector<int>>(j, "coords");
  if (static_cast<int>(coords.size()) != s->num_edges())
    throw PreconditionError("field 'coords' needs " + std::to_string(s->num_edges()) + " entries");
  CurveClass c = CurveClass::from_coords(s, coords);
  if (j.contains("hash") && j["hash"] != c.hash()) throw PreconditionError("field 'hash' does not match the coordinates");
  return c;
}

Json oriented_to_json(const OrientedCurve& c) {
  Json j = curve_to_json(c.curve);
  j["direction"] = c.direction;
  return j;
}

OrientedCurve oriented_from_json(const SurfacePtr& s, const Json& j) {
  CurveClass c = curve_from_json(s, j);
  int d = j.contains("direction") ? get<int>(j, "direction") : 1;
  if (d != 1 && d != -1) throw PreconditionError("field 'direction' must be +1 or -1");
  return {c, d};
}

Json twist_word_to_json(const TwistWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back({{"curve", oriented_to_json(l.curve)}, {"exponent", l.exponent}});
  return {{"format_version", kFormatVersion}, {"letters", letters}};
}

TwistWord twist_word_from_json(const SurfacePtr& s, const Json& j) {
  check_version(j);
  TwistWord w;
  const Json& letters = field(j, "letters");
  if (!letters.is_array()) throw PreconditionError("field 'letters' must be an array");
  for (size_t i = 0; i < letters.size(); ++i) {
    int e = get<int>(letters[i], "exponent");
    if (e == 0) throw PreconditionError("letter " + std::to_string(i) + " has exponent 0");
    w.letters.push_back({oriented_from_json(s, field(letters[i], "curve")), e});
  }
  return w;
}

Json matrix_to_json(const SymplecticMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim; ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  return rows;
}

Json bounding_pair_to_json(const BoundingPair& bp) {
  return {{"first", curve_to_json(bp.first)},
          {"second", oriented_to_json({bp.second, bp.direction})},
          {"genera", {bp.left.genus, bp.right.genus}}};
}

Json sep_path_to_json(const SepPathCert& p) {
  require(!p.vertices.empty(), "empty path");
  const Surface& s = p.vertices.front().surface();
  Json v = Json::array();
  for (const auto& c : p.vertices) v.push_back(curve_to_json(c));
  return {{"kind", "sep_path"},
          {"format_version", kFormatVersion},
          {"surface", s.hash()},
          {"genus", s.genus()},
          {"vertices", v},
          {"steps", p.steps},
          {"length", static_cast<int>(p.vertices.size()) - 1},
          {"checks", {"every vertex essential and separating", "consecutive vertices distinct and disjoint"}}};
}

Json bp_path_to_json(const BpPathCert& p) {
  const Surface& s = p.base.surface();
  Json v = Json::array();
  for (const auto& c : p.vertices) v.push_back(curve_to_json(c));
  return {{"kind", "bp_path"},
          {"format_version", kFormatVersion},
          {"surface", s.hash()},
          {"genus", s.genus()},
          {"base", curve_to_json(p.base)},
          {"vertices", v},
          {"steps", p.steps},
          {"checks", {"every vertex forms a bounding pair with the base", "consecutive intersection numbers in {0,2,4}"}}};
}

Json joint_report_to_json(const JointReport& r) {
  const Surface& s = r.joint.base.surface();
  Json bds = Json::array();
  for (const auto& b : r.boundaries) bds.push_back(boundary_to_json(b));
  Json j = {{"kind", "joint_report"},
            {"format_version", kFormatVersion},
            {"surface", s.hash()},
            {"genus", s.genus()},
            {"vertices", {curve_to_json(r.joint.base), curve_to_json(r.joint.arms[0]), curve_to_json(r.joint.arms[1])}},
            {"k", r.joint.k},
            {"order_type", r.order_type},
            {"outcome", to_string(r.outcome)},
            {"branch", r.branch},
            {"neighborhood",
             {{"genus", r.neighborhood.genus},
              {"euler_characteristic", r.neighborhood.euler_characteristic},
              {"boundary_count", r.neighborhood.boundary_count()}}},
            {"boundaries", bds},
            {"checks", checks_to_json(r.checks)}};
  j["mediator"] = r.mediator ? curve_to_json(*r.mediator) : Json(nullptr);
  if (r.torus) {
    Json tb = Json::array();
    for (const auto& bc : r.torus->boundary) tb.push_back(curve_to_json(bc.curve->curve));
    j["torus"] = {{"genus", r.torus->genus}, {"boundary", tb}};
  } else {
    j["torus"] = nullptr;
  }
  j["duals"] = r.duals ? Json{curve_to_json(r.duals->first), curve_to_json(r.duals->second)} : Json(nullptr);
  if (r.witness) {
    j["witness"] = {{"curve", oriented_to_json(r.witness->curve)},
                    {"geometric_b", r.witness->geometric_b},
                    {"algebraic_b", r.witness->algebraic_b},
                    {"geometric_c", r.witness->geometric_c},
                    {"algebraic_c", r.witness->algebraic_c}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

namespace {

std::vector<CurveClass> vertices_from(const SurfacePtr& s, const Json& j) {
  const Json& v = field(j, "vertices");
  if (!v.is_array()) throw PreconditionError("field 'vertices' must be an array");
  std::vector<CurveClass> out;
  for (size_t i = 0; i < v.size(); ++i) {
    try {
      out.push_back(curve_from_json(s, v[i]));
    } catch (const PreconditionError& e) {
      throw PreconditionError("vertex " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

void check_kind(const Json& j, const char* kind) {
  check_version(j);
  if (get<std::string>(j, "kind") != kind) throw PreconditionError(std::string("expected a certificate of kind ") + kind);
}

}  // namespace

SepPathCert sep_path_from_json(const SurfacePtr& s, const Json& j) {
  check_kind(j, "sep_path");
  check_surface(s, j);
  return {vertices_from(s, j), get<std::vector<int>>(j, "steps")};
}

BpPathCert bp_path_from_json(const SurfacePtr& s, const Json& j) {
  check_kind(j, "bp_path");
  check_surface(s, j);
  return {curve_from_json(s, field(j, "base")), vertices_from(s, j), get<std::vector<int>>(j, "steps")};
}

JointReport joint_report_from_json(const SurfacePtr& s, const Json& j) {
  check_kind(j, "joint_report");
  check_surface(s, j);
  auto v = vertices_from(s, j);
  if (v.size() != 3) throw PreconditionError("a joint report lists exactly three vertices");
  JointReport r;
  r.joint = {v[0], {v[1], v[2]}, get<int>(j, "k")};
  r.order_type = get<int>(j, "order_type");
  r.branch = get<std::string>(j, "branch");
  std::string o = get<std::string>(j, "outcome");
  bool known = false;
  for (auto x : {JointOutcome::mediating_curve, JointOutcome::enclosing_torus, JointOutcome::common_duals,
                 JointOutcome::forbidden_configuration})
    if (to_string(x) == o) {
      r.outcome = x;
      known = true;
    }
  if (!known) throw PreconditionError("unknown outcome '" + o + "'");
  if (!field(j, "mediator").is_null()) r.mediator = curve_from_json(s, j["mediator"]);
  if (!field(j, "duals").is_null()) {
    const Json& d = j["duals"];
    if (!d.is_array() || d.size() != 2) throw PreconditionError("field 'duals' must hold two curves");
    r.duals = std::make_pair(curve_from_json(s, d[0]), curve_from_json(s, d[1]));
  }
  if (!field(j, "torus").is_null()) {
    const Json& tb = field(j["torus"], "boundary");
    if (!tb.is_array() || tb.size() != 2) throw PreconditionError("torus boundary must hold two curves");
    CurveClass p = curve_from_json(s, tb[0]), q = curve_from_json(s, tb[1]);
    if (p == q || !is_null_homologous(p) || !is_null_homologous(q) || !are_disjoint(p, q))
      throw InvariantViolation("torus boundary curves are not two disjoint separating curves");
    auto z = detect_two_holed_torus(p, q);
    if (!z) throw InvariantViolation("torus boundary curves do not bound a two-holed torus");
    r.torus = z;
  }
  for (const auto& c : field(j, "checks")) r.checks.push_back({get<std::string>(c, "name"), get<bool>(c, "holds")});
  return r;
}

std::string verify_certificate(const Json& cert) {
  check_version(cert);
  int g = get<int>(cert, "genus");
  if (g < 2 || g > 12) throw PreconditionError("genus must be between 2 and 12");
  SurfacePtr s = Surface::build(g);
  check_surface(s, cert);
  std::string kind = get<std::string>(cert, "kind");
  if (kind == "sep_path") return check_sep_path(sep_path_from_json(s, cert));
  if (kind == "bp_path") return check_bp_path(bp_path_from_json(s, cert));
  if (kind == "joint_report") {
    JointReport r;
    try {
      r = joint_report_from_json(s, cert);
    } catch (const InvariantViolation& e) {
      return e.what();
    }
    for (const auto& c : r.checks)
      if (!c.holds && r.outcome != JointOutcome::forbidden_configuration) return "recorded check failed: " + c.name;
    return check_joint_report(r);
  }
  throw PreconditionError("unknown certificate kind '" + kind + "'");
}

}  // namespace torelli
