#include "torelli/joints.hpp"

#include <algorithm>
#include <map>

#include "torelli/census.hpp"
#include "torelli/diagram.hpp"
#include "torelli/duals.hpp"
#include "torelli/error.hpp"
#include "torelli/intersection.hpp"
#include "torelli/tubing.hpp"

namespace torelli {

namespace {

using Cycle = std::vector<std::pair<int, int>>;

HomologyVector combine(std::initializer_list<std::pair<int, const HomologyVector*>> terms) {
  HomologyVector out;
  for (const auto& [k, h] : terms) {
    if (out.empty()) out.assign(h->size(), 0);
    for (size_t i = 0; i < h->size(); ++i) out[i] += k * (*h)[i];
  }
  return out;
}

bool is_zero(const HomologyVector& h) {
  return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
}

struct Arms {
  OrientedCurve A, B, C;
};

Arms orient(const Joint& j) {
  auto pb = is_bounding_pair(j.base, j.arms[0]);
  auto pc = is_bounding_pair(j.base, j.arms[1]);
  require(pb && pc, "arms must form bounding pairs with the base");
  return {{j.base, 1}, {j.arms[0], pb->direction}, {j.arms[1], pc->direction}};
}

// +1 when C crosses B from its right to its left.
int sign_on_b(const Diagram& d, int x) {
  const auto& X = d.crossings()[x];
  return X.curve[0] == 0 ? X.sign : -X.sign;
}

int arc_id(const Ribbon& rb, int curve, int from, int to) {
  for (size_t i = 0; i < rb.arcs.size(); ++i)
    if (rb.arcs[i].curve == curve && rb.arcs[i].from == from && rb.arcs[i].to == to) return static_cast<int>(i);
  throw InvariantViolation("ribbon arc between consecutive crossings is missing");
}

Cycle sorted(Cycle c) {
  std::sort(c.begin(), c.end());
  return c;
}

// Labels the boundary circles of `n` by their arc cycles; false if any circle is unmatched.
bool label_boundaries(const Subsurface& n, const std::vector<std::pair<std::string, Cycle>>& expected,
                      std::vector<LabeledBoundary>& out) {
  out.clear();
  std::vector<char> used(n.boundary.size(), 0);
  for (const auto& [label, cyc] : expected) {
    Cycle want = sorted(cyc);
    bool found = false;
    for (size_t i = 0; i < n.boundary.size() && !found; ++i) {
      if (used[i] || sorted(n.boundary[i].arcs) != want) continue;
      used[i] = 1;
      out.push_back({label, n.boundary[i]});
      found = true;
    }
    if (!found) return false;
  }
  return true;
}

void add(JointReport& r, const std::string& name, bool holds) { r.checks.push_back({name, holds}); }

void demand_all(const JointReport& r) {
  for (const auto& c : r.checks)
    if (!c.holds) throw InvariantViolation("joint analysis check failed: " + c.name);
}

bool zero_joint(const CurveClass& a, const CurveClass& b, const CurveClass& c) {
  try {
    return classify_joint(a, b, c).k == 0;
  } catch (const PreconditionError&) {
    return false;
  }
}

// True when x lies in the piece z of the complement of the given source curves.
bool inside(const Subsurface& z, const std::vector<CurveClass>& sources, const CurveClass& x) {
  for (const auto& bc : z.boundary) {
    const CurveClass& src = sources[bc.source_curve];
    if (src == x || !are_disjoint(src, x)) return false;
    if (side_of(src, x) != bc.source_side) return false;
  }
  return true;
}

void set_mediator(JointReport& r, const CurveClass& d, const std::string& label) {
  const CurveClass& a = r.joint.base;
  r.outcome = JointOutcome::mediating_curve;
  r.mediator = d;
  r.branch = "mediating curve " + label;
  add(r, "(a,b," + label + ") is a 0-joint", zero_joint(a, r.joint.arms[0], d));
  add(r, "(a," + label + ",c) is a 0-joint", zero_joint(a, d, r.joint.arms[1]));
}

// False, with nothing recorded, when p and q do not cobound a two-holed torus.
bool set_torus(JointReport& r, const CurveClass& p, const CurveClass& q, const std::string& labels) {
  auto z = detect_two_holed_torus(p, q);
  if (!z) return false;
  r.outcome = JointOutcome::enclosing_torus;
  r.branch = "two-holed torus bounded by " + labels;
  r.torus = z;
  bool all = true;
  for (const CurveClass* x : {&r.joint.base, &r.joint.arms[0], &r.joint.arms[1]}) all = all && inside(*z, {p, q}, *x);
  add(r, "a, b, c lie in the two-holed torus", all);
  return true;
}

}  // namespace

std::string to_string(JointOutcome o) {
  switch (o) {
    case JointOutcome::mediating_curve: return "mediating-curve";
    case JointOutcome::enclosing_torus: return "enclosing-two-holed-torus";
    case JointOutcome::common_duals: return "common-duals";
    case JointOutcome::forbidden_configuration: return "forbidden-configuration";
  }
  return "unknown";
}

const LabeledBoundary& JointReport::boundary(const std::string& label) const {
  for (const auto& b : boundaries)
    if (b.label == label) return b;
  throw PreconditionError("no boundary circle labelled " + label);
}

JointReport analyze_two_joint(const Joint& j) {
  require(j.k == 2, "analysis needs a 2-joint");
  Joint jj = classify_joint(j.base, j.arms[0], j.arms[1]);
  require(jj.k == 2, "analysis needs a 2-joint");
  const SurfacePtr& s = j.base.surface_ptr();
  Arms o = orient(j);
  JointReport r;
  r.joint = jj;
  Diagram d(s, {geodesic_input(o.B), geodesic_input(o.C)});
  ensure(d.crossing_count(0, 1) == 2, "geodesic drawing is not in minimal position");
  Ribbon rb = ribbon_boundaries(d, {0, 1});
  r.neighborhood = neighborhood_in(d, {0, 1});
  const auto& along_b = d.along(0);
  int x = sign_on_b(d, along_b[0]) > 0 ? along_b[0] : along_b[1];
  int y = x == along_b[0] ? along_b[1] : along_b[0];
  add(r, "crossing signs are opposite", sign_on_b(d, x) == -sign_on_b(d, y));
  add(r, "four boundary circles", r.neighborhood.boundary.size() == 4);
  add(r, "euler characteristic -2", r.neighborhood.euler_characteristic == -2);
  add(r, "neighbourhood has genus 0", r.neighborhood.genus == 0);
  demand_all(r);
  int B1 = arc_id(rb, 0, x, y), B2 = arc_id(rb, 0, y, x);
  int C1 = arc_id(rb, 1, x, y), C2 = arc_id(rb, 1, y, x);
  add(r, "boundary cycles match B_i - C_j pattern",
      label_boundaries(r.neighborhood,
                       {{"D11", {{B1, 1}, {C1, -1}}},
                        {"D12", {{C2, -1}, {B1, -1}}},
                        {"D22", {{B2, -1}, {C2, 1}}},
                        {"D21", {{C1, 1}, {B2, 1}}}},
                       r.boundaries));
  demand_all(r);
  const auto& h11 = r.boundary("D11").circle.homology;
  const auto& h12 = r.boundary("D12").circle.homology;
  const auto& h22 = r.boundary("D22").circle.homology;
  const auto& h21 = r.boundary("D21").circle.homology;
  HomologyVector hA = homology_class(o.A), hB = homology_class(o.B);
  bool essential = true;
  for (const auto& b : r.boundaries) essential = essential && b.circle.essential;
  add(r, "all boundary circles essential", essential);
  add(r, "D11 ~ D22", is_zero(combine({{1, &h11}, {-1, &h22}})));
  add(r, "D12 + D21 ~ 2 D11", is_zero(combine({{1, &h12}, {1, &h21}, {-2, &h11}})));
  add(r, "D11 ~ 0", is_zero(h11));
  add(r, "B ~ D11 + D21", is_zero(combine({{1, &hB}, {-1, &h11}, {-1, &h21}})));
  add(r, "D21 ~ A", h21 == hA);
  demand_all(r);

  const CurveClass& d21 = r.boundary("D21").circle.curve->curve;
  const CurveClass& d12 = r.boundary("D12").circle.curve->curve;
  if (!(d21 == j.base)) {
    set_mediator(r, d21, "D21");
  } else if (!(d12 == j.base)) {
    // D12 ~ -A is disjoint from A, B, C; when not isotopic to A it mediates the same way.
    set_mediator(r, d12, "D12");
  } else if (!set_torus(r, r.boundary("D11").circle.curve->curve, r.boundary("D22").circle.curve->curve,
                        "D11, D22")) {
    add(r, "D11, D22 bound a two-holed torus", false);
  }
  demand_all(r);
  return r;
}

JointReport analyze_four_joint(const Joint& j) {
  require(j.k == 4, "analysis needs a 4-joint");
  Joint jj = classify_joint(j.base, j.arms[0], j.arms[1]);
  require(jj.k == 4, "analysis needs a 4-joint");
  const SurfacePtr& s = j.base.surface_ptr();
  Arms o = orient(j);
  JointReport r;
  r.joint = jj;
  std::vector<Diagram::Input> inputs = {geodesic_input(o.B), geodesic_input(o.C)};
  Diagram d(s, inputs);
  ensure(d.crossing_count(0, 1) == 4, "geodesic drawing is not in minimal position");
  Ribbon rb = ribbon_boundaries(d, {0, 1});
  r.neighborhood = neighborhood_in(d, {0, 1});

  // w: the first crossing along C where C passes from the left of B to its right.
  const std::vector<int>& along_c = d.along(1);
  const std::vector<int>& along_b = d.along(0);
  int start = -1;
  for (int i = 0; i < 4 && start < 0; ++i)
    if (sign_on_b(d, along_c[i]) < 0) start = i;
  ensure(start >= 0, "no crossing of C into the right side of B");
  int w = along_c[start], x = along_c[(start + 1) % 4], y = along_c[(start + 2) % 4], z = along_c[(start + 3) % 4];
  bool alt_c = true, alt_b = true;
  for (int i = 0; i < 4; ++i) {
    alt_c = alt_c && sign_on_b(d, along_c[i]) == -sign_on_b(d, along_c[(i + 1) % 4]);
    alt_b = alt_b && sign_on_b(d, along_b[i]) == -sign_on_b(d, along_b[(i + 1) % 4]);
  }
  add(r, "signs alternate along C", alt_c);
  add(r, "signs alternate along B", alt_b);
  add(r, "six boundary circles", r.neighborhood.boundary.size() == 6);
  add(r, "euler characteristic -4", r.neighborhood.euler_characteristic == -4);
  add(r, "neighbourhood has genus 0", r.neighborhood.genus == 0);
  demand_all(r);
  int wb = d.along_index(w, d.crossings()[w].curve[0] == 0 ? 0 : 1);
  std::vector<int> seq(4);
  for (int i = 0; i < 4; ++i) seq[i] = along_b[(wb + i) % 4];
  if (seq == std::vector<int>{w, x, y, z}) {
    r.order_type = 1;
  } else {
    ensure(seq == (std::vector<int>{w, z, y, x}), "crossing order along B is neither (w,x,y,z) nor (w,z,y,x)");
    r.order_type = 2;
  }

  if (r.order_type == 1) {
    int B1 = arc_id(rb, 0, w, x), B2 = arc_id(rb, 0, x, y), B3 = arc_id(rb, 0, y, z), B4 = arc_id(rb, 0, z, w);
    int C1 = arc_id(rb, 1, w, x), C2 = arc_id(rb, 1, x, y), C3 = arc_id(rb, 1, y, z), C4 = arc_id(rb, 1, z, w);
    r.outcome = JointOutcome::forbidden_configuration;
    r.branch = "order (w,x,y,z)";
    add(r, "order type (ii)", false);
    bool matched = label_boundaries(r.neighborhood,
                                    {{"D1", {{C1, 1}, {B1, -1}}},
                                     {"D2", {{B2, 1}, {C2, -1}}},
                                     {"D3", {{C3, 1}, {B3, -1}}},
                                     {"D4", {{B1, 1}, {C2, 1}, {B3, 1}, {C4, 1}}},
                                     {"D5", {{B4, -1}, {C3, -1}, {B2, -1}, {C1, -1}}},
                                     {"D6", {{B4, 1}, {C4, -1}}}},
                                    r.boundaries);
    ensure(matched, "boundary cycles do not match the (w,x,y,z) pattern");
    auto h = [&](const std::string& l) -> const HomologyVector& { return r.boundary(l).circle.homology; };
    HomologyVector hB = homology_class(o.B);
    add(r, "D1 + D3 ~ 0", is_zero(combine({{1, &h("D1")}, {1, &h("D3")}})));
    add(r, "D4 + D5 ~ 0", is_zero(combine({{1, &h("D4")}, {1, &h("D5")}})));
    add(r, "D2 + D6 ~ 0", is_zero(combine({{1, &h("D2")}, {1, &h("D6")}})));
    add(r, "D5 + D6 ~ 0", is_zero(combine({{1, &h("D5")}, {1, &h("D6")}})));
    add(r, "B ~ D6", h("D6") == hB);
    std::vector<char> blocking = {1, 1};
    auto found = route_walk(d, {0}, blocking, [&](const OrientedCurve& c) {
      return intersection_number(c.curve, j.arms[0]) == 1 && intersection_number(c.curve, j.arms[1]) == 0;
    });
    add(r, "a curve meets B once and misses C", found.has_value());
    if (found) {
      ForbiddenWitness fw;
      fw.curve = *found;
      fw.geometric_b = intersection_number(found->curve, j.arms[0]);
      fw.geometric_c = intersection_number(found->curve, j.arms[1]);
      fw.algebraic_b = algebraic_intersection(*found, o.B);
      fw.algebraic_c = algebraic_intersection(*found, o.C);
      r.witness = fw;
    }
    return r;
  }
  add(r, "order type (ii)", true);

  int B1 = arc_id(rb, 0, w, z), B2 = arc_id(rb, 0, z, y), B3 = arc_id(rb, 0, y, x), B4 = arc_id(rb, 0, x, w);
  int C1 = arc_id(rb, 1, w, x), C2 = arc_id(rb, 1, x, y), C3 = arc_id(rb, 1, y, z), C4 = arc_id(rb, 1, z, w);
  add(r, "boundary cycles match the six-holed sphere pattern",
      label_boundaries(r.neighborhood,
                       {{"D1", {{B1, 1}, {C4, 1}}},
                        {"D2", {{B4, -1}, {C1, -1}}},
                        {"D3", {{C2, 1}, {B3, 1}}},
                        {"D4", {{C4, -1}, {B2, 1}, {C2, -1}, {B4, 1}}},
                        {"D5", {{C1, 1}, {B3, -1}, {C3, 1}, {B1, -1}}},
                        {"D6", {{B2, -1}, {C3, -1}}}},
                       r.boundaries));
  demand_all(r);
  auto h = [&](const std::string& l) -> const HomologyVector& { return r.boundary(l).circle.homology; };
  HomologyVector hA = homology_class(o.A);
  add(r, "D4 ~ D5", is_zero(combine({{1, &h("D4")}, {-1, &h("D5")}})));
  add(r, "D4 ~ 0", is_zero(h("D4")));
  add(r, "D5 ~ 0", is_zero(h("D5")));
  bool essential = true;
  for (const char* l : {"D1", "D2", "D3", "D6"}) essential = essential && r.boundary(l).circle.essential;
  add(r, "D1, D2, D3, D6 essential", essential);
  add(r, "D1 + D3 ~ A", combine({{1, &h("D1")}, {1, &h("D3")}}) == hA);
  add(r, "D2 + D6 ~ -A", is_zero(combine({{1, &h("D2")}, {1, &h("D6")}, {1, &hA}})));
  demand_all(r);

  auto cls = [&](const std::string& l) -> const CurveClass& { return r.boundary(l).circle.curve->curve; };
  auto sep = [&](const std::string& l) { return r.boundary(l).circle.separating; };
  auto partner = [](const std::string& l) -> std::string {
    return l == "D1" ? "D3" : l == "D3" ? "D1" : l == "D2" ? "D6" : "D2";
  };
  const CurveClass& a = j.base;

  // Common duals: closed walks A -> l -> (B, C at one crossing) -> r, l in {D1, D3}, r in {D2, D6}.
  auto common_duals = [&](const std::string& branch) {
    DualSearch q;
    q.curves = {a, j.arms[0], j.arms[1]};
    std::map<std::string, int> index;
    for (const char* l : {"D1", "D2", "D3", "D6"}) {
      if (sep(l)) continue;
      const CurveClass& c = cls(l);
      int at = -1;
      for (size_t i = 0; i < q.curves.size(); ++i)
        if (q.curves[i] == c) at = static_cast<int>(i);
      if (at < 0) {
        at = static_cast<int>(q.curves.size());
        q.curves.push_back(c);
      }
      index[l] = at;
    }
    q.duals_of = {0, 1, 2};
    for (const auto& b : r.boundaries)
      if (b.circle.separating &&
          std::none_of(q.tubes.begin(), q.tubes.end(), [&](const CurveClass& t) { return t == b.circle.curve->curve; }))
        q.tubes.push_back(b.circle.curve->curve);
    for (const char* l : {"D2", "D6", "D1", "D3"})
      if (index.count(l) && index[l] >= 3) {
        q.distinguisher = index[l];
        break;
      }
    std::vector<std::vector<int>> routes;
    for (const char* l : {"D3", "D1"})
      for (const char* rr : {"D2", "D6"})
        for (bool bc : {true, false}) {
          std::vector<int> route = {0};
          if (index.count(l) && index[l] != 0) route.push_back(index[l]);
          route.push_back(bc ? 1 : 2);
          route.push_back(bc ? 2 : 1);
          if (index.count(rr) && index[rr] != 0) route.push_back(index[rr]);
          if (std::find(routes.begin(), routes.end(), route) == routes.end()) routes.push_back(route);
        }
    for (const auto& route : routes) {
      bool through = std::find(route.begin(), route.end(), q.distinguisher) != route.end();
      if (q.distinguisher < 0 || through) q.first_routes.push_back(route);
      if (q.distinguisher < 0 || !through) q.second_routes.push_back(route);
    }
    r.outcome = JointOutcome::common_duals;
    r.branch = branch;
    auto duals = find_dual_pair(q);
    if (!duals) throw SearchExhausted("no pair of disjoint common duals found for the 4-joint");
    r.duals = duals;
  };

  const std::pair<std::string, std::string> pairs[] = {{"D1", "D2"}, {"D1", "D6"}, {"D3", "D2"}, {"D3", "D6"}};
  for (const auto& [p, q] : pairs) {
    if (!sep(p) || !sep(q)) continue;
    if (!(cls(partner(p)) == a)) {
      set_mediator(r, cls(partner(p)), partner(p));
    } else if (!(cls(partner(q)) == a)) {
      set_mediator(r, cls(partner(q)), partner(q));
    } else if (!set_torus(r, cls(p), cls(q), p + ", " + q)) {
      common_duals("common duals (" + p + ", " + q + " do not bound a two-holed torus)");
    }
    demand_all(r);
    return r;
  }
  for (const char* p : {"D1", "D3", "D2", "D6"}) {
    if (!sep(p) || cls(partner(p)) == a) continue;
    set_mediator(r, cls(partner(p)), partner(p));
    demand_all(r);
    return r;
  }
  common_duals("common duals");
  return r;
}

JointReport analyze_joint(const Joint& j) {
  switch (j.k) {
    case 0: {
      JointReport r;
      r.joint = classify_joint(j.base, j.arms[0], j.arms[1]);
      r.outcome = JointOutcome::common_duals;
      r.branch = "common duals";
      r.duals = find_common_duals(r.joint);
      return r;
    }
    case 2: return analyze_two_joint(j);
    case 4: return analyze_four_joint(j);
    default: throw PreconditionError("joint analysis covers k in {0, 2, 4}");
  }
}

std::string check_joint_report(const JointReport& r) {
  const CurveClass &a = r.joint.base, &b = r.joint.arms[0], &c = r.joint.arms[1];
  try {
    Joint j = classify_joint(a, b, c);
    if (j.k != r.joint.k) return "recorded k does not match i(b,c)";
  } catch (const PreconditionError& e) {
    return std::string("not a joint: ") + e.what();
  }
  switch (r.outcome) {
    case JointOutcome::mediating_curve: {
      if (!r.mediator) return "mediating outcome without a curve";
      const CurveClass& d = *r.mediator;
      if (!zero_joint(a, b, d)) return "(a,b,d) is not a 0-joint";
      if (!zero_joint(a, d, c)) return "(a,d,c) is not a 0-joint";
      return "";
    }
    case JointOutcome::enclosing_torus: {
      if (!r.torus) return "torus outcome without a subsurface";
      const Subsurface& z = *r.torus;
      if (z.genus != 1 || z.boundary.size() != 2) return "subsurface is not a two-holed torus";
      std::vector<CurveClass> src(2);
      for (const auto& bc : z.boundary) {
        if (!bc.separating || !bc.curve) return "torus boundary is not an essential separating curve";
        if (bc.source_curve < 0 || bc.source_curve > 1) return "torus boundary has no source curve";
        src[bc.source_curve] = bc.curve->curve;
      }
      for (const CurveClass* x : {&a, &b, &c})
        if (!inside(z, src, *x)) return "a joint curve lies outside the torus";
      return "";
    }
    case JointOutcome::common_duals: {
      if (!r.duals) return "common-duals outcome without curves";
      const auto& [j1, j2] = *r.duals;
      if (j1 == j2) return "duals are equal";
      for (const CurveClass* jx : {&j1, &j2})
        for (const CurveClass* x : {&a, &b, &c})
          if (intersection_number(*jx, *x) != 1) return "a dual does not meet a joint curve exactly once";
      if (intersection_number(j1, j2) != 0) return "duals intersect";
      return "";
    }
    case JointOutcome::forbidden_configuration: return "forbidden crossing order (w,x,y,z) along B";
  }
  return "unknown outcome";
}

std::vector<CurveClass> bounding_pair_arms(const CurveClass& a, int max_weight) {
  const SurfacePtr& s = a.surface_ptr();
  HomologyVector h = homology_class({a, 1});
  HomologyVector neg = h;
  for (auto& x : neg) x = -x;
  std::vector<CurveClass> out;
  for (const auto& b : census(s, max_weight)) {
    if (b == a) continue;
    HomologyVector hb = homology_class({b, 1});
    if (hb != h && hb != neg) continue;
    if (is_bounding_pair(a, b)) out.push_back(b);
  }
  return out;
}

std::vector<Joint> joint_census(const SurfacePtr& s, int max_weight) {
  std::vector<Joint> out;
  for (const auto& base : basis_curves(s)) {
    auto arms = bounding_pair_arms(base.curve, max_weight);
    for (size_t i = 0; i < arms.size(); ++i)
      for (size_t k = i + 1; k < arms.size(); ++k)
        out.push_back({base.curve, {arms[i], arms[k]}, intersection_number(arms[i], arms[k])});
  }
  return out;
}

}  // namespace torelli
