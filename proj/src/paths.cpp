#include "torelli/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "torelli/census.hpp"
#include "torelli/error.hpp"
#include "torelli/intersection.hpp"
#include "torelli/tubing.hpp"

namespace torelli {

namespace {

constexpr int kSearchWeights[] = {12, 16, 20, 24, 28};
constexpr int kBandsPerPair = 4;

bool separating(const CurveClass& c) { return is_null_homologous(c); }

std::string name(const CurveClass& c) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.coords().size(); ++i) os << (i ? "," : "") << c.coords()[i];
  os << "]";
  return os.str();
}

bool in_bp(const CurveClass& a, const CurveClass& b) { return is_bounding_pair(a, b).has_value(); }

// Collapses repeats and jumps ahead to the farthest later vertex disjoint from the current one.
std::vector<CurveClass> shortcut(const std::vector<CurveClass>& v) {
  std::vector<CurveClass> out;
  size_t i = 0;
  while (true) {
    out.push_back(v[i]);
    if (i + 1 == v.size()) break;
    size_t next = i + 1;
    for (size_t j = v.size() - 1; j > i + 1; --j)
      if (v[j] == v[i] || are_disjoint(v[j], v[i])) {
        next = j;
        break;
      }
    if (v[next] == v[i]) {
      i = next;
      out.pop_back();
      continue;
    }
    i = next;
  }
  return out;
}

SepPathCert make_sep(std::vector<CurveClass> v) {
  SepPathCert p;
  p.vertices = std::move(v);
  for (size_t k = 0; k + 1 < p.vertices.size(); ++k)
    p.steps.push_back(intersection_number(p.vertices[k], p.vertices[k + 1]));
  return p;
}

void validate(const SepPathCert& p) {
  std::string err = check_sep_path(p);
  if (!err.empty()) throw InvariantViolation("constructed separating path fails its check: " + err);
}

}  // namespace

SurgeryOutcome surger_once_detailed(const CurveClass& a, const CurveClass& b) {
  require(a.surface_ptr() == b.surface_ptr(), "curves on different surfaces");
  require(separating(a) && separating(b), "surgery needs separating curves");
  const SurfacePtr& s = a.surface_ptr();
  const int k = intersection_number(a, b);
  if (k <= 4) throw PreconditionError("base case: i(a,b) <= 4, no surgery needed");
  // R: the side of a of larger genus, left on ties.
  auto pieces = cut_along({a});
  int side = 1, best = -1;
  for (const auto& p : pieces)
    for (const auto& bc : p.boundary)
      if (p.genus > best) {
        best = p.genus;
        side = bc.source_side;
      }
  ensure(best >= 2, "no side of genus at least 2");
  std::vector<Diagram::Input> inputs = {geodesic_input({a, side}), geodesic_input({b, 1})};
  Diagram d(s, inputs);
  ensure(d.crossing_count(0, 1) == k, "geodesic drawing is not in minimal position");
  auto good = [&](const CurveClass& c) {
    return separating(c) && intersection_number(a, c) <= 4 && intersection_number(c, b) < k;
  };
  auto arcs = left_arcs(d, 0, 1);
  for (size_t r = 0; r < arcs.size(); ++r) {
    ArcSurgery su = surger_along(d, inputs, 0, 1, arcs[r].first, arcs[r].second);
    for (const EdgePath* path : {&su.first_path, &su.second_path}) {
      EdgePath p = reduce_path(*s, *path, true);
      if (p.empty() || !is_essential(*s, p)) continue;
      auto oc = simple_oriented_class(s, p);
      if (oc && separating(oc->curve) && good(oc->curve)) return {oc->curve, false, static_cast<int>(r)};
    }
  }
  // Neither surgered curve separates: tube them together across a, first avoiding b.
  for (int avoid_b : {1, 0}) {
    for (size_t r = 0; r < arcs.size(); ++r) {
      ArcSurgery su = surger_along(d, inputs, 0, 1, arcs[r].first, arcs[r].second);
      auto oc = tube(s, su, 0, {1, static_cast<char>(avoid_b)},
                     [&](const OrientedCurve& c) { return good(c.curve); });
      if (oc) return {oc->curve, true, static_cast<int>(r)};
    }
  }
  throw SearchExhausted("no tube arc produced a separating curve with the required intersections");
}

CurveClass surger_once(const CurveClass& a, const CurveClass& b) { return surger_once_detailed(a, b).curve; }

SepPathCert base_case_path(const CurveClass& a, const CurveClass& b) {
  require(separating(a) && separating(b), "base case needs separating curves");
  const int k = intersection_number(a, b);
  if (k != 2 && k != 4) throw PreconditionError("base case needs i(a,b) in {2, 4}");
  const SurfacePtr& s = a.surface_ptr();
  std::vector<CurveClass> pool;
  auto add = [&](const CurveClass& c) {
    if (c == a || c == b) return;
    for (const auto& x : pool)
      if (x == c) return;
    pool.push_back(c);
  };
  // Boundary curves of N(a u b) and band sums of pairs of them outside a and b.
  std::vector<OrientedCurve> rims;
  for (const auto& bc : regular_neighborhood({a, b}).boundary) {
    if (!bc.essential) continue;
    if (bc.separating) add(bc.curve->curve);
    bool fresh = !(bc.curve->curve == a) && !(bc.curve->curve == b);
    for (const auto& r : rims) fresh = fresh && !(r.curve == bc.curve->curve);
    if (fresh) rims.push_back(*bc.curve);
  }
  std::vector<Diagram::Input> inputs = {geodesic_input({a, 1}), geodesic_input({b, 1})};
  for (const auto& r : rims) inputs.push_back(geodesic_input(r));
  for (size_t i = 2; i < inputs.size(); ++i)
    for (size_t j = i + 1; j < inputs.size(); ++j) {
      BandQuery q{inputs, static_cast<int>(i), static_cast<int>(j), {}, std::vector<char>(inputs.size(), 1)};
      int found = 0;
      band_sum(s, q, [&](const OrientedCurve& c) {
        if (separating(c.curve) && are_disjoint(c.curve, a) && are_disjoint(c.curve, b)) {
          add(c.curve);
          ++found;
        }
        return found >= kBandsPerPair;
      });
    }
  size_t seen_census = 0;
  for (int w : kSearchWeights) {
    const auto& cen = separating_census(s, w);
    for (size_t i = seen_census; i < cen.size(); ++i) add(cen[i]);
    seen_census = cen.size();
    // Breadth-first search on {a} + pool + {b} with disjointness as adjacency.
    std::vector<CurveClass> nodes = {a};
    nodes.insert(nodes.end(), pool.begin(), pool.end());
    nodes.push_back(b);
    const int n = static_cast<int>(nodes.size());
    std::vector<int> prev(n, -2);
    std::deque<int> dq{0};
    prev[0] = -1;
    while (!dq.empty() && prev[n - 1] == -2) {
      int u = dq.front();
      dq.pop_front();
      for (int v = 1; v < n; ++v) {
        if (prev[v] != -2) continue;
        if (!are_disjoint(nodes[u], nodes[v])) continue;
        prev[v] = u;
        dq.push_back(v);
      }
    }
    if (prev[n - 1] == -2) continue;
    std::vector<CurveClass> path;
    for (int v = n - 1; v >= 0; v = prev[v]) path.push_back(nodes[v]);
    std::reverse(path.begin(), path.end());
    SepPathCert p = make_sep(path);
    validate(p);
    return p;
  }
  throw SearchExhausted("no separating path found within the search weight bound");
}

SepPathCert sep_path(const CurveClass& a, const CurveClass& b) {
  require(a.surface_ptr() == b.surface_ptr(), "curves on different surfaces");
  require(a.surface().genus() >= 3, "separating curve complex paths need genus at least 3");
  require(separating(a) && separating(b), "endpoints must be separating");
  std::vector<CurveClass> v;
  if (a == b) {
    v = {a};
  } else {
    const int k = intersection_number(a, b);
    if (k == 0) {
      v = {a, b};
    } else if (k <= 4) {
      v = base_case_path(a, b).vertices;
    } else {
      CurveClass c = surger_once(a, b);
      std::vector<CurveClass> head = (c == a)                       ? std::vector<CurveClass>{a}
                                     : intersection_number(a, c) == 0 ? std::vector<CurveClass>{a, c}
                                                                      : base_case_path(a, c).vertices;
      auto tail = sep_path(c, b).vertices;
      v = head;
      v.insert(v.end(), tail.begin() + 1, tail.end());
    }
  }
  SepPathCert p = make_sep(shortcut(v));
  validate(p);
  return p;
}

SepPathCert genus1_refine(const SepPathCert& in, std::vector<int>* counts) {
  require(!in.vertices.empty(), "empty path");
  std::string err = check_sep_path(in);
  if (!err.empty()) throw PreconditionError("input path is invalid: " + err);
  require(min_side_genus(in.vertices.front()) == 1 && min_side_genus(in.vertices.back()) == 1,
          "endpoints must have a genus-1 side");
  std::vector<CurveClass> v = in.vertices;
  const SurfacePtr& s = v[0].surface_ptr();
  auto high = [&](const std::vector<CurveClass>& w) {
    int n = 0;
    for (const auto& c : w) n += min_side_genus(c) > 1;
    return n;
  };
  int count = high(v);
  if (counts) counts->push_back(count);
  while (count > 0) {
    size_t k = 1;
    while (k + 1 < v.size() && min_side_genus(v[k]) == 1) ++k;
    ensure(k + 1 < v.size(), "genus > 1 vertex at an endpoint");
    if (v[k - 1] == v[k + 1]) {
      v.erase(v.begin() + static_cast<long>(k), v.begin() + static_cast<long>(k) + 2);
    } else {
      int sp = side_of(v[k], v[k - 1]), sn = side_of(v[k], v[k + 1]);
      if (sp != sn) {
        v.erase(v.begin() + static_cast<long>(k));
      } else {
        // Replace by a genus-1 curve on the far side Q of v[k].
        std::optional<CurveClass> rep;
        for (int w : kSearchWeights) {
          for (const auto& c : separating_census(s, w)) {
            if (c == v[k] || min_side_genus(c) != 1 || !are_disjoint(c, v[k])) continue;
            if (side_of(v[k], c) != -sp) continue;
            rep = c;
            break;
          }
          if (rep) break;
        }
        if (!rep) throw SearchExhausted("no genus-1 curve found on the far side of " + name(v[k]));
        ensure(are_disjoint(*rep, v[k - 1]) && are_disjoint(*rep, v[k + 1]), "replacement meets a neighbour");
        v[k] = *rep;
      }
    }
    int next = high(v);
    ensure(next < count, "refinement did not reduce the number of genus > 1 vertices");
    count = next;
    if (counts) counts->push_back(count);
  }
  SepPathCert p = make_sep(v);
  validate(p);
  return p;
}

BpPathCert bp_short_path(const CurveClass& a, const CurveClass& b, const CurveClass& c, std::vector<BpStep>* trace) {
  auto bpb = is_bounding_pair(a, b);
  auto bpc = is_bounding_pair(a, c);
  if (!bpb) throw PreconditionError("(a,b) is not a bounding pair");
  if (!bpc) throw PreconditionError("(a,c) is not a bounding pair");
  const SurfacePtr& s = a.surface_ptr();
  BpPathCert cert{a, {b}, {}};
  CurveClass cur = b;
  int k = cur == c ? 0 : intersection_number(cur, c);
  const int dir_c = bpc->direction;
  while (k > 4) {
    const int dir_b = is_bounding_pair(a, cur)->direction;
    // X: cur reversed from its homologous orientation, so R_B (its right side) is on X's left.
    std::vector<Diagram::Input> inputs = {geodesic_input({cur, -dir_b}), geodesic_input({c, dir_c}),
                                          geodesic_input({a, 1})};
    Diagram d(s, inputs);
    ensure(d.crossing_count(0, 1) == k, "geodesic drawing is not in minimal position");
    std::optional<CurveClass> next;
    bool tubed = false;
    auto good = [&](const CurveClass& x, int max_step) {
      if (x == a || x == cur || !in_bp(a, x)) return false;
      return intersection_number(x, c) <= k - 2 && intersection_number(x, cur) <= max_step;
    };
    auto arcs = left_arcs(d, 0, 1);
    for (size_t r = 0; r < arcs.size() && !next; ++r) {
      ArcSurgery su = surger_along(d, inputs, 0, 1, arcs[r].first, arcs[r].second);
      for (const EdgePath* path : {&su.first_path, &su.second_path}) {
        EdgePath p = reduce_path(*s, *path, true);
        if (p.empty() || !is_essential(*s, p)) continue;
        auto oc = simple_oriented_class(s, p);
        if (oc && good(oc->curve, 0)) {
          next = oc->curve;
          break;
        }
      }
    }
    for (size_t r = 0; r < arcs.size() && !next; ++r) {
      ArcSurgery su = surger_along(d, inputs, 0, 1, arcs[r].first, arcs[r].second);
      auto oc = tube(s, su, 0, {1, 1, 1}, [&](const OrientedCurve& x) { return good(x.curve, 4); });
      if (oc) {
        next = oc->curve;
        tubed = true;
      }
    }
    if (!next) throw SearchExhausted("no bounding-pair step found from " + name(cur));
    int k2 = *next == c ? 0 : intersection_number(*next, c);
    if (trace) trace->push_back({cur, *next, k, k2, tubed});
    cert.steps.push_back(intersection_number(cur, *next));
    cert.vertices.push_back(*next);
    cur = *next;
    k = k2;
  }
  if (!(cur == c)) {
    cert.steps.push_back(k);
    cert.vertices.push_back(c);
  }
  std::string err = check_bp_path(cert);
  if (!err.empty()) throw InvariantViolation("constructed bounding-pair path fails its check: " + err);
  return cert;
}

CurveClass find_enclosing_torus(const CurveClass& a, const std::vector<CurveClass>& avoid) {
  require(!separating(a), "curve must be nonseparating");
  for (size_t i = 0; i < avoid.size(); ++i) {
    require(are_disjoint(a, avoid[i]) && !(a == avoid[i]), "avoided curves must be disjoint from a");
    for (size_t j = i + 1; j < avoid.size(); ++j)
      require(are_disjoint(avoid[i], avoid[j]), "avoided curves must be pairwise disjoint");
  }
  const SurfacePtr& s = a.surface_ptr();
  for (int w : kSearchWeights) {
    for (const auto& e : separating_census(s, w)) {
      if (!are_disjoint(e, a)) continue;
      bool ok = true;
      for (const auto& x : avoid) ok = ok && !(x == e) && are_disjoint(e, x);
      if (!ok) continue;
      auto pieces = cut_along({e});
      int side = side_of(e, a);
      for (const auto& p : pieces)
        if (p.genus == 1 && p.boundary[0].source_side == side) return e;
    }
  }
  throw SearchExhausted("no enclosing torus found within the search weight bound");
}

std::string check_sep_path(const SepPathCert& p) {
  if (p.vertices.empty()) return "path has no vertices";
  if (p.steps.size() + 1 != p.vertices.size()) return "step count does not match vertex count";
  for (size_t k = 0; k < p.vertices.size(); ++k) {
    const auto& v = p.vertices[k];
    if (!v.valid()) return "vertex " + std::to_string(k) + " is not an essential class";
    if (!is_null_homologous(v)) return "vertex " + std::to_string(k) + " is not separating";
    if (cut_along({v}).size() != 2) return "vertex " + std::to_string(k) + " does not cut the surface in two";
  }
  for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    int i = intersection_number(p.vertices[k], p.vertices[k + 1]);
    if (i != 0) return "vertices " + std::to_string(k) + " and " + std::to_string(k + 1) + " intersect";
    if (p.vertices[k] == p.vertices[k + 1]) return "vertices " + std::to_string(k) + " and " + std::to_string(k + 1) + " are equal";
    if (p.steps[k] != 0) return "step " + std::to_string(k) + " records a nonzero intersection";
  }
  return "";
}

std::string check_bp_path(const BpPathCert& p) {
  if (p.vertices.empty()) return "path has no vertices";
  if (p.steps.size() + 1 != p.vertices.size()) return "step count does not match vertex count";
  for (size_t k = 0; k < p.vertices.size(); ++k)
    if (!is_bounding_pair(p.base, p.vertices[k])) return "vertex " + std::to_string(k) + " does not form a bounding pair with the base";
  for (size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    if (p.vertices[k] == p.vertices[k + 1]) return "vertices " + std::to_string(k) + " and " + std::to_string(k + 1) + " are equal";
    int i = intersection_number(p.vertices[k], p.vertices[k + 1]);
    if (i != p.steps[k]) return "step " + std::to_string(k) + " records the wrong intersection number";
    if (i % 2 != 0 || i > 4) return "step " + std::to_string(k) + " has intersection number " + std::to_string(i);
  }
  return "";
}

}  // namespace torelli
