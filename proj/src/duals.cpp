#include "torelli/duals.hpp"

#include <algorithm>
#include <set>

#include "torelli/census.hpp"
#include "torelli/classification.hpp"
#include "torelli/error.hpp"
#include "torelli/intersection.hpp"
#include "torelli/tubing.hpp"

namespace torelli {

std::optional<OrientedCurve> route_walk(const Diagram& d, const std::vector<int>& route,
                                        const std::vector<char>& blocking,
                                        const std::function<bool(const OrientedCurve&)>& accept) {
  const Surface& S = d.surface();
  WalkQuery q;
  q.blocking = blocking;
  for (int c : route) q.blocking[c] = 1;
  for (int c : route) {
    std::vector<int> ps;
    for (size_t p = 0; p < d.portals().size(); ++p) {
      const auto& P = d.portals()[p];
      if (P.kind == Diagram::PortalKind::piece && P.curve == c) ps.push_back(static_cast<int>(p));
    }
    q.stages.push_back(std::move(ps));
  }
  q.closed = true;
  std::set<int> starts;
  for (int p : q.stages[0]) {
    starts.insert(d.portals()[p].cell[0]);
    starts.insert(d.portals()[p].cell[1]);
  }
  std::set<EdgePath> seen;
  for (int c : starts) {
    q.start_cells = {c};
    auto w = find_walk(d, q);
    if (!w) continue;
    EdgePath p = reduce_path(S, walk_path(d, *w), true);
    if (p.empty() || !seen.insert(p).second) continue;
    if (!is_essential(S, p)) continue;
    auto oc = simple_oriented_class(d.surface_ptr(), p);
    if (oc && accept(*oc)) return oc;
  }
  return std::nullopt;
}

std::optional<std::pair<CurveClass, CurveClass>> find_dual_pair(const DualSearch& q) {
  const int n = static_cast<int>(q.curves.size());
  Diagram d = Diagram::from_classes(q.curves);
  std::vector<char> block(n, 1);
  auto is_dual = [&](const CurveClass& j) {
    for (int k : q.duals_of)
      if (intersection_number(j, q.curves[k]) != 1) return false;
    return true;
  };
  std::optional<std::pair<CurveClass, CurveClass>> found;
  for (const auto& r1 : q.first_routes) {
    route_walk(d, r1, block, [&](const OrientedCurve& j1) {
      if (!is_dual(j1.curve)) return false;
      if (q.distinguisher >= 0 && intersection_number(j1.curve, q.curves[q.distinguisher]) != 1) return false;
      std::vector<CurveClass> cs = q.curves;
      cs.push_back(j1.curve);
      Diagram d2 = Diagram::from_classes(cs);
      std::vector<char> block2(n + 1, 1);
      for (const auto& r2 : q.second_routes) {
        auto j2 = route_walk(d2, r2, block2, [&](const OrientedCurve& j) {
          if (j.curve == j1.curve || !is_dual(j.curve)) return false;
          if (q.distinguisher >= 0 && intersection_number(j.curve, q.curves[q.distinguisher]) != 0) return false;
          return intersection_number(j.curve, j1.curve) == 0;
        });
        if (j2) {
          found = std::make_pair(j1.curve, j2->curve);
          return true;
        }
      }
      return false;
    });
    if (found) return found;
  }
  if (q.tubes.empty() || q.distinguisher >= 0) return std::nullopt;
  std::vector<CurveClass> cs = q.curves;
  cs.insert(cs.end(), q.tubes.begin(), q.tubes.end());
  Diagram dt = Diagram::from_classes(cs);
  std::vector<char> block_t(cs.size(), 1);
  for (const auto& r1 : q.first_routes) {
    route_walk(dt, r1, block_t, [&](const OrientedCurve& j1) {
      if (!is_dual(j1.curve)) return false;
      std::vector<Diagram::Input> inputs;
      for (const auto& c : cs) inputs.push_back(geodesic_input({c, 1}));
      inputs.push_back(geodesic_input(j1));
      const int ji = static_cast<int>(cs.size());
      for (size_t t = q.curves.size(); t < cs.size() && !found; ++t) {
        BandQuery bq{inputs, ji, static_cast<int>(t), {}, std::vector<char>(inputs.size(), 1)};
        auto j2 = band_sum(dt.surface_ptr(), bq, [&](const OrientedCurve& j) {
          return !(j.curve == j1.curve) && is_dual(j.curve) && intersection_number(j.curve, j1.curve) == 0;
        });
        if (j2) found = std::make_pair(j1.curve, j2->curve);
      }
      return found.has_value();
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

// Nonseparating classes inside the piece of S - (a u b u c) bounded by b and c.
std::vector<CurveClass> curves_in_middle(const CurveClass& a, const CurveClass& b, const CurveClass& c, int w) {
  std::vector<CurveClass> out;
  for (const auto& d : census(a.surface_ptr(), w)) {
    if (d == a || d == b || d == c || is_null_homologous(d)) continue;
    if (!are_disjoint(d, a) || !are_disjoint(d, b) || !are_disjoint(d, c)) continue;
    Diagram dg = Diagram::from_classes({a, b, c, d});
    auto pieces = cut_pieces(dg, {0, 1, 2});
    const auto& p = pieces[piece_of_curve(pieces, dg, 3)];
    std::set<int> src;
    for (const auto& bc : p.boundary) src.insert(bc.source_curve);
    if (src == std::set<int>{1, 2}) out.push_back(d);
  }
  return out;
}

}  // namespace

std::pair<CurveClass, CurveClass> zero_joint_duals(const CurveClass& a, const CurveClass& b, const CurveClass& c) {
  Joint j = classify_joint(a, b, c);
  require(j.k == 0, "not a 0-joint");
  auto pieces = cut_along({a, b, c});
  ensure(pieces.size() == 3, "0-joint does not cut S into three pieces");
  const Subsurface* q = nullptr;
  for (const auto& p : pieces) {
    std::set<int> src;
    for (const auto& bc : p.boundary) src.insert(bc.source_curve);
    if (src == std::set<int>{1, 2}) q = &p;
  }
  ensure(q != nullptr, "no piece between the arms");
  if (q->genus == 0) throw PreconditionError("no dual circles D1, D2 available: the piece between the arms has genus 0");
  // D1: a nonseparating circle of the middle piece, lightest first. D2: the band sum of b
  // with D1 along an arc in the middle piece, so that D1 and D2 split it into pants
  // (b, D1, D2) and (D1, D2, c).
  const SurfacePtr& s = a.surface_ptr();
  for (const auto& d1 : curves_in_middle(a, b, c, 12)) {
    BandQuery bq;
    bq.inputs = {geodesic_input({a, 1}), geodesic_input({b, 1}), geodesic_input({c, 1}), geodesic_input({d1, 1})};
    bq.first = 1;
    bq.second = 3;
    bq.blocking = {1, 1, 1, 1};
    std::optional<std::pair<CurveClass, CurveClass>> found;
    band_sum(s, bq, [&](const OrientedCurve& oc) {
      const CurveClass& d2 = oc.curve;
      if (d2 == a || d2 == b || d2 == c || d2 == d1 || is_null_homologous(d2)) return false;
      if (!are_disjoint(d2, a) || !are_disjoint(d2, b) || !are_disjoint(d2, c) || !are_disjoint(d2, d1))
        return false;
      auto parts = cut_along({a, b, c, d1, d2});
      bool left = false, right = false;
      for (const auto& p : parts) {
        std::multiset<int> src;
        for (const auto& bc : p.boundary) src.insert(bc.source_curve);
        left = left || src == std::multiset<int>{1, 3, 4};
        right = right || src == std::multiset<int>{2, 3, 4};
      }
      if (!left || !right) return false;
      DualSearch ds;
      ds.curves = {a, b, c, d1, d2};
      ds.first_routes = {{0, 1, 3, 2}};
      ds.second_routes = {{0, 1, 4, 2}};
      ds.duals_of = {0, 1, 2};
      ds.distinguisher = 3;
      found = find_dual_pair(ds);
      return found.has_value();
    });
    if (found) return *found;
  }
  throw SearchExhausted("no pair of common duals found for the 0-joint");
}

}  // namespace torelli
