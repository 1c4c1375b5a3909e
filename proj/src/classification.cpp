#include "torelli/classification.hpp"

#include <algorithm>
#include <sstream>

#include "torelli/duals.hpp"
#include "torelli/error.hpp"
#include "torelli/intersection.hpp"

namespace torelli {

namespace {

bool is_zero(const HomologyVector& h) {
  return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
}

HomologyVector negated(HomologyVector h) {
  for (int& v : h) v = -v;
  return h;
}

}  // namespace

SeparationReport classify_curve(const CurveClass& a) {
  require(a.valid(), "curve is not an essential class");
  SeparationReport r{a, false, std::nullopt};
  const bool null_hom = is_null_homologous(a);
  auto pieces = cut_along({a});
  ensure(null_hom == (pieces.size() == 2), "homology and cutting disagree on separation");
  r.separating = null_hom;
  if (r.separating) {
    int g0 = pieces[0].genus, g1 = pieces[1].genus;
    ensure(g0 >= 1 && g1 >= 1, "separating curve bounds a disk");
    r.side_genera = std::make_pair(std::min(g0, g1), std::max(g0, g1));
  }
  return r;
}

int min_side_genus(const CurveClass& a) {
  auto r = classify_curve(a);
  require(r.separating, "curve is not separating");
  return r.side_genera->first;
}

int piece_of_curve(const std::vector<Subsurface>& pieces, const Diagram& d, int curve) {
  int cell = d.portals()[d.piece_portal(curve, 0, 0)].cell[0];
  for (size_t k = 0; k < pieces.size(); ++k)
    if (std::binary_search(pieces[k].cells.begin(), pieces[k].cells.end(), cell)) return static_cast<int>(k);
  throw InvariantViolation("curve lies in no piece");
}

int side_of(const CurveClass& c, const CurveClass& x) {
  require(!(c == x), "a curve has no side relative to itself");
  require(are_disjoint(c, x), "curves intersect");
  Diagram d = Diagram::from_classes({c, x});
  auto pieces = cut_pieces(d, {0});
  if (pieces.size() == 1) return 0;
  int k = piece_of_curve(pieces, d, 1);
  for (const auto& b : pieces[k].boundary)
    if (b.source_curve == 0) return b.source_side;
  throw InvariantViolation("piece is not bounded by the cutting curve");
}

std::optional<BoundingPair> is_bounding_pair(const CurveClass& a, const CurveClass& b) {
  require(a.surface_ptr() == b.surface_ptr(), "curves on different surfaces");
  if (a == b) return std::nullopt;
  HomologyVector ha = homology_class(OrientedCurve{a, 1});
  HomologyVector hb = homology_class(OrientedCurve{b, 1});
  if (is_zero(ha) || is_zero(hb)) return std::nullopt;
  int dir = 0;
  if (ha == hb) dir = 1;
  else if (ha == negated(hb)) dir = -1;
  else return std::nullopt;
  if (!are_disjoint(a, b)) return std::nullopt;
  auto pieces = cut_along({a, b});
  if (pieces.size() != 2) return std::nullopt;
  BoundingPair bp{a, b, dir, {}, {}};
  for (auto& p : pieces) {
    ensure(p.boundary_count() == 2, "bounding pair side without two boundary circles");
    for (const auto& bc : p.boundary)
      if (bc.source_curve == 0) (bc.source_side > 0 ? bp.left : bp.right) = p;
  }
  ensure(bp.left.parent && bp.right.parent, "bounding pair sides not found");
  return bp;
}

Joint classify_joint(const CurveClass& a, const CurveClass& b, const CurveClass& c) {
  if (b == c) throw PreconditionError("not a joint: arms are isotopic");
  if (!is_bounding_pair(a, b)) throw PreconditionError("not a joint: (a,b) is not a bounding pair");
  if (!is_bounding_pair(a, c)) throw PreconditionError("not a joint: (a,c) is not a bounding pair");
  Joint j{a, {b, c}, intersection_number(b, c)};
  if (j.k % 2 != 0) {
    std::ostringstream os;
    os << "joint with odd intersection number " << j.k;
    throw InvariantViolation(os.str());
  }
  return j;
}

std::optional<Subsurface> detect_two_holed_torus(const CurveClass& a, const CurveClass& b) {
  require(!(a == b), "curves are isotopic");
  require(is_null_homologous(a) && is_null_homologous(b), "curves must be separating");
  require(are_disjoint(a, b), "curves intersect");
  auto pieces = cut_along({a, b});
  ensure(pieces.size() == 3, "two disjoint separating curves must cut off three pieces");
  for (auto& p : pieces) {
    if (p.boundary_count() != 2) continue;
    return p.genus == 1 ? std::optional<Subsurface>(p) : std::nullopt;
  }
  throw InvariantViolation("no piece bounded by both curves");
}

std::pair<CurveClass, CurveClass> find_common_duals(const Joint& j) {
  require(j.k == 0, "common duals are constructed for 0-joints");
  return zero_joint_duals(j.base, j.arms[0], j.arms[1]);
}

}  // namespace torelli
