#include "torelli/subsurface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "torelli/error.hpp"
#include "torelli/intersection.hpp"

namespace torelli {

BoundaryCircle make_boundary(const SurfacePtr& s, EdgePath path) {
  BoundaryCircle b;
  b.path = std::move(path);
  b.homology = homology_of_path(*s, b.path);
  b.essential = !b.path.empty() && is_essential(*s, b.path);
  if (b.essential) {
    b.curve = simple_oriented_class(s, b.path);
    ensure(b.curve.has_value(), "boundary circle is not simple");
    b.separating = std::all_of(b.homology.begin(), b.homology.end(), [](int v) { return v == 0; });
  }
  return b;
}

std::vector<Subsurface> cut_pieces(const Diagram& d, const std::vector<int>& curves) {
  const Surface& S = d.surface();
  std::vector<char> cut(d.num_curves(), 0);
  for (int c : curves) cut[c] = 1;
  for (const auto& x : d.crossings()) {
    if (cut[x.curve[0]] && cut[x.curve[1]]) {
      std::ostringstream os;
      os << "curves " << x.curve[0] << " and " << x.curve[1] << " cross in triangle " << x.triangle;
      throw PreconditionError(os.str());
    }
  }
  for (const auto& x : d.crossings())
    require(!cut[x.curve[0]] && !cut[x.curve[1]], "cut curves must not cross other curves of the diagram");
  int npieces = 0;
  std::vector<int> comp = d.components(cut, &npieces);
  std::vector<Subsurface> out(npieces);
  std::vector<long> V(npieces, 0), E(npieces, 0), F(npieces, 0);
  for (size_t c = 0; c < d.cells().size(); ++c) {
    int k = comp[c];
    out[k].cells.push_back(static_cast<int>(c));
    F[k]++;
    if (d.cells()[c].has_corner) out[k].contains_vertex = true;
  }
  int with_vertex = 0;
  for (auto& p : out) with_vertex += p.contains_vertex;
  ensure(with_vertex == 1, "vertex split between pieces");
  for (int k = 0; k < npieces; ++k) V[k] += out[k].contains_vertex;
  // Side segments: one edge each; points between consecutive segments: one vertex per side.
  int prev_edge = -1;
  int prev_cell = -1;
  for (size_t pid = 0; pid < d.portals().size(); ++pid) {
    const auto& p = d.portals()[pid];
    if (p.kind == Diagram::PortalKind::side) {
      int k = comp[p.cell[0]];
      E[k]++;
      int e = S.edge_of(p.half_edge);
      if (e == prev_edge) {
        V[comp[prev_cell]]++;
        V[k]++;
      }
      prev_edge = e;
      prev_cell = p.cell[0];
    } else if (cut[p.curve]) {
      E[comp[p.cell[0]]]++;
      E[comp[p.cell[1]]]++;
    } else {
      E[comp[p.cell[0]]]++;
    }
  }
  // Interior crossings of uncut curves are vertices; their pieces are interior edges (counted above).
  for (const auto& x : d.crossings()) {
    int pid = d.piece_portal(x.curve[0], x.step[0], 0);
    V[comp[d.portals()[pid].cell[0]]]++;
  }
  // A point of an uncut curve stays one vertex; it was counted on both of its sides above.
  for (int c = 0; c < d.num_curves(); ++c) {
    if (cut[c]) continue;
    for (int j = 0; j < d.length(c); ++j) V[comp[d.portals()[d.piece_portal(c, j, 0)].cell[0]]]--;
  }
  for (int c : curves) {
    const auto& P = d.portals()[d.piece_portal(c, 0, 0)];
    for (int side : {1, -1}) {
      int k = comp[side > 0 ? P.cell[0] : P.cell[1]];
      EdgePath path = side > 0 ? reverse_path(S, d.exits(c)) : d.exits(c);
      BoundaryCircle b = make_boundary(d.surface_ptr(), path);
      b.source_curve = c;
      b.source_side = side;
      out[k].boundary.push_back(std::move(b));
    }
  }
  long total = 0;
  for (int k = 0; k < npieces; ++k) {
    out[k].parent = d.surface_ptr();
    long chi = V[k] - E[k] + F[k];
    total += chi;
    out[k].euler_characteristic = static_cast<int>(chi);
    long twice = 2 - chi - out[k].boundary_count();
    ensure(twice >= 0 && twice % 2 == 0, "piece has inconsistent Euler characteristic");
    out[k].genus = static_cast<int>(twice / 2);
  }
  ensure(total == 2 - 2 * S.genus(), "pieces do not add up to the surface");
  return out;
}

std::vector<Subsurface> cut_along(const std::vector<CurveClass>& curves) {
  require(!curves.empty(), "no curves to cut along");
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j)
      if (!are_disjoint(curves[i], curves[j])) {
        std::ostringstream os;
        os << "curves " << i << " and " << j << " intersect (i = " << intersection_number(curves[i], curves[j]) << ")";
        throw PreconditionError(os.str());
      }
  Diagram d = Diagram::from_classes(curves);
  std::vector<int> all(curves.size());
  std::iota(all.begin(), all.end(), 0);
  return cut_pieces(d, all);
}

std::vector<Subsurface> cut_along(const SurfacePtr& s, const std::vector<TracedCurve>& curves) {
  require(!curves.empty(), "no curves to cut along");
  for (const auto& c : curves) require(c.frame == curves[0].frame, "traced curves must share one frame");
  Diagram d = Diagram::from_traced(s, curves);
  std::vector<int> all(curves.size());
  std::iota(all.begin(), all.end(), 0);
  return cut_pieces(d, all);
}

Subsurface neighborhood_in(const Diagram& d, const std::vector<int>& curves) {
  // Connected union required.
  std::vector<int> parent(d.num_curves());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> in(d.num_curves(), 0);
  for (int c : curves) in[c] = 1;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : d.crossings())
    if (in[x.curve[0]] && in[x.curve[1]]) parent[find(x.curve[0])] = find(x.curve[1]);
  for (int c : curves) require(find(c) == find(curves[0]), "union of curves is not connected");

  Ribbon rb = ribbon_boundaries(d, curves);
  Subsurface n;
  n.parent = d.surface_ptr();
  n.euler_characteristic = -rb.vertices;
  for (auto& b : rb.boundaries) {
    BoundaryCircle bc = make_boundary(d.surface_ptr(), b.path);
    bc.arcs = b.arcs;
    n.boundary.push_back(std::move(bc));
  }
  std::sort(n.boundary.begin(), n.boundary.end(), [](const BoundaryCircle& x, const BoundaryCircle& y) {
    int mx = x.path.empty() ? -1 : *std::min_element(x.path.begin(), x.path.end());
    int my = y.path.empty() ? -1 : *std::min_element(y.path.begin(), y.path.end());
    return mx != my ? mx < my : x.path < y.path;
  });
  int twice = 2 - n.euler_characteristic - n.boundary_count();
  ensure(twice >= 0 && twice % 2 == 0, "neighbourhood has inconsistent Euler characteristic");
  n.genus = twice / 2;
  return n;
}

Subsurface regular_neighborhood(const std::vector<CurveClass>& curves) {
  require(!curves.empty(), "no curves");
  Diagram d = Diagram::from_classes(curves);
  std::vector<int> all(curves.size());
  std::iota(all.begin(), all.end(), 0);
  return neighborhood_in(d, all);
}

Subsurface regular_neighborhood(const SurfacePtr& s, const std::vector<TracedCurve>& curves) {
  Diagram d = Diagram::from_traced(s, curves);
  for (int i = 0; i < d.num_curves(); ++i)
    for (int j = i + 1; j < d.num_curves(); ++j)
      if (auto b = find_bigon(d, i, j)) {
        std::ostringstream os;
        os << "curves " << i << " and " << j << " bound a bigon at crossings " << b->p << " and " << b->q
           << " (triangle " << b->triangle << ")";
        throw PreconditionError(os.str());
      }
  std::vector<int> all(curves.size());
  std::iota(all.begin(), all.end(), 0);
  return neighborhood_in(d, all);
}

}  // namespace torelli
