#include "torelli/curve.hpp"

#include <algorithm>
#include <numeric>

#include "torelli/error.hpp"

namespace torelli {

CurveClass adopt_canonical(SurfacePtr s, std::vector<int> coords) {
  CurveClass c;
  c.surface_ = std::move(s);
  c.coords_ = std::move(coords);
  return c;
}

int CurveClass::weight() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

std::string CurveClass::hash() const {
  std::string key = surface_->hash() + ":";
  for (int v : coords_) key += std::to_string(v) + ",";
  return fnv1a_hex(key);
}

namespace {

Geodesic straighten_or_throw(const Surface& s, const EdgePath& p) {
  auto g = s.geometry().straighten(p);
  if (!g) throw PreconditionError("curve is null-homotopic");
  return *g;
}

// Straightens a closed path; on success caches the aligned geodesic and reports the
// path's orientation relative to the canonical one.
std::optional<OrientedCurve> straighten_oriented(const SurfacePtr& s, const EdgePath& path) {
  Geodesic g = straighten_or_throw(*s, path);
  if (!g.simple) return std::nullopt;
  std::vector<int> coords = g.coords;
  int dir = 1;
  Geodesic a = align_to_trace(*s, std::move(g), &dir);
  if (!s->geometry().cached(coords)) s->geometry().store(std::move(a));
  return OrientedCurve{adopt_canonical(s, std::move(coords)), dir};
}

}  // namespace

CurveClass CurveClass::from_coords(SurfacePtr s, std::vector<int> coords) {
  require(s != nullptr, "missing surface");
  require(is_normal(*s, coords), "coordinates are not a normal curve");
  if (s->geometry().cached(coords)) return adopt_canonical(s, std::move(coords));
  auto comps = trace_components(*s, coords);
  require(comps.size() == 1, "coordinates describe more than one component");
  require(!is_vertex_link(coords), "coordinates describe the vertex link");
  Geodesic g = straighten_or_throw(*s, comps[0].exits);
  require(g.coords == coords, "coordinates are not the canonical representative");
  s->geometry().store(align_to_trace(*s, std::move(g), nullptr));
  return adopt_canonical(s, std::move(coords));
}

CurveClass normalize(SurfacePtr s, const TracedCurve& t) {
  auto c = straighten_oriented(s, t.exits);
  ensure(c.has_value(), "straightened normal curve is not simple");
  return c->curve;
}

std::optional<CurveClass> simple_class(SurfacePtr s, const EdgePath& path) {
  auto c = simple_oriented_class(std::move(s), path);
  if (!c) return std::nullopt;
  return c->curve;
}

std::optional<OrientedCurve> simple_oriented_class(SurfacePtr s, const EdgePath& path) {
  require(is_valid_edge_path(*s, path), "not a closed edge path");
  return straighten_oriented(s, path);
}

TracedCurve trace(const CurveClass& c) { return trace_single(c.surface(), c.coords()); }

EdgePath oriented_path(const OrientedCurve& c) {
  TracedCurve t = trace(c.curve);
  return c.direction >= 0 ? t.exits : reverse_path(c.curve.surface(), t.exits);
}

std::shared_ptr<const Geodesic> geodesic(const CurveClass& c) {
  const Hyperbolic& h = c.surface().geometry();
  if (auto g = h.cached(c.coords())) return g;
  auto gg = h.straighten(trace(c).exits);
  ensure(gg && gg->coords == c.coords(), "class is not canonical");
  return h.store(align_to_trace(c.surface(), std::move(*gg), nullptr));
}

bool is_essential(const Surface& s, const EdgePath& p) { return !s.group().is_trivial_loop(s.word_of(p)); }

bool is_essential(const Surface& s, const TracedCurve& t) { return is_essential(s, t.exits); }

bool is_isotopic(const CurveClass& a, const CurveClass& b) { return a == b; }

HomologyVector homology_of_path(const Surface& s, const EdgePath& p) {
  return s.symplectic_coordinates(generator_counts(s, p));
}

HomologyVector homology_class(const OrientedCurve& c) {
  return homology_of_path(c.curve.surface(), oriented_path(c));
}

bool is_null_homologous(const CurveClass& c) {
  auto h = homology_class(OrientedCurve{c, 1});
  return std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
}

int symplectic_pairing(const HomologyVector& x, const HomologyVector& y) {
  int r = 0;
  for (size_t i = 0; i + 1 < x.size(); i += 2) r += x[i] * y[i + 1] - x[i + 1] * y[i];
  return r;
}

std::vector<OrientedCurve> basis_curves(SurfacePtr s) {
  std::vector<OrientedCurve> out;
  for (size_t m = 0; m < s->basis_coords().size(); ++m)
    out.push_back({adopt_canonical(s, s->basis_coords()[m]), s->basis_directions()[m]});
  return out;
}

}  // namespace torelli
