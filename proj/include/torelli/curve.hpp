#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torelli/hyperbolic.hpp"
#include "torelli/normal.hpp"
#include "torelli/surface.hpp"

namespace torelli {

using HomologyVector = std::vector<int>;

// Isotopy class of an essential simple closed curve, stored by its canonical
// normal coordinates (those of its geodesic).
class CurveClass {
 public:
  CurveClass() = default;

  // Accepts only canonical coordinates of an essential simple closed curve.
  static CurveClass from_coords(SurfacePtr s, std::vector<int> coords);

  const Surface& surface() const { return *surface_; }
  const SurfacePtr& surface_ptr() const { return surface_; }
  const std::vector<int>& coords() const { return coords_; }
  int weight() const;
  bool valid() const { return surface_ != nullptr; }
  std::string hash() const;

  bool operator==(const CurveClass& o) const { return coords_ == o.coords_ && surface_ == o.surface_; }
  bool operator<(const CurveClass& o) const { return coords_ < o.coords_; }

 private:
  friend CurveClass adopt_canonical(SurfacePtr s, std::vector<int> coords);
  SurfacePtr surface_;
  std::vector<int> coords_;
};

// Wraps coordinates already known to be canonical (geodesic output).
CurveClass adopt_canonical(SurfacePtr s, std::vector<int> coords);

// direction +1 is the orientation of trace(curve).
struct OrientedCurve {
  CurveClass curve;
  int direction = 1;
};

// Canonical class of a traced normal curve; throws PreconditionError when inessential.
CurveClass normalize(SurfacePtr s, const TracedCurve& t);
// Canonical class of a closed edge path if it is homotopic to a simple closed curve;
// nullopt when it is not simple; throws PreconditionError when null-homotopic.
std::optional<CurveClass> simple_class(SurfacePtr s, const EdgePath& path);
// Same, together with the orientation of the path relative to the canonical one.
std::optional<OrientedCurve> simple_oriented_class(SurfacePtr s, const EdgePath& path);

TracedCurve trace(const CurveClass& c);
EdgePath oriented_path(const OrientedCurve& c);
std::shared_ptr<const Geodesic> geodesic(const CurveClass& c);

bool is_essential(const Surface& s, const EdgePath& closed_path);
bool is_essential(const Surface& s, const TracedCurve& t);
bool is_isotopic(const CurveClass& a, const CurveClass& b);

HomologyVector homology_of_path(const Surface& s, const EdgePath& closed_path);
HomologyVector homology_class(const OrientedCurve& c);
bool is_null_homologous(const CurveClass& c);

// Standard symplectic form on coordinates (alpha_1, beta_1, ...).
int symplectic_pairing(const HomologyVector& x, const HomologyVector& y);

// Basis curves alpha_i, beta_i as oriented classes, in homology order.
std::vector<OrientedCurve> basis_curves(SurfacePtr s);

}  // namespace torelli
