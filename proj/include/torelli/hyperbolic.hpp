#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "torelli/surface.hpp"

namespace torelli {

// Closed geodesic traced through the triangulation.
struct Geodesic {
  std::vector<int> coords;       // crossings per edge
  std::vector<int> half_edges;   // exit half-edges in order, cyclic
  std::vector<double> params;    // crossing position in (0, 1) along the edge's canonical direction
  bool simple = false;           // embedded and primitive
  double length = 0.0;
  int precision_digits = 0;
};

// Fixed hyperbolic metric on the surface: all triangles geodesic, edge lengths seeded,
// scaled so the cone angle at the vertex is exactly 2 pi.
class Hyperbolic {
 public:
  Hyperbolic(const Surface& s, unsigned seed);
  ~Hyperbolic();

  double edge_length(int e) const;

  // Geodesic representative of a closed edge path, traversed in the path's direction;
  // nullopt when the path is null-homotopic.
  std::optional<Geodesic> straighten(const EdgePath& path) const;

  // Holonomy trace of a closed edge path, double precision (diagnostics only).
  double holonomy_trace(const EdgePath& path) const;

  // Geodesics of canonical classes, oriented and rotated like the canonical trace.
  std::shared_ptr<const Geodesic> cached(const std::vector<int>& coords) const;
  std::shared_ptr<const Geodesic> store(Geodesic g) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::shared_ptr<const Geodesic>> cache_;
};

}  // namespace torelli
