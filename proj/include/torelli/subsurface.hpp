#pragma once

#include <optional>
#include <vector>

#include "torelli/curve.hpp"
#include "torelli/diagram.hpp"

namespace torelli {

// A boundary circle, oriented with its subsurface on the right.
struct BoundaryCircle {
  EdgePath path;
  bool essential = false;
  bool separating = false;  // essential and null-homologous
  std::optional<OrientedCurve> curve;
  HomologyVector homology;
  int source_curve = -1;  // cut pieces: which input curve
  int source_side = 0;    // +1 left side of that curve, -1 right side
  std::vector<std::pair<int, int>> arcs;  // neighbourhoods: ribbon arcs traversed
};

struct Subsurface {
  SurfacePtr parent;
  int genus = 0;
  int euler_characteristic = 0;
  bool contains_vertex = false;
  std::vector<int> cells;  // cells of the diagram it was cut from
  std::vector<BoundaryCircle> boundary;
  int boundary_count() const { return static_cast<int>(boundary.size()); }
};

// Pieces of S cut along pairwise disjoint curves. Pieces are ordered by their lowest cell.
std::vector<Subsurface> cut_along(const std::vector<CurveClass>& curves);
// Traced curves drawn in one common frame; rejected if any two chords cross.
std::vector<Subsurface> cut_along(const SurfacePtr& s, const std::vector<TracedCurve>& curves);
// Pieces of an existing diagram cut along a subset of its curves (which must be disjoint).
std::vector<Subsurface> cut_pieces(const Diagram& d, const std::vector<int>& curves);

// Regular neighbourhood of a connected union of curves in minimal position.
Subsurface regular_neighborhood(const std::vector<CurveClass>& curves);
// Same for a drawing; rejected with the bigon when two curves are not in minimal position.
Subsurface regular_neighborhood(const SurfacePtr& s, const std::vector<TracedCurve>& curves);
Subsurface neighborhood_in(const Diagram& d, const std::vector<int>& curves);

BoundaryCircle make_boundary(const SurfacePtr& s, EdgePath path);

}  // namespace torelli
