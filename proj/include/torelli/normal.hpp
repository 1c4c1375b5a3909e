#pragma once

#include <vector>

#include "torelli/hyperbolic.hpp"
#include "torelli/surface.hpp"

namespace torelli {

// One normal arc: the arc of a normal curve cutting off `corner` of `triangle`,
// `depth` arcs away from that corner.
struct Strand {
  int triangle = 0;
  int corner = 0;
  int depth = 0;
  bool operator==(const Strand&) const = default;
};

// A connected normal curve in S - v, traced inside a frame (points per edge).
// Step k is the arc inside one triangle; it leaves through exits[k] at exit_pos[k],
// the position counted along that half-edge's own direction.
struct TracedCurve {
  std::vector<int> frame;
  std::vector<Strand> steps;
  EdgePath exits;
  std::vector<int> exit_pos;

  int length() const { return static_cast<int>(exits.size()); }
  std::vector<int> coords(const Surface& s) const;
};

// Parity and triangle inequalities in every triangle.
bool is_normal(const Surface& s, const std::vector<int>& coords);

// Number of arcs cutting off each corner of each triangle, indexed 3 t + k.
std::vector<int> corner_counts(const Surface& s, const std::vector<int>& coords);

// Traces the component through the point at `pos` on half-edge h, leaving through h.
TracedCurve trace_through(const Surface& s, const std::vector<int>& frame, int h, int pos);

// Canonical start: lowest edge with a point, position 0 along its lower half-edge.
TracedCurve trace_single(const Surface& s, const std::vector<int>& coords);

// All components of a normal multicurve, in order of their first point.
std::vector<TracedCurve> trace_components(const Surface& s, const std::vector<int>& coords);

// True iff the connected curve is the link of the vertex.
bool is_vertex_link(const std::vector<int>& coords);

// Rotates and, if needed, reverses a geodesic so its sequence matches trace_single of
// its coordinates step by step. *dir receives -1 when it had to be reversed.
Geodesic align_to_trace(const Surface& s, Geodesic g, int* dir);

// Algebraic intersection of two closed edge paths (any drawing gives the same count).
int algebraic_intersection(const Surface& s, const EdgePath& a, const EdgePath& b);

// Abelianized generator counts of a closed edge path.
std::vector<int> generator_counts(const Surface& s, const EdgePath& p);

}  // namespace torelli
