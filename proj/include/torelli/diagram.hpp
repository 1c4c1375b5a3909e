#pragma once

#include <optional>
#include <vector>

#include "torelli/curve.hpp"

namespace torelli {

// A drawing of finitely many oriented closed curves transverse to the triangulation,
// straight inside each triangle, with its cell decomposition.
class Diagram {
 public:
  struct Input {
    EdgePath exits;
    std::vector<double> keys;  // position along each crossed edge's canonical direction
  };

  struct Crossing {
    int curve[2];
    int step[2];  // chord index on each curve
    int sign;     // +1 iff curve[1] crosses curve[0] from right to left
    int triangle;
  };

  enum class PortalKind { side, piece };
  struct Portal {
    PortalKind kind;
    int cell[2];         // side: cell[0] lies in the triangle of half_edge; piece: left, right
    int half_edge = -1;  // side portals
    int curve = -1, step = -1, piece = -1;
  };

  struct Cell {
    int triangle;
    bool has_corner = false;
    std::vector<int> portals;
  };

  Diagram(SurfacePtr s, std::vector<Input> curves);

  // Geodesic drawing: pairwise minimal position; curves oriented canonically.
  static Diagram from_classes(const std::vector<CurveClass>& curves);
  // Combinatorial drawing of traced curves; on shared edges the points of different
  // curves are interleaved by relative position, ties broken by curve order.
  static Diagram from_traced(SurfacePtr s, const std::vector<TracedCurve>& curves);

  const Surface& surface() const { return *s_; }
  const SurfacePtr& surface_ptr() const { return s_; }
  int num_curves() const { return static_cast<int>(exits_.size()); }
  const EdgePath& exits(int c) const { return exits_[c]; }
  int length(int c) const { return static_cast<int>(exits_[c].size()); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  // Crossing ids in order along curve c.
  const std::vector<int>& along(int c) const { return along_[c]; }
  // Position of crossing x in along(curve[k]).
  int along_index(int x, int k) const { return along_idx_[x][k]; }
  // Crossings on chord `step` of curve c, in order along the chord.
  const std::vector<int>& chord_crossings(int c, int step) const { return chord_x_[c][step]; }

  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Portal>& portals() const { return portals_; }
  int piece_portal(int c, int step, int piece) const { return piece_portal_[c][step][piece]; }
  int other_cell(int portal, int cell) const;

  // Edge path of curve c from crossing x to crossing y (forward; full loop when x == y).
  EdgePath arc_path(int c, int x, int y) const;
  // Edge path of curve c from point on chord `s0` to a point on chord `s1` (forward).
  EdgePath step_path(int c, int s0, int s1) const;

  // Cell components after cutting along the curves flagged in `cut`.
  std::vector<int> components(const std::vector<char>& cut, int* count) const;

  int crossing_count(int c1, int c2) const;

 private:
  SurfacePtr s_;
  std::vector<EdgePath> exits_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> along_;
  std::vector<std::array<int, 2>> along_idx_;
  std::vector<std::vector<std::vector<int>>> chord_x_;
  std::vector<Cell> cells_;
  std::vector<Portal> portals_;
  std::vector<std::vector<std::vector<int>>> piece_portal_;
};

// A walk through cells. dir 0 moves from portal.cell[0] to portal.cell[1].
struct CellWalk {
  int start_cell = -1;
  std::vector<std::pair<int, int>> steps;  // (portal, dir)
};

EdgePath walk_path(const Diagram& d, const CellWalk& w);

// Breadth-first search for a walk through stages. In every stage the walk may cross
// side portals and pieces of curves not flagged in `blocking`; it advances to the next
// stage by crossing a portal of the current stage's set. Closed walks end where they start.
struct WalkQuery {
  std::vector<char> blocking;                // per curve
  std::vector<std::vector<int>> stages;      // portal ids per stage
  std::vector<char> allowed_cells;           // empty = all
  std::vector<int> start_cells;
  std::vector<int> end_cells;                // open walks only
  bool closed = true;
};
std::optional<CellWalk> find_walk(const Diagram& d, const WalkQuery& q);

// Boundary of a regular neighbourhood of the union of the given curves.
struct RibbonBoundary {
  EdgePath path;
  std::vector<std::pair<int, int>> arcs;  // (arc id, +1 forward / -1 backward)
};
struct RibbonArc {
  int curve;
  int from, to;  // crossing ids; -1 for a curve with no vertices
};
struct Ribbon {
  int vertices = 0;
  std::vector<RibbonArc> arcs;
  std::vector<RibbonBoundary> boundaries;
};
Ribbon ribbon_boundaries(const Diagram& d, const std::vector<int>& curves);

}  // namespace torelli
