#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torelli/subsurface.hpp"

namespace torelli {

struct SeparationReport {
  CurveClass curve;
  bool separating = false;
  std::optional<std::pair<int, int>> side_genera;  // ascending
};

SeparationReport classify_curve(const CurveClass& a);
// Smaller side genus of a separating class.
int min_side_genus(const CurveClass& a);

// Side of the disjoint class x relative to c in canonical orientation: +1 left, -1 right,
// 0 when c does not separate the two sides.
int side_of(const CurveClass& c, const CurveClass& x);

// Index of the piece containing curve `curve` of the diagram (which must not be cut).
int piece_of_curve(const std::vector<Subsurface>& pieces, const Diagram& d, int curve);

struct BoundingPair {
  CurveClass first, second;
  int direction = 1;  // orientation of `second` homologous to canonical `first`
  Subsurface left, right;  // pieces to the left and right of canonical `first`
};

std::optional<BoundingPair> is_bounding_pair(const CurveClass& a, const CurveClass& b);

struct Joint {
  CurveClass base;
  CurveClass arms[2];
  int k = 0;
};

// Throws PreconditionError naming the failed clause.
Joint classify_joint(const CurveClass& a, const CurveClass& b, const CurveClass& c);

std::optional<Subsurface> detect_two_holed_torus(const CurveClass& a, const CurveClass& b);

// Two disjoint common duals of a 0-joint, built from arcs across its decomposition.
std::pair<CurveClass, CurveClass> find_common_duals(const Joint& j);

}  // namespace torelli
