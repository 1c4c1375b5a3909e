#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "torelli/diagram.hpp"

namespace torelli {

// Search for two disjoint curves J1, J2 built as closed cell walks through a drawing of the
// given classes. Each walk crosses the curves of its route once each, in cyclic order, and
// no other drawn curve; the second walk also avoids J1.
struct DualSearch {
  std::vector<CurveClass> curves;              // pairwise distinct
  std::vector<std::vector<int>> first_routes;  // indices into `curves`, tried in order
  std::vector<std::vector<int>> second_routes;
  std::vector<int> duals_of;    // every J must have intersection number 1 with these
  int distinguisher = -1;       // i(J1, .) = 1 and i(J2, .) = 0
  // Separating curves disjoint from `curves`. When no route pair works, J2 is tried as a band
  // sum of J1 with one of these, which keeps it disjoint from J1 and dual to the same curves.
  std::vector<CurveClass> tubes;
};

std::optional<std::pair<CurveClass, CurveClass>> find_dual_pair(const DualSearch& q);

// Closed walk crossing each curve in `route` once, cyclically, starting next to route[0].
// Candidates are offered to `accept` in canonical order (start cell ascending).
std::optional<OrientedCurve> route_walk(const Diagram& d, const std::vector<int>& route,
                                        const std::vector<char>& blocking,
                                        const std::function<bool(const OrientedCurve&)>& accept);

// Common duals of the 0-joint (a, b, c), through circles D1, D2 splitting the piece between b and c.
std::pair<CurveClass, CurveClass> zero_joint_duals(const CurveClass& a, const CurveClass& b, const CurveClass& c);

}  // namespace torelli
