#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "torelli/diagram.hpp"

namespace torelli {

// Geodesic drawing input of an oriented class (reversed when direction < 0).
Diagram::Input geodesic_input(const OrientedCurve& c);
Diagram::Input reversed_input(const Surface& s, const Diagram::Input& in);

// Curves drawn together with the pushoffs produced by surgery of curve X along an arc J
// of curve Y. X must be oriented so that J leaves X to its left.
struct ArcSurgery {
  std::vector<Diagram::Input> inputs;  // originals followed by the two pushoffs
  int first = -1, second = -1;         // indices of the pushoffs in `inputs`
  EdgePath first_path, second_path;    // X[y->x] J   and   X[x->y] J^-1
};

// X = curve `cx`, Y = curve `cy` of `d` (built from `inputs`). J runs along Y from crossing
// `from` to crossing `to`.
ArcSurgery surger_along(const Diagram& d, const std::vector<Diagram::Input>& inputs, int cx, int cy,
                        int from, int to);

// Arcs of Y between consecutive crossings with X, leaving X to its left, innermost first:
// ordered by the fewest crossings with Y strictly inside either arc of X between their ends,
// then by position along Y. Pairs are (from, to) crossing ids.
std::vector<std::pair<int, int>> left_arcs(const Diagram& d, int cx, int cy);

// Band sums of two disjoint drawn curves along arcs that cross the curves listed in
// `crossings` once each, in order, and no other curve flagged in `blocking` (the two curves
// themselves are always blocked). Candidates are produced in canonical order: start cell
// next to the first curve, then orientation of the second; `accept` is called on each
// simple candidate until it returns true.
struct BandQuery {
  std::vector<Diagram::Input> inputs;
  int first = -1, second = -1;
  std::vector<int> crossings;
  std::vector<char> blocking;  // per input curve; missing entries are not blocked
  int max_candidates = 4000;
};
std::optional<OrientedCurve> band_sum(const SurfacePtr& s, const BandQuery& q,
                                      const std::function<bool(const OrientedCurve&)>& accept);

// Band sums of the pushoffs of an arc surgery along arcs crossing X twice.
std::optional<OrientedCurve> tube(const SurfacePtr& s, const ArcSurgery& surgery, int cx,
                                  const std::vector<char>& blocking,
                                  const std::function<bool(const OrientedCurve&)>& accept);

EdgePath rotate_loop(const Surface& s, const EdgePath& loop, int start, int direction);

}  // namespace torelli
