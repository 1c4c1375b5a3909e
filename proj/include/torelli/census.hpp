#pragma once

#include <functional>
#include <vector>

#include "torelli/curve.hpp"

namespace torelli {

// Every isotopy class whose canonical coordinates have total weight <= max_weight,
// sorted by (weight, coordinates). Cached per surface and bound.
const std::vector<CurveClass>& census(const SurfacePtr& s, int max_weight);

// Separating classes of weight <= max_weight. Homology is checked before straightening,
// so much larger bounds are affordable than for the full census.
const std::vector<CurveClass>& separating_census(const SurfacePtr& s, int max_weight);

// Classes of weight <= max_weight whose traced normal curve passes `keep` (uncached).
std::vector<CurveClass> census_where(const SurfacePtr& s, int max_weight,
                                     const std::function<bool(const TracedCurve&)>& keep);

// Connected normal curves (other than the vertex link) of total weight <= max_weight.
std::vector<std::vector<int>> connected_normal_curves(const Surface& s, int max_weight);

}  // namespace torelli
