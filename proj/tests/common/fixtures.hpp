#pragma once

#include <vector>

#include "torelli/census.hpp"
#include "torelli/curve.hpp"
#include "torelli/intersection.hpp"

namespace torelli::fixtures {

inline const SurfacePtr& g2() {
  static SurfacePtr s = Surface::build(2);
  return s;
}
inline const SurfacePtr& g3() {
  static SurfacePtr s = Surface::build(3);
  return s;
}
inline const SurfacePtr& g4() {
  static SurfacePtr s = Surface::build(4);
  return s;
}

inline CurveClass basis(const SurfacePtr& s, int i) { return basis_curves(s)[i].curve; }

// The separating curve disjoint from every basis curve that cuts off the handle of
// alpha_h, beta_h (0-based h). The other side holds the remaining handles, so the
// handle side has genus 1.
inline CurveClass handle_boundary(const SurfacePtr& s, int h, int max_weight = 24);

}  // namespace torelli::fixtures

#include "torelli/classification.hpp"

inline torelli::CurveClass torelli::fixtures::handle_boundary(const SurfacePtr& s, int h, int max_weight) {
  auto b = basis_curves(s);
  for (const auto& c : separating_census(s, max_weight)) {
    bool ok = true;
    for (const auto& x : b) ok = ok && are_disjoint(c, x.curve);
    if (!ok) continue;
    int in = side_of(c, b[2 * h].curve);
    if (in == 0 || side_of(c, b[2 * h + 1].curve) != in) continue;
    for (int k = 0; k < static_cast<int>(b.size()) && ok; ++k)
      if (k / 2 != h) ok = side_of(c, b[k].curve) == -in;
    if (ok) return c;
  }
  return {};
}
