#pragma once

#include <optional>
#include <vector>

#include "torelli/curve.hpp"
#include "torelli/diagram.hpp"

namespace torelli {

// Two crossings joined by an arc of each curve that together bound a disc.
struct Bigon {
  int p = -1, q = -1;  // crossing ids in the diagram
  int triangle = -1;
};

struct BigonReduction {
  int remaining = 0;
  int algebraic = 0;
  std::vector<Bigon> removed;
};

// Removes innermost bigons between curves ca and cb of a drawing until none remain,
// lowest triangle first. The remaining count is the geometric intersection number.
BigonReduction reduce_bigons(const Diagram& d, int ca, int cb);

// First innermost bigon of the drawing, if any.
std::optional<Bigon> find_bigon(const Diagram& d, int ca, int cb);

// Geometric intersection number; 0 for equal classes.
int intersection_number(const CurveClass& a, const CurveClass& b);

// Crossings of the two geodesics.
int geodesic_crossings(const CurveClass& a, const CurveClass& b);

// Exact disjointness test: the normal multicurve a + b splits into a and b.
bool are_disjoint(const CurveClass& a, const CurveClass& b);

// Algebraic intersection of oriented classes.
int algebraic_intersection(const OrientedCurve& a, const OrientedCurve& b);

}  // namespace torelli
