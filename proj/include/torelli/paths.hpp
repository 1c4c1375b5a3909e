#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torelli/classification.hpp"

namespace torelli {

struct SepPathCert {
  std::vector<CurveClass> vertices;
  std::vector<int> steps;  // i(v_k, v_{k+1}), all zero
};

struct BpPathCert {
  CurveClass base;
  std::vector<CurveClass> vertices;
  std::vector<int> steps;  // i(b_k, b_{k+1}) in {0, 2, 4}
};

struct SurgeryOutcome {
  CurveClass curve;
  bool tubed = false;  // false: one of the two surgered curves was already separating
  int arc_rank = 0;    // rank of the arc used in the innermost-first order
};

// A separating c with i(a,c) <= 4 and i(c,b) < i(a,b), from surgery of a along an arc of b.
SurgeryOutcome surger_once_detailed(const CurveClass& a, const CurveClass& b);
CurveClass surger_once(const CurveClass& a, const CurveClass& b);

SepPathCert sep_path(const CurveClass& a, const CurveClass& b);

// Breadth-first search through separating curves for i(a,b) in {2, 4}.
SepPathCert base_case_path(const CurveClass& a, const CurveClass& b);

// Replaces or deletes vertices whose smaller side genus exceeds 1. `counts`, when given,
// receives the number of such vertices before each iteration and at the end.
SepPathCert genus1_refine(const SepPathCert& p, std::vector<int>* counts = nullptr);

struct BpStep {
  CurveClass from, to;
  int k_before = 0, k_after = 0;  // i(from, c) and i(to, c)
  bool tubed = false;
};

BpPathCert bp_short_path(const CurveClass& a, const CurveClass& b, const CurveClass& c,
                         std::vector<BpStep>* trace = nullptr);

// A separating curve with a genus-1 side that contains a and misses every avoided curve.
CurveClass find_enclosing_torus(const CurveClass& a, const std::vector<CurveClass>& avoid);

// Independent certificate checks; an empty string means the certificate is valid.
std::string check_sep_path(const SepPathCert& p);
std::string check_bp_path(const BpPathCert& p);

}  // namespace torelli
