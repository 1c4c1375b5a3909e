#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torelli/classification.hpp"
#include "torelli/subsurface.hpp"

namespace torelli {

enum class JointOutcome { mediating_curve, enclosing_torus, common_duals, forbidden_configuration };

std::string to_string(JointOutcome o);

struct LabeledBoundary {
  std::string label;  // "D11", "D12", ... for 2-joints; "D1" ... "D6" for 4-joints
  BoundaryCircle circle;
};

struct JointCheck {
  std::string name;
  bool holds = false;
};

// Witness of an impossible crossing order: a curve meeting B once and missing C.
struct ForbiddenWitness {
  OrientedCurve curve;
  int geometric_b = 0, algebraic_b = 0;
  int geometric_c = 0, algebraic_c = 0;
};

struct JointReport {
  Joint joint;
  Subsurface neighborhood;  // of B u C
  std::vector<LabeledBoundary> boundaries;
  int order_type = 0;  // 4-joints: 1 for (w,x,y,z) along B, 2 for (w,z,y,x)
  JointOutcome outcome = JointOutcome::common_duals;
  std::string branch;  // which case of the analysis produced the outcome
  std::optional<CurveClass> mediator;
  std::optional<Subsurface> torus;
  std::optional<std::pair<CurveClass, CurveClass>> duals;
  std::optional<ForbiddenWitness> witness;
  std::vector<JointCheck> checks;

  const LabeledBoundary& boundary(const std::string& label) const;
};

// Four-holed sphere analysis of a 2-joint. Throws InvariantViolation naming the first
// failed check.
JointReport analyze_two_joint(const Joint& j);

// Six-holed sphere analysis of a 4-joint. An order (i) configuration is reported with
// outcome forbidden_configuration and a failed "order type (ii)" check.
JointReport analyze_four_joint(const Joint& j);

// Dispatches on k: 0 gives common duals, 2 and 4 the analyses above.
JointReport analyze_joint(const Joint& j);

// Curves of weight <= max_weight that form a bounding pair with a and are homologous to +-[a].
std::vector<CurveClass> bounding_pair_arms(const CurveClass& a, int max_weight);

// All unordered pairs of distinct arms of each basis curve. k is the raw geometric
// intersection number; parity is not enforced here.
std::vector<Joint> joint_census(const SurfacePtr& s, int max_weight);

// Independent re-check of a report's outcome; empty when it holds.
std::string check_joint_report(const JointReport& r);

}  // namespace torelli
