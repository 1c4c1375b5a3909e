#pragma once

#include <json.hpp>
#include <string>

#include "torelli/homology.hpp"
#include "torelli/joints.hpp"
#include "torelli/paths.hpp"

namespace torelli {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Malformed documents raise PreconditionError naming the offending field.
Json surface_to_json(const Surface& s);
SurfacePtr surface_from_json(const Json& j);

Json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const SurfacePtr& s, const Json& j);
Json oriented_to_json(const OrientedCurve& c);
OrientedCurve oriented_from_json(const SurfacePtr& s, const Json& j);

Json twist_word_to_json(const TwistWord& w);
TwistWord twist_word_from_json(const SurfacePtr& s, const Json& j);
Json matrix_to_json(const SymplecticMatrix& m);

Json bounding_pair_to_json(const BoundingPair& bp);

Json sep_path_to_json(const SepPathCert& p);
Json bp_path_to_json(const BpPathCert& p);
Json joint_report_to_json(const JointReport& r);

SepPathCert sep_path_from_json(const SurfacePtr& s, const Json& j);
BpPathCert bp_path_from_json(const SurfacePtr& s, const Json& j);
JointReport joint_report_from_json(const SurfacePtr& s, const Json& j);

// Standalone verification of a certificate document. The surface is rebuilt from the
// recorded genus and checked against the recorded hash. Empty string means valid.
std::string verify_certificate(const Json& cert);

}  // namespace torelli
