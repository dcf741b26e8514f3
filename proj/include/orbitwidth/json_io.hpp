#ifndef ORBITWIDTH_JSON_IO_HPP
#define ORBITWIDTH_JSON_IO_HPP

#include <json.hpp>

#include "orbitwidth/gt_pattern.hpp"
#include "orbitwidth/oracle.hpp"
#include "orbitwidth/orbit_matrix.hpp"
#include "orbitwidth/reconstruction.hpp"
#include "orbitwidth/width_bound.hpp"

namespace orbitwidth {

/// {"size": m, "rows": [[...], ...]}; loading checks exact skew-symmetry.
nlohmann::json matrix_to_json(const SkewMatrix& m);
SkewMatrix matrix_from_json(const nlohmann::json& j);

/// {"family": "B"|"D", "lambda": [...], "rows": {"2": [...], ...}}
nlohmann::json pattern_to_json(const GTPattern& p);
GTPattern pattern_from_json(const nlohmann::json& j);

/// Fields family, rank, lambda, bound, witness_coroot, witness_edge, mode.
nlohmann::json bound_report_to_json(const BoundReport& r);

nlohmann::json edge_to_json(const EdgeDescriptor& e);
nlohmann::json verify_report_to_json(const VerifyReport& r);
nlohmann::json comparison_to_json(const CenteredComparison& c);
nlohmann::json violations_to_json(const std::vector<PatternViolation>& v);
nlohmann::json reconstruction_report_to_json(const ReconstructionReport& r,
                                             const GTPattern& pattern);

}  // namespace orbitwidth

#endif
