#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "parmod/cone.hpp"
#include "parmod/crossing.hpp"
#include "parmod/walls.hpp"
#include "parmod/weights.hpp"

// Structured records: JSON with a "schema" version tag in every object.
// Arbitrary-precision integers and rationals travel as decimal strings
// ("p" or "p/q"); machine integers as JSON numbers. Parsers reject
// floating-point numbers so no value silently loses exactness.
namespace parmod {

nlohmann::json rational_json(const Rat& q);
Rat rational_from_json(const nlohmann::json& j);
nlohmann::json int_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

// parmod/weight/1. Accepts rows of r-1 entries (normalized) or r entries
// (trailing entry subtracted); emitted rows are always normalized. Parsed
// weights may be rays; callers enforce interiority where they need it.
nlohmann::json weight_to_json(const ParabolicWeight& w);
ParabolicWeight weight_from_json(const nlohmann::json& j);

// parmod/divisor/1
nlohmann::json divisor_to_json(const DivisorClass& D);
DivisorClass divisor_from_json(const nlohmann::json& j);

// parmod/wall/1
nlohmann::json wall_to_json(const Wall& W);
Wall wall_from_json(const nlohmann::json& j);

// parmod/certificate/1
nlohmann::json certificate_to_json(const GwCertificate& c);
GwCertificate certificate_from_json(const nlohmann::json& j);

// parmod/wall-list/1 wrapping parmod/wall-group/1 entries; kind names the
// query ("scaling" or "segment") and parameter its coordinate ("c" or "t").
nlohmann::json wall_groups_record(int r, int n, const std::string& kind,
                                  const std::string& parameter,
                                  const std::vector<WallGroup>& groups,
                                  bool bounded_search);

// parmod/effectiveness/1
nlohmann::json effectiveness_to_json(const EffectivenessResult& e);

// parmod/crossing-report/1
nlohmann::json crossing_report_to_json(const CrossingReport& rep);

// parmod/dominance-trace/1
nlohmann::json dominance_trace_to_json(const DominanceTrace& t);

// parmod/cone/1
nlohmann::json cone_to_json(const ConeDescription& C);

// parmod/model/1
nlohmann::json model_to_json(const ModelDescriptor& m);

// parmod/fano-report/1
nlohmann::json fano_report_to_json(const WeakFanoReport& rep);

}  // namespace parmod
