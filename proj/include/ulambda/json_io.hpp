#pragma once

#include <json.hpp>

#include "ulambda/extremal.hpp"
#include "ulambda/families.hpp"
#include "ulambda/meromorphic_types.hpp"
#include "ulambda/oracles.hpp"
#include "ulambda/transforms.hpp"

namespace ulambda {

using Json = nlohmann::json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const PowerSeries& s);                    // {"coeffs": [[re, im], ...]}
PowerSeries series_from_json(const Json& j);

Json to_json(const DiscreteCircleMeasure& mu);         // [{"x": [re, im], "w": r}, ...]
DiscreteCircleMeasure measure_from_json(const Json& j);

Json to_json(const FunctionSpec& spec);                // {"kind": ..., ...}
FunctionSpec spec_from_json(const Json& j);

Json to_json(const MeromorphicSeries& g);              // {"b": [[re, im], ...]}
MeromorphicSeries meromorphic_from_json(const Json& j);

Json to_json(const DeviationReport& rep);
Json to_json(const NormEstimate& est);
Json to_json(const MeanReport& rep);

}  // namespace ulambda
