#pragma once

#include <cstdint>
#include <map>

#include <nlohmann/json.hpp>

#include "threedist/farey.hpp"
#include "threedist/length_census.hpp"
#include "threedist/rational.hpp"
#include "threedist/real_value.hpp"
#include "threedist/temperament.hpp"
#include "threedist/three_distance.hpp"
#include "threedist/three_gap.hpp"

namespace threedist::json {

using Json = nlohmann::ordered_json;

// Exact values are "p/q" strings; *_display fields carry 6 decimals and are
// ignored when parsing.
Json rational(const Rational& value);
Rational parse_rational(const Json& value);

Json real_value(const RealValue& value);
RealValue parse_real_value(const Json& value);

Json farey_pair(const FareyPair& pair);
FareyPair parse_farey_pair(const Json& value, std::int64_t order);

Json partition(const DistancePartition& partition);
DistancePartition parse_partition(const Json& value);

Json gap_structure(const GapStructure& structure);
GapStructure parse_gap_structure(const Json& value);

Json census(const LengthCensus& census);
Json intervals(const std::vector<IntervalEntry>& entries);
Json frequencies(const std::map<std::int64_t, Rational>& freqs);
Json temperament(const TemperamentReport& report);

}  // namespace threedist::json
