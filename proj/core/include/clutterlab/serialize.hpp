#pragma once

#include "json.hpp"

#include "clutterlab/covering.hpp"
#include "clutterlab/decompose.hpp"
#include "clutterlab/io.hpp"
#include "clutterlab/properties.hpp"

namespace clutterlab {

// JSON report forms. Exact values (rationals, big integers) are emitted as
// strings so nothing is rounded.

nlohmann::json json_of(const Clutter& c);
nlohmann::json json_of(const Clutter& c, const OptReport& r);
nlohmann::json json_of(const Clutter& c, const PackingReport& r);
nlohmann::json json_of(const Clutter& c, const MengerianReport& r);
nlohmann::json json_of(const Clutter& c, const TwoPartition& part);
nlohmann::json json_of(const RankPropReport& r);
nlohmann::json json_of(const ClassifyReport& r);
nlohmann::json json_of(const Clutter& c, const IdealReport& r);
nlohmann::json json_of(const LpValues& v);
nlohmann::json json_of(const QpqDescriptor& desc, const DecompositionTrace& t);

std::string rat_string(const Rat& r);

}  // namespace clutterlab
