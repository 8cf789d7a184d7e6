#pragma once

#include <json.hpp>

#include "groupdet/aut_analysis.hpp"
#include "groupdet/bench.hpp"
#include "groupdet/determinant.hpp"
#include "groupdet/pairs.hpp"
#include "groupdet/sweep.hpp"

namespace groupdet {

using Json = nlohmann::json;

// A group is {"spec": ..., "order": n} when its spec rebuilds the same table,
// otherwise it also carries "table" (rows of 0-based indices) and "labels".
// A bare string is read as a spec.
Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j);

// {"domain", "codomain", "values"}.
Json map_to_json(const GroupMap& f);
GroupMap map_from_json(const Json& j);

// {"factors": [group, ...], "entries": [[values of (0,0), values of (0,1), ...], ...]}.
// This is also the matrix file format of the command-line tool.
Json matrix_to_json(const EndoMatrix& m);
EndoMatrix matrix_from_json(const Json& j);

Json counter_to_json(const OpCounter& c);
OpCounter counter_from_json(const Json& j);

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);
std::string to_string(Side s);
std::string to_string(BenchMethod m);
std::string to_string(Population p);

Json decision_to_json(const DetDecision& d);
DetDecision decision_from_json(const Json& j);

// Pair-level records keep h and k once and store maps as bare value arrays.
Json witness_to_json(const CompatWitness& w);
CompatWitness witness_from_json(const Json& j, const GroupPtr& h, const GroupPtr& k);
Json common_factor_to_json(const CommonFactor& cf);
CommonFactor common_factor_from_json(const Json& j, const GroupPtr& h, const GroupPtr& k);

// Carries "h" and "k" as group objects so it can be read back without context.
Json report_to_json(const PairReport& r, const GroupPtr& h, const GroupPtr& k);
PairReport report_from_json(const Json& j);

Json comparison_to_json(const AutComparison& c);
AutComparison comparison_from_json(const Json& j);

Json record_to_json(const BenchRecord& r);
BenchRecord record_from_json(const Json& j);
Json bench_to_json(const BenchSummary& s);
BenchSummary bench_from_json(const Json& j);

Json sweep_to_json(const SweepReport& r);
SweepReport sweep_from_json(const Json& j);

}  // namespace groupdet
