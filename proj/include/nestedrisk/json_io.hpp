#pragma once

#include <nlohmann/json.hpp>

#include "nestedrisk/acceptance.hpp"
#include "nestedrisk/conjugacy.hpp"
#include "nestedrisk/consistency.hpp"
#include "nestedrisk/properties.hpp"
#include "nestedrisk/riskmeasures.hpp"
#include "nestedrisk/space.hpp"

namespace nestedrisk {

using json = nlohmann::json;

// ExtReal: finite numbers as JSON numerals, infinities as "+inf" / "-inf".
json extreal_to_json(const ExtReal& u);
ExtReal extreal_from_json(const json& j);

// {"atoms": [...], "weights": [...]}
FiniteProbSpace space_from_json(const json& j);
json space_to_json(const FiniteProbSpace& space);

// {"blocks": [[indices]...]} (0-based) or {"sets": [[indices]...]} holding a
// full sigma-field that is converted to its atom partition.
Partition partition_from_json(const json& j, std::size_t n_atoms);
json partition_to_json(const Partition& p);

// Either a bare array or {"values": [...]}.
RandomVariable rv_from_json(const json& j);

// {"heads": [...], "tails": [...], "aggregator": {"(h,t)": value},
//  "factor": {"t": value}}; head/tail entries are labels (strings) or
// numeric values (number or vector), values are numbers or vectors.
AggregatorFactorPair pair_from_json(const json& j);

// {"X": n, "Y": n, "Z": n, "Yp": n, "theta_xz": [[..]], "theta_x": [..],
//  "theta_z": [..], "phi": [[..]]} with phi entries as ExtReal.
DecomposableSystem system_from_json(const json& j);

// Bare array of ExtReal entries, or {"values": [...]}.
ExtFn extfn_from_json(const json& j);

json verdict_to_json(const Verdict& v, const AggregatorFactorPair& pair);
json property_verdict_to_json(const PropertyVerdict& v);
json acceptance_verdict_to_json(const AcceptanceVerdict& v);
json conjugacy_verdict_to_json(const ConjugacyVerdict& v);

}  // namespace nestedrisk
