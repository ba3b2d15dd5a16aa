#pragma once

// JSON rendering of reports.  Integers and Z[b] values are always strings so
// that arbitrarily large values survive any JSON reader.

#include <json.hpp>

#include "schubert/conjectures.hpp"
#include "schubert/relations.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

Json to_json(const Expansion& e);
Json to_json(const BetaExpansion& e);
Json to_json(const RelationReport& r);
Json to_json(const Violation& v);
Json to_json(const PairResult& r);
/// Wall time is left out unless requested so that reports are reproducible
/// byte for byte.
Json to_json(const SweepReport& r, bool include_timing = false);

}  // namespace schubert
