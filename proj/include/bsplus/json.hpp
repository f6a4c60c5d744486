#pragma once

#include "bsplus/search.hpp"
#include "bsplus/subsets.hpp"
#include "bsplus/theorems.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>

namespace bsplus {

// Integers serialize as JSON numbers when they fit in int64 and as decimal
// strings otherwise. Sets use the "{x,...}" literal.

nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const ApDescription& ap);
nlohmann::json to_json(const BSSubset& s);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const SearchConfig& cfg);
/// witness_limit caps extremal_witnesses and structure_reports; the full
/// counts are always reported.
nlohmann::json to_json(const SearchOutcome& out, std::size_t witness_limit = SIZE_MAX);

}  // namespace bsplus
