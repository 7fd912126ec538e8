#pragma once

#include <nlohmann/json.hpp>

#include "vdb/oracle.hpp"
#include "vdb/spectrum.hpp"
#include "vdb/theorems.hpp"

namespace vdb {

// JSON views of the report types. Field names are stable; objects
// serialize with alphabetically sorted keys, so identical inputs always
// produce identical bytes.

nlohmann::json to_json(const PhiSpec& spec);
nlohmann::json to_json(const DegreeSpectrum& s);
nlohmann::json to_json(const HypothesisReport& r);
nlohmann::json to_json(const BoundStatement& st);
nlohmann::json to_json(const ExtremalReport& r);
nlohmann::json to_json(const VerificationOutcome& o);

/// "0x"-prefixed lowercase hex encoding of a digraph bitmask.
std::string encode_mask(std::uint64_t mask);

}  // namespace vdb
