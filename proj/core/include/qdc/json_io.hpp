#pragma once

#include <nlohmann/json.hpp>

#include "qdc/bvsim.hpp"
#include "qdc/oracle.hpp"
#include "qdc/spn.hpp"

namespace qdc {

// S-box wire format: {"m": int, "n": int, "table": [ints]}
nlohmann::json to_json(const TruthTable& t);
TruthTable truth_table_from_json(const nlohmann::json& j);

// {"m": int, "samples": [ints]}
nlohmann::json to_json(const SampleSet& s);

// {"dx": int, "dy": int, "mask": int}
nlohmann::json to_json(const DifferentialCandidate& c);
DifferentialCandidate candidate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolutionSets& s);
nlohmann::json to_json(const VerifiedCandidate& v);
nlohmann::json to_json(const ValidationReport& r);

// Cipher wire format:
// {"k": int, "l": int, "m": int, "sbox": {...}, "perm": [ints], "rounds": int}
nlohmann::json to_json(const SpnSpec& s);
SpnSpec spn_spec_from_json(const nlohmann::json& j);

// DDT rows as CSV, one row per input difference.
std::string ddt_to_csv(const Ddt& d);

}  // namespace qdc
