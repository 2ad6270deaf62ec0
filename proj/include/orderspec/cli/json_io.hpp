#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orderspec/arith.hpp"
#include "orderspec/coset.hpp"
#include "orderspec/oracle/verify.hpp"
#include "orderspec/outer.hpp"

namespace orderspec::cli {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxSafeInteger = (1ULL << 53) - 1;

// A JSON number up to 2^53 - 1, a decimal string above.
Json big_json(const BigInt& v);
Json big_list_json(const std::vector<BigInt>& values);

Json tau_json(const TauCriterionResult& r);
Json coset_json(const CosetResult& r);
Json admissibility_json(const AdmissibilityReport& r);
Json verify_json(const oracle::VerifyReport& r);
Json gamma_json(const oracle::GammaReport& r);

std::string dump(const Json& j, bool pretty);

}  // namespace orderspec::cli
