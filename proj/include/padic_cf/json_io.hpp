#pragma once

#include "padic_cf/cf_engine.hpp"
#include "padic_cf/digits.hpp"
#include "padic_cf/families.hpp"
#include "padic_cf/heights.hpp"

#include <json.hpp>

#include <string>

namespace padic_cf {

using Json = nlohmann::ordered_json;

// Big integers serialize as decimal strings; every top-level document
// carries "schema": 1.
inline constexpr int kSchemaVersion = 1;

Json to_json(const PartialQuotient& b);
PartialQuotient partial_quotient_from_json(const Json& j, long long p);

Json to_json(const PAdicApprox& x);

Json to_json(const CFExpansion& cf);
std::string expansion_to_csv(const CFExpansion& cf);

Json to_json(const ConvergentTable& table);
std::string convergents_to_csv(const ConvergentTable& table);

Json to_json(const PeriodicCF& cf);
PeriodicCF periodic_cf_from_json(const Json& j);

Json to_json(const QuadraticRelation& rel);
Json to_json(const HeightReport& report, const std::string& check_name);
Json to_json(const RemarkReport& report);

Json to_json(const FloorContractReport& report);
Json to_json(const Hypothesis1Report& report);
Json to_json(const FamilyCertificate& cert);
Json to_json(const ValuationLawReport& report);
Json to_json(const ArchimedeanReport& report);
Json to_json(const SubspaceWitnessReport& report);

QPerSpec qper_spec_from_json(const Json& j);
OotoSpec ooto_spec_from_json(const Json& j);

Json load_json_file(const std::string& path);

} // namespace padic_cf
