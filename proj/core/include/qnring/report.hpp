#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qnring/classify.hpp"
#include "qnring/dsl.hpp"
#include "qnring/harness.hpp"

namespace qnring {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "qnring.report/1";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Names accepted by element_set: U, Id, Nil, C, QN, J, NilStar.
const std::vector<std::string>& element_set_names();

/// Throws InvalidArgument for an unknown name.
const ElementSet& element_set(const FiniteRing& ring, std::string_view name);

Json to_json(const Cardinalities& sizes);
Json to_json(const ClassReport& report);
Json to_json(const Counterexample& c);
Json to_json(const CheckResult& result);

/// Element listings for the requested sets: plain index lists, or
/// {"index", "name"} objects when `named` is set.
Json element_sets_json(const BuiltRing& built, const std::vector<std::string>& sets, bool named);

Json analysis_document(const BuiltRing& built, const ClassReport& report,
                       const std::vector<std::string>& sets, bool named);

Json check_document(const Corpus& corpus, const std::vector<CheckResult>& results);

/// Serialized form used for files: two-space indentation, trailing newline.
std::string dump(const Json& doc);

}  // namespace qnring
