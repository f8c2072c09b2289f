/*
* Copyright 2026 The camina authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include "camina/camina.hpp"
#include "camina/characters.hpp"
#include "camina/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace camina {

inline constexpr const char* kReportSchema = "camina-report/1";

nlohmann::json to_json(const CaminaClassification& c);
nlohmann::json to_json(const TheoremReport& r);

/// The whole scan under the "camina-report/1" schema. Keys are sorted, so
/// equal scans serialize to equal bytes once timings are zeroed.
nlohmann::json to_json(const CorpusScan& scan);

/// A bare list of reports under the same schema.
nlohmann::json reports_to_json(const std::vector<TheoremReport>& reports);

/// Character table with classes, degrees and values as "re+imi" strings.
nlohmann::json to_json(const CharacterTable& t);

/// Sets every "elapsed_seconds" field to zero, recursively.
void zero_timings(nlohmann::json& doc);

/// One line per theorem report: theorem,group,subgroup,primes,status,reason.
std::string reports_to_csv(const std::vector<TheoremReport>& reports);

/// A human-readable summary; no stability guarantee.
std::string to_text(const CorpusScan& scan);
std::string reports_to_text(const std::vector<TheoremReport>& reports);

} // namespace camina
