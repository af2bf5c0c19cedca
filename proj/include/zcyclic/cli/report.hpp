/*
   Copyright 2026 The zcyclic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZCYCLIC_CLI_REPORT_HPP
#define ZCYCLIC_CLI_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zcyclic/spanning.hpp"
#include "zcyclic/structure.hpp"
#include "zcyclic/warning.hpp"

namespace zcyclic::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kBudgetOrSchema = 2 };

struct Flags {
    unsigned threads = 1;
    std::uint64_t budget = std::uint64_t{1} << 16;
    std::uint64_t space_budget = std::uint64_t{1} << 20;
    std::optional<std::string> diff_reference;  // CSV text for `matrix --diff`
    std::optional<unsigned> level;              // gray
    std::optional<std::uint64_t> value;         // gray
};

struct RunReport {
    std::string command;
    std::string input_digest;
    nlohmann::json results = nlohmann::json::object();
    std::string text;  // plain-text payload
    std::vector<Warning> warnings;
    int exit_code = kSuccess;
    double wall_ms = 0.0;
};

/// FNV-1a 64 over the bytes, as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

nlohmann::json to_json(const Warning& w);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const MatrixDiff& d);
nlohmann::json report_to_json(const RunReport& r, bool include_timing);

RunReport dispatch(const std::string& command, const std::optional<std::string>& spec_text, const Flags& flags);

}  // namespace zcyclic::cli

#endif  // ZCYCLIC_CLI_REPORT_HPP
