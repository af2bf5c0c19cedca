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

#include <cstdio>

#include "zcyclic/cli/report.hpp"

namespace zcyclic::cli {

using nlohmann::json;

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json to_json(const Warning& w) { return {{"code", w.code}, {"detail", w.detail}}; }

json to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"condition", condition_label(c.condition)},
                          {"i", c.i},
                          {"j", c.j},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(to_json(w));
    return {{"passed", r.passed()}, {"checks", checks}, {"warnings", warnings}};
}

json to_json(const MatrixDiff& d) {
    json entries = json::array();
    for (const auto& e : d.entries) {
        json row = {{"reference_row", e.reference_row}, {"status", status_name(e.status)}};
        if (e.constructed_row) row["constructed_row"] = *e.constructed_row;
        if (e.label) row["label"] = format_label(*e.label);
        if (e.duplicate_of) row["duplicate_of"] = *e.duplicate_of;
        if (!e.also_equals.empty()) row["also_equals"] = e.also_equals;
        entries.push_back(std::move(row));
    }
    json unref = json::array();
    for (std::size_t u = 0; u < d.unreferenced.size(); ++u)
        unref.push_back({{"constructed_row", d.unreferenced[u]}, {"label", format_label(d.unreferenced_labels[u])}});
    return {{"entries", entries}, {"unreferenced", unref}, {"identical", d.identical()}};
}

json report_to_json(const RunReport& r, bool include_timing) {
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(to_json(w));
    json out = {{"command", r.command},
                {"input_digest", r.input_digest},
                {"exit_code", r.exit_code},
                {"results", r.results},
                {"warnings", warnings}};
    if (include_timing) out["wall_ms"] = r.wall_ms;
    return out;
}

}  // namespace zcyclic::cli
