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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zcyclic/cli/report.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace zcyclic::cli;

    CLI::App app{"zcyclic: additive cyclic codes over mixed Z_{2^i} alphabets"};
    app.require_subcommand(1);

    Flags flags;
    bool as_json = false;
    bool timing = false;
    app.add_option("--threads", flags.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--budget", flags.budget, "maximum number of codewords to enumerate");
    app.add_option("--space-budget", flags.space_budget, "maximum ambient elements to scan");
    app.add_flag("--json", as_json, "emit a JSON report");
    app.add_flag("--timing", timing, "include wall time");

    std::string spec_path;
    std::string diff_path;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"validate", "check the structural conditions"},
        {"cofactors", "print the cofactor polynomials"},
        {"span", "print the labeled spanning set"},
        {"matrix", "print the generator matrix as CSV"},
        {"enum", "enumerate every codeword"},
        {"count", "print log2 of the code size"},
        {"mindist", "minimum distance and weight distribution"},
        {"dual", "brute-force dual code"},
        {"oracle-check", "compare enumeration with the closure oracle"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("spec", spec_path, "code specification (JSON)")->required();
        if (std::string(name) == "matrix") sub->add_option("--diff", diff_path, "reference matrix CSV to compare against");
    }
    auto* gray = app.add_subcommand("gray", "Gray image of one residue");
    unsigned level = 0;
    std::uint64_t value = 0;
    gray->add_option("--level", level, "level i (modulus 2^i)")->required();
    gray->add_option("--value", value, "residue value")->required();

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    std::optional<std::string> spec;
    if (command == "gray") {
        flags.level = level;
        flags.value = value;
    } else {
        spec = read_file(spec_path);
        if (!spec) {
            std::cerr << "error: cannot read " << spec_path << '\n';
            return kBudgetOrSchema;
        }
    }
    if (!diff_path.empty()) {
        flags.diff_reference = read_file(diff_path);
        if (!flags.diff_reference) {
            std::cerr << "error: cannot read " << diff_path << '\n';
            return kBudgetOrSchema;
        }
    }

    const RunReport report = dispatch(command, spec, flags);
    if (as_json) {
        std::cout << report_to_json(report, timing).dump(2) << '\n';
    } else {
        std::cout << report.text;
        for (const auto& w : report.warnings) std::cerr << "warning: " << w.code << ": " << w.detail << '\n';
        if (timing) std::cerr << "wall_ms: " << report.wall_ms << '\n';
    }
    return report.exit_code;
}
