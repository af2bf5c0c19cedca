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

#include <doctest.h>

#include "fixtures.hpp"
#include "zcyclic/cli/codespec.hpp"
#include "zcyclic/cli/report.hpp"

using namespace zcyclic;
using namespace zcyclic::cli;

TEST_CASE("worked example document loads") {
    const CodeSpecDocument doc = parse_code_spec(fixtures::text("worked_example.json"));
    CHECK(doc.n == 3);
    CHECK(doc.alphas == std::vector<std::size_t>{8, 5, 5});
    CHECK(doc.a[2][2] == CoeffArray{3, 0, 2});
    CHECK(doc.l[1][1] == CoeffArray{0, 3});
    const auto g = to_generators(doc);
    CHECK(g.l(3, 2) == Poly({0, 3}, 2));
    CHECK(g.a(2, 0) == Poly({3, 0, 2}, 2));
}

TEST_CASE("single-level document without l") {
    const auto g = load_code_spec(R"({"n": 1, "alphas": [7], "a": [[[1, 1]]]})");
    CHECK(g.levels() == 1);
}

TEST_CASE("schema errors name the field") {
    auto field_of = [](const char* text) {
        try {
            load_code_spec(text);
        } catch (const SchemaError& e) {
            return e.field();
        }
        return std::string("no error");
    };
    CHECK(field_of(R"({"n": 2, "alphas": [3], "a": [[[1]], [[1], [1]]], "l": [[[1]]]})") == "/alphas");
    CHECK(field_of(R"({"n": 1, "alphas": [7], "a": [[[1, 2]]]})") == "/a/0/0/1");
    CHECK(field_of(R"({"n": 1, "alphas": [7], "a": [[[1, -1]]]})") == "/a/0/0/1");
    CHECK(field_of(R"({"n": 2, "alphas": [3, 3], "a": [[[1]], [[1], [1]]], "l": [[[2]]]})") == "/l/0/0/0");
    CHECK(field_of(R"({"n": 2, "alphas": [3, 3], "a": [[[1]], [[1], [1]]]})") == "/l");
    CHECK(field_of(R"({"n": 1, "alphas": [7], "a": [[[0]]]})") == "/a/0/0");
    CHECK(field_of(R"({"alphas": [7], "a": [[[1]]]})") == "/n");
    CHECK(field_of(R"({"n": 2, "alphas": [3, 4], "a": [[[1]], [[1], [1]]], "l": [[[1]]]})") == "/alphas");
    CHECK(field_of("{\n\"n\": 1,\n\"alphas\": [7,\n}") == "line 4");
    CHECK(field_of(R"({"n": 2, "alphas": [3, 4], "allow_nonstandard_profile": true,
                       "a": [[[1]], [[1], [1]]], "l": [[[1]]]})") == "no error");
}

TEST_CASE("dispatch results") {
    Flags flags;
    const auto toy = fixtures::text("toy2.json");
    CHECK(dispatch("count", toy, flags).text == "t=6, |C|=64\n");

    Flags gray = flags;
    gray.level = 3;
    gray.value = 5;
    CHECK(dispatch("gray", std::nullopt, gray).text == "1110\n");

    const RunReport v = dispatch("validate", fixtures::text("mutation_degree.json"), flags);
    CHECK(v.exit_code == kValidationFailure);
    CHECK(v.text.find("condition (ii) i=1 j=1 FAIL") != std::string::npos);

    const RunReport dep = dispatch("enum", fixtures::text("mutation_chain.json"), flags);
    CHECK(dep.exit_code == kValidationFailure);
    CHECK(dep.results.contains("validation"));

    const RunReport budget = dispatch("enum", fixtures::text("worked_example.json"), flags);
    CHECK(budget.exit_code == kBudgetOrSchema);
    CHECK(budget.results["error"] == "budget");

    const RunReport schema = dispatch("count", fixtures::text("bad_shape.json"), flags);
    CHECK(schema.exit_code == kBudgetOrSchema);
    CHECK(schema.results["field"] == "/alphas");

    CHECK(dispatch("frobnicate", toy, flags).exit_code == kBudgetOrSchema);

    const RunReport oc = dispatch("oracle-check", toy, flags);
    CHECK(oc.results["equal"] == true);

    const RunReport md = dispatch("mindist", toy, flags);
    CHECK(md.text.rfind("d=2\n", 0) == 0);

    const RunReport dual = dispatch("dual", toy, flags);
    CHECK(dual.results["dual_count"] == 8);
    CHECK(dual.results["cyclic"] == true);
}

TEST_CASE("reports are deterministic and carry machine-readable warnings") {
    Flags one, four;
    four.threads = 4;
    const auto spec = fixtures::text("toy2.json");
    for (const char* cmd : {"span", "enum", "mindist", "dual"}) {
        CAPTURE(cmd);
        const auto a = report_to_json(dispatch(cmd, spec, one), false).dump();
        const auto b = report_to_json(dispatch(cmd, spec, four), false).dump();
        CHECK(a == b);
        CHECK(a.find("wall_ms") == std::string::npos);
    }
    const RunReport r = dispatch("span", fixtures::text("worked_example.json"), one);
    bool duplicate = false;
    for (const auto& w : r.warnings) duplicate |= w.code == "duplicate_row";
    CHECK(duplicate);
    const auto j = report_to_json(r, true);
    CHECK(j.contains("wall_ms"));
    CHECK(j["warnings"][0].contains("code"));
    CHECK(j["input_digest"].get<std::string>().size() == 16);
}

TEST_CASE("digest") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
}
