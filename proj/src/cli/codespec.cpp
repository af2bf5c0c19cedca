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

#include "zcyclic/cli/codespec.hpp"

#include <algorithm>
#include <json.hpp>

#include "zcyclic/codespace.hpp"

namespace zcyclic::cli {

using nlohmann::json;

SchemaError::SchemaError(std::string field, const std::string& message)
    : std::runtime_error("schema error at " + field + ": " + message), field_(std::move(field)) {}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

const json& member(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) throw SchemaError(std::string("/") + name, "missing field");
    return *it;
}

const json& require_array(const json& j, const std::string& path, std::size_t size) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    if (j.size() != size)
        throw SchemaError(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    return j;
}

CoeffArray read_coefficients(const json& j, const std::string& path, unsigned level) {
    if (!j.is_array()) throw SchemaError(path, "expected a coefficient array");
    CoeffArray out;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string at = path + "/" + std::to_string(e);
        if (!j[e].is_number_integer()) throw SchemaError(at, "expected an integer");
        if (j[e].is_number_unsigned() ? false : j[e].get<long long>() < 0)
            throw SchemaError(at, "negative coefficient");
        const auto value = j[e].get<unsigned long long>();
        if (value >= modulus_of(level))
            throw SchemaError(at, std::to_string(value) + " is out of range for Z_" + std::to_string(modulus_of(level)));
        out.push_back(static_cast<Coeff>(value));
    }
    return out;
}

}  // namespace

CodeSpecDocument parse_code_spec(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("line " + std::to_string(line_of(text, e.byte ? e.byte - 1 : 0)), e.what());
    }
    if (!root.is_object()) throw SchemaError("/", "expected an object");

    CodeSpecDocument doc;
    const json& n = member(root, "n");
    if (!n.is_number_unsigned() || n.get<unsigned long long>() == 0 || n.get<unsigned long long>() > kMaxModulusExponent)
        throw SchemaError("/n", "expected an integer in 1.." + std::to_string(kMaxModulusExponent));
    doc.n = n.get<unsigned>();

    const json& alphas = require_array(member(root, "alphas"), "/alphas", doc.n);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!alphas[i].is_number_unsigned() || alphas[i].get<unsigned long long>() == 0)
            throw SchemaError("/alphas/" + std::to_string(i), "expected a positive integer");
        doc.alphas.push_back(alphas[i].get<std::size_t>());
    }

    const json& a = require_array(member(root, "a"), "/a", doc.n);
    for (unsigned i = 1; i <= doc.n; ++i) {
        const std::string path = "/a/" + std::to_string(i - 1);
        const json& layers = require_array(a[i - 1], path, i);
        std::vector<CoeffArray> level;
        for (unsigned j = 0; j < i; ++j) level.push_back(read_coefficients(layers[j], path + "/" + std::to_string(j), i));
        doc.a.push_back(std::move(level));
    }

    auto l_it = root.find("l");
    if (l_it == root.end()) {
        if (doc.n > 1) throw SchemaError("/l", "missing field");
    } else {
        const json& l = require_array(*l_it, "/l", doc.n - 1);
        for (unsigned i = 2; i <= doc.n; ++i) {
            const std::string path = "/l/" + std::to_string(i - 2);
            const json& entries = require_array(l[i - 2], path, i - 1);
            std::vector<CoeffArray> level;
            for (unsigned j = 1; j < i; ++j)
                level.push_back(read_coefficients(entries[j - 1], path + "/" + std::to_string(j - 1), j));
            doc.l.push_back(std::move(level));
        }
    }

    if (auto it = root.find("allow_nonstandard_profile"); it != root.end()) {
        if (!it->is_boolean()) throw SchemaError("/allow_nonstandard_profile", "expected a boolean");
        doc.allow_nonstandard_profile = it->get<bool>();
    }
    return doc;
}

StructuredGenerators to_generators(const CodeSpecDocument& doc) {
    std::optional<AlphabetProfile> profile;
    try {
        profile.emplace(doc.alphas,
                        doc.allow_nonstandard_profile ? ProfileCheck::allow_nonstandard : ProfileCheck::strict);
    } catch (const ProfileError& e) {
        throw SchemaError("/alphas", e.what());
    }

    std::vector<std::vector<Poly>> a;
    for (unsigned i = 1; i <= doc.n; ++i) {
        std::vector<Poly> level;
        for (unsigned j = 0; j < i; ++j) {
            Poly p(doc.a[i - 1][j], i);
            if (p.is_zero())
                throw SchemaError("/a/" + std::to_string(i - 1) + "/" + std::to_string(j),
                                  "zero layer; write an absent layer as x^alpha - 1");
            level.push_back(std::move(p));
        }
        a.push_back(std::move(level));
    }
    std::vector<std::vector<Poly>> l{{}};
    for (unsigned i = 2; i <= doc.n; ++i) {
        std::vector<Poly> level;
        for (unsigned j = 1; j < i; ++j) level.emplace_back(doc.l[i - 2][j - 1], j);
        l.push_back(std::move(level));
    }
    return StructuredGenerators(*profile, std::move(a), std::move(l));
}

StructuredGenerators load_code_spec(std::string_view text) { return to_generators(parse_code_spec(text)); }

}  // namespace zcyclic::cli
