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

#ifndef ZCYCLIC_CLI_CODESPEC_HPP
#define ZCYCLIC_CLI_CODESPEC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zcyclic/modring.hpp"
#include "zcyclic/structure.hpp"

namespace zcyclic::cli {

using CoeffArray = std::vector<Coeff>;

/**
 * Code specification document:
 *
 *   { "n": 2, "alphas": [3, 3],
 *     "a": [ [[1,1]], [[1,1,1],[1]] ],      a[i-1] = a_i0 .. a_i(i-1), ascending powers
 *     "l": [ [[1]] ],                       l[i-2] = l_i1 .. l_i(i-1), levels 2..n
 *     "allow_nonstandard_profile": false }
 *
 * "l" may be omitted when n = 1.
 */
struct CodeSpecDocument {
    unsigned n = 0;
    std::vector<std::size_t> alphas;
    std::vector<std::vector<CoeffArray>> a;
    std::vector<std::vector<CoeffArray>> l;
    bool allow_nonstandard_profile = false;
};

class SchemaError : public std::runtime_error {
   public:
    SchemaError(std::string field, const std::string& message);
    /// JSON-pointer style path of the offending field, or "line N" for syntax errors.
    const std::string& field() const noexcept { return field_; }

   private:
    std::string field_;
};

/// Throws SchemaError on syntax, shape or range errors. Coefficients are never reduced silently.
CodeSpecDocument parse_code_spec(std::string_view text);

StructuredGenerators to_generators(const CodeSpecDocument& doc);

StructuredGenerators load_code_spec(std::string_view text);

}  // namespace zcyclic::cli

#endif  // ZCYCLIC_CLI_CODESPEC_HPP
