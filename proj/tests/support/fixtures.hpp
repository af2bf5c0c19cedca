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

#ifndef ZCYCLIC_TESTS_FIXTURES_HPP
#define ZCYCLIC_TESTS_FIXTURES_HPP

#include <string>

#include "naive.hpp"
#include "zcyclic/cli/codespec.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(ZCYCLIC_TEST_DATA) + "/" + name; }

inline std::string text(const std::string& name) { return naive::read_file(path(name)); }

inline zcyclic::StructuredGenerators load(const std::string& name) {
    return zcyclic::cli::load_code_spec(text(name));
}

}  // namespace fixtures

#endif  // ZCYCLIC_TESTS_FIXTURES_HPP
