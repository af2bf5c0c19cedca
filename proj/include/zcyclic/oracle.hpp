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

#ifndef ZCYCLIC_ORACLE_HPP
#define ZCYCLIC_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "zcyclic/codespace.hpp"

namespace zcyclic {

struct ClosureResult {
    std::vector<Codeword> elements;  // sorted
    std::size_t generator_count = 0;
    bool saturated = false;
};

// Smallest set containing 0 and the seeds that is closed under addition and T.
// Breadth-first: every reached word is extended by every shift of every seed,
// which gives the same set as closing under + and T (integer and x-power
// scalars are sums of shifts). Stops with saturated = false once more than
// `budget` elements are reached.
ClosureResult module_closure(const std::vector<Codeword>& seeds, std::size_t budget = std::size_t{1} << 20);

}  // namespace zcyclic

#endif  // ZCYCLIC_ORACLE_HPP
