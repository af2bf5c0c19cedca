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

#include "zcyclic/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace zcyclic {

ClosureResult module_closure(const std::vector<Codeword>& seeds, std::size_t budget) {
    ClosureResult result;
    result.generator_count = seeds.size();
    if (seeds.empty()) throw std::invalid_argument("module_closure needs at least one seed for the profile");
    const AlphabetProfile& profile = seeds.front().profile();

    std::vector<Codeword> steps;
    for (const auto& s : seeds) {
        require_same_profile(profile, s.profile());
        Codeword cur = s;
        for (std::size_t k = 0; k < profile.shift_period(); ++k) {
            if (!cur.is_zero() && std::find(steps.begin(), steps.end(), cur) == steps.end()) steps.push_back(cur);
            cur = shift_T(cur);
        }
    }

    std::unordered_set<Codeword> seen;
    std::deque<Codeword> frontier;
    seen.insert(Codeword(profile));
    frontier.emplace_back(profile);
    result.saturated = true;
    while (!frontier.empty()) {
        const Codeword cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& step : steps) {
            Codeword next = add_codewords(cur, step);
            if (seen.contains(next)) continue;
            if (seen.size() >= budget) {
                result.saturated = false;
                frontier.clear();
                break;
            }
            seen.insert(next);
            frontier.push_back(std::move(next));
        }
    }

    result.elements.assign(seen.begin(), seen.end());
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

}  // namespace zcyclic
