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

#ifndef ZCYCLIC_DUALITY_HPP
#define ZCYCLIC_DUALITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zcyclic/codespace.hpp"
#include "zcyclic/modring.hpp"

namespace zcyclic {

/// sum_i 2^(n-i) <u_i, v_i> mod 2^n.
Residue inner_product(const Codeword& u, const Codeword& v);

/// Every T^k(g), k < lcm(alphas), for every g; duplicates removed, sorted.
std::vector<Codeword> shift_orbit_family(const std::vector<Codeword>& generators);

struct DualOptions {
    std::uint64_t budget = std::uint64_t{1} << 20;  // ambient elements scanned
    unsigned threads = 1;
};

struct DualResult {
    std::vector<Codeword> dual;  // sorted
    std::size_t source_count = 0;
    std::size_t dual_count = 0;
    bool cyclic_flag = false;
    /// log2 of the ambient size, for comparing |C| |C_perp| against it.
    std::size_t space_bits = 0;
};

/**
 * Scans the whole ambient module and keeps the words orthogonal to every
 * member of `family` (pass shift_orbit_family of the generators).
 * source_count is copied into the result unchanged.
 * Throws BudgetExceeded when 2^space_bits exceeds the budget.
 */
DualResult brute_force_dual(const AlphabetProfile& profile, const std::vector<Codeword>& family,
                            std::size_t source_count = 0, const DualOptions& options = {});

/// T^(k-1)(v) . u == v . T(u), with k = lcm(alphas).
bool shift_adjoint_check(const Codeword& u, const Codeword& v);

/// Every element of the ambient module in lexicographic order; throws BudgetExceeded above budget.
std::vector<Codeword> ambient_elements(const AlphabetProfile& profile, std::uint64_t budget);

}  // namespace zcyclic

#endif  // ZCYCLIC_DUALITY_HPP
