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

#ifndef ZCYCLIC_METRICS_HPP
#define ZCYCLIC_METRICS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zcyclic/codespace.hpp"
#include "zcyclic/modring.hpp"

namespace zcyclic {

using Bits = std::vector<unsigned char>;

// Gray image of one residue at `level`: 2^(level-1) bits, leftmost first.
// Level 1 is the identity. Throws std::out_of_range for value >= 2^level.
Bits gray_phi(unsigned level, Coeff value);
Bits gray_phi(const Residue& u);

struct GrayVector {
    Bits bits;

    std::size_t size() const noexcept { return bits.size(); }
    std::size_t weight() const noexcept;
    std::string to_string() const;
    friend bool operator==(const GrayVector&, const GrayVector&) = default;
};

GrayVector gray_Phi(const Codeword& v);

std::size_t hamming_weight(std::span<const unsigned char> bits);
std::size_t lee_weight(unsigned level, Coeff value);
// Hamming weight of level 1 plus Lee weights of the higher levels.
std::size_t mixed_weight(const Codeword& v);
std::size_t distance(const Codeword& u, const Codeword& v);

// Minimum nonzero weight; nullopt when the code has no nonzero codeword.
// Equal to the pairwise minimum for additive codes.
std::optional<std::size_t> min_distance(const std::vector<Codeword>& code, unsigned threads = 1);
// Pairwise minimum by brute force, for cross-checking small codes.
std::optional<std::size_t> min_distance_pairwise(const std::vector<Codeword>& code);

using WeightDistribution = std::map<std::size_t, std::size_t>;

WeightDistribution weight_distribution(const std::vector<Codeword>& code, unsigned threads = 1);
// "weight,count" lines with a header.
std::string weight_distribution_csv(const WeightDistribution& dist);

}  // namespace zcyclic

#endif  // ZCYCLIC_METRICS_HPP
