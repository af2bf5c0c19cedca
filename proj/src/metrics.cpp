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

#include "zcyclic/metrics.hpp"

#include <algorithm>
#include <thread>

namespace zcyclic {

Bits gray_phi(unsigned level, Coeff value) {
    check_exponent(level);
    if (value >= modulus_of(level)) throw std::out_of_range("residue out of range for level " + std::to_string(level));
    if (level == 1) return Bits{static_cast<unsigned char>(value)};
    const Coeff q = modulus_of(level - 1);
    Bits bits(q, 0);
    // Position p from the right is set iff p <= value <= p + q - 1.
    for (Coeff p = 1; p <= q; ++p) bits[q - p] = (p <= value && value <= p + q - 1) ? 1 : 0;
    return bits;
}

Bits gray_phi(const Residue& u) { return gray_phi(u.k(), u.value()); }

std::size_t GrayVector::weight() const noexcept { return hamming_weight(bits); }

std::string GrayVector::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

GrayVector gray_Phi(const Codeword& v) {
    GrayVector out;
    out.bits.reserve(v.profile().gray_length());
    for (unsigned level = 1; level <= v.profile().levels(); ++level)
        for (Coeff c : v.component(level)) {
            const Bits b = gray_phi(level, c);
            out.bits.insert(out.bits.end(), b.begin(), b.end());
        }
    return out;
}

std::size_t hamming_weight(std::span<const unsigned char> bits) {
    return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](unsigned char b) { return b != 0; }));
}

std::size_t lee_weight(unsigned level, Coeff value) {
    const Coeff m = modulus_of(level);
    value &= m - 1;
    return static_cast<std::size_t>(std::min(value, m - value));
}

std::size_t mixed_weight(const Codeword& v) {
    std::size_t w = 0;
    for (unsigned level = 1; level <= v.profile().levels(); ++level)
        for (Coeff c : v.component(level)) w += lee_weight(level, c);  // Lee weight on Z_2 is Hamming weight
    return w;
}

std::size_t distance(const Codeword& u, const Codeword& v) { return mixed_weight(subtract_codewords(u, v)); }

namespace {

template <typename Fn>
void for_each_partition(std::size_t size, unsigned threads, Fn&& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(size, 1))));
    if (workers == 1) {
        fn(0u, std::size_t{0}, size);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] { fn(w, size * w / workers, size * (w + 1) / workers); });
}

}  // namespace

std::optional<std::size_t> min_distance(const std::vector<Codeword>& code, unsigned threads) {
    std::vector<std::optional<std::size_t>> partial(std::max(1u, threads));
    for_each_partition(code.size(), threads, [&](unsigned w, std::size_t lo, std::size_t hi) {
        std::optional<std::size_t> best;
        for (std::size_t x = lo; x < hi; ++x) {
            if (code[x].is_zero()) continue;
            const std::size_t wt = mixed_weight(code[x]);
            if (!best || wt < *best) best = wt;
        }
        partial[w] = best;
    });
    std::optional<std::size_t> best;
    for (const auto& p : partial)
        if (p && (!best || *p < *best)) best = p;
    return best;
}

std::optional<std::size_t> min_distance_pairwise(const std::vector<Codeword>& code) {
    std::optional<std::size_t> best;
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) {
            if (code[a] == code[b]) continue;
            const std::size_t d = distance(code[a], code[b]);
            if (!best || d < *best) best = d;
        }
    return best;
}

WeightDistribution weight_distribution(const std::vector<Codeword>& code, unsigned threads) {
    std::vector<WeightDistribution> partial(std::max(1u, threads));
    for_each_partition(code.size(), threads, [&](unsigned w, std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) ++partial[w][mixed_weight(code[x])];
    });
    WeightDistribution merged;
    for (const auto& p : partial)
        for (const auto& [weight, count] : p) merged[weight] += count;
    return merged;
}

std::string weight_distribution_csv(const WeightDistribution& dist) {
    std::string out = "weight,count\n";
    for (const auto& [weight, count] : dist) out += std::to_string(weight) + "," + std::to_string(count) + "\n";
    return out;
}

}  // namespace zcyclic
