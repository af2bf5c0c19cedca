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

#include <random>

#include "fixtures.hpp"
#include "naive.hpp"
#include "zcyclic/metrics.hpp"
#include "zcyclic/oracle.hpp"
#include "zcyclic/spanning.hpp"

using namespace zcyclic;

namespace {

std::string bits_text(const Bits& b) {
    std::string s;
    for (auto x : b) s.push_back(x ? '1' : '0');
    return s;
}

std::size_t hamming_distance(const Bits& a, const Bits& b) {
    std::size_t d = 0;
    for (std::size_t x = 0; x < a.size(); ++x) d += a[x] != b[x];
    return d;
}

}  // namespace

TEST_CASE("Gray images over Z_8") {
    const char* expected[] = {"0000", "0001", "0011", "0111", "1111", "1110", "1100", "1000"};
    for (Coeff u = 0; u < 8; ++u) CHECK(bits_text(gray_phi(3, u)) == expected[u]);
}

TEST_CASE("closed form matches the recurrence") {
    for (unsigned level = 1; level <= 6; ++level)
        for (Coeff u = 0; u < modulus_of(level); ++u) {
            const Bits b = gray_phi(level, u);
            const auto r = naive::gray_by_recurrence(level, u);
            REQUIRE(b.size() == r.size());
            for (std::size_t x = 0; x < b.size(); ++x) CHECK(b[x] == r[x]);
        }
    CHECK(bits_text(gray_phi(2, 2)) == "11");
    CHECK(bits_text(gray_phi(Residue(5, 3))) == "1110");
    CHECK_THROWS_AS(gray_phi(3, 8), std::out_of_range);
}

TEST_CASE("Lee weight equals Gray weight, and distances transport") {
    for (unsigned level = 1; level <= 5; ++level)
        for (Coeff u = 0; u < modulus_of(level); ++u) CHECK(lee_weight(level, u) == hamming_weight(gray_phi(level, u)));
    for (unsigned level = 1; level <= 4; ++level)
        for (Coeff a = 0; a < modulus_of(level); ++a)
            for (Coeff b = 0; b < modulus_of(level); ++b)
                CHECK(lee_weight(level, (a - b) & mask_of(level)) == hamming_distance(gray_phi(level, a), gray_phi(level, b)));
}

TEST_CASE("Gray map of words") {
    AlphabetProfile p({1, 1});
    const Codeword v(p, {1, 3});
    CHECK(gray_Phi(v).to_string() == "110");
    CHECK(mixed_weight(v) == 2);
    CHECK(distance(Codeword(p), v) == 2);
    CHECK(gray_Phi(Codeword(p)).weight() == 0);
    AlphabetProfile z8({1, 1, 1});
    CHECK(mixed_weight(Codeword(z8, {0, 0, 5})) == 3);
    CHECK(gray_Phi(fixtures::load("worked_example.json").generator_codewords()[2]).size() == 38);
}

TEST_CASE("Gray map is injective and weight preserving on small profiles") {
    for (std::vector<std::size_t> alphas : {std::vector<std::size_t>{1, 1}, {2, 1}, {1, 1, 1}}) {
        AlphabetProfile p(alphas);
        naive::Space space{alphas};
        std::set<std::string> images;
        std::size_t count = 0;
        for (const auto& a : space.all()) {
            const Codeword v(p, std::vector<Coeff>(a.begin(), a.end()));
            const GrayVector g = gray_Phi(v);
            CHECK(g.size() == p.gray_length());
            CHECK(g.weight() == mixed_weight(v));
            images.insert(g.to_string());
            ++count;
        }
        CHECK(images.size() == count);
    }
}

TEST_CASE("distance is symmetric") {
    AlphabetProfile p({2, 3, 1});
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Coeff> a(6), b(6);
        for (std::size_t x = 0; x < 6; ++x) {
            a[x] = rng() & mask_of(p.level_of(x));
            b[x] = rng() & mask_of(p.level_of(x));
        }
        const Codeword u(p, a), v(p, b);
        CHECK(distance(u, v) == distance(v, u));
        CHECK(distance(u, u) == 0);
    }
}

TEST_CASE("minimum distance and weight distribution") {
    const auto g7 = fixtures::load("binary7.json");
    const auto s7 = build_spanning_set(g7, derive_cofactors(g7));
    const auto even = distinct_sorted(enumerate_codewords(s7).stream);
    CHECK(min_distance(even) == 2u);
    const auto dist7 = weight_distribution(even);
    CHECK(dist7.at(0) == 1);
    CHECK(dist7.at(2) == 21);  // C(7,2)
    CHECK(dist7.at(6) == 7);

    const auto toy = fixtures::load("toy2.json");
    const auto code = distinct_sorted(enumerate_codewords(build_spanning_set(toy, derive_cofactors(toy))).stream);
    // Independent check on the closure oracle's set.
    const auto closure = module_closure(toy.generator_codewords()).elements;
    CHECK(min_distance_pairwise(closure) == min_distance(code));
    CHECK(min_distance(code) == 2u);  // frozen after the pairwise check above
    CHECK(min_distance(code, 4) == min_distance(code, 1));
    CHECK(weight_distribution(code, 3) == weight_distribution(code, 1));
    std::size_t total = 0;
    for (const auto& [w, c] : weight_distribution(code)) total += c;
    CHECK(total == 64);
    CHECK(weight_distribution_csv({{0, 1}, {2, 3}}) == "weight,count\n0,1\n2,3\n");

    AlphabetProfile p({1, 1});
    CHECK_FALSE(min_distance({Codeword(p)}).has_value());
}
