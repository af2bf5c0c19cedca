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
#include <unordered_set>

#include "naive.hpp"
#include "zcyclic/codespace.hpp"

using namespace zcyclic;

namespace {

naive::Vec as_vec(const Codeword& v) { return naive::Vec(v.coords().begin(), v.coords().end()); }

Codeword from_vec(const AlphabetProfile& p, const naive::Vec& v) {
    return Codeword(p, std::vector<Coeff>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("profile shape") {
    AlphabetProfile p({8, 5, 5});
    CHECK(p.levels() == 3);
    CHECK(p.length() == 18);
    CHECK(p.offset(2) == 8);
    CHECK(p.offset(3) == 13);
    CHECK(p.level_of(12) == 2);
    CHECK(p.shift_period() == 40);
    CHECK(p.space_bits() == 8 + 10 + 15);
    CHECK(p.gray_length() == 38);
    CHECK(p.to_string() == "(8,5,5)");
    CHECK_FALSE(p.nonstandard());
    CHECK(p.warnings().empty());
}

TEST_CASE("profiles with gcd(i, alpha_i) > 1") {
    CHECK_THROWS_AS(AlphabetProfile({3, 4}), ProfileError);
    AlphabetProfile p({3, 4}, ProfileCheck::allow_nonstandard);
    CHECK(p.nonstandard());
    REQUIRE(p.gcd_violations().size() == 1);
    CHECK(p.gcd_violations()[0] == 2);
    REQUIRE(p.warnings().size() == 1);
    CHECK(p.warnings()[0].code == "nonstandard_profile");
    CHECK_THROWS(AlphabetProfile({}));
    CHECK_THROWS(AlphabetProfile({0}));
}

TEST_CASE("codeword construction and text form") {
    AlphabetProfile p({2, 3});
    const Codeword v = Codeword::from_components(p, {{1, 0}, {0, 1, 2}});
    CHECK(format_codeword(v) == "1,0|0,1,2");
    CHECK(parse_codeword(p, " 1, 0 | 0,1,2 ") == v);
    CHECK_THROWS(parse_codeword(p, "1,0|0,1"));
    CHECK_THROWS(parse_codeword(p, "2,0|0,1,2"));
    CHECK_THROWS(Codeword(p, {0, 0, 0, 0, 4}));
    CHECK(Codeword(p).is_zero());
    CHECK(v.at(2, 2) == 2);
}

TEST_CASE("shift, addition and scaling match the flat oracle") {
    AlphabetProfile p({2, 3, 1});
    naive::Space space{{2, 3, 1}};
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        naive::Vec a(6), b(6);
        const auto lv = space.levels();
        for (std::size_t x = 0; x < 6; ++x) {
            a[x] = static_cast<std::int64_t>(rng() % (1u << lv[x]));
            b[x] = static_cast<std::int64_t>(rng() % (1u << lv[x]));
        }
        const Codeword u = from_vec(p, a), v = from_vec(p, b);
        CHECK(as_vec(shift_T(u)) == space.shift(a));
        CHECK(as_vec(add_codewords(u, v)) == space.add(a, b));
        CHECK(add_codewords(subtract_codewords(u, v), v) == u);
        CHECK(shift_T(u, p.shift_period()) == u);
        CHECK(scale_codeword(u, 3) == add_codewords(add_codewords(u, u), u));
    }
}

TEST_CASE("x acting on polynomials is the shift, exhaustively on (2,3)") {
    AlphabetProfile p({2, 3});
    naive::Space space{{2, 3}};
    const Poly x = Poly::monomial(1, 1, 2);
    std::size_t checked = 0;
    for (const auto& a : space.all()) {
        const Codeword v = from_vec(p, a);
        CHECK(from_polys(scalar_mul_star(x, to_polys(v))) == shift_T(v));
        CHECK(from_polys(to_polys(v)) == v);
        ++checked;
    }
    CHECK(checked == 256);
}

TEST_CASE("scalar action reads the scalar level by level") {
    AlphabetProfile p({1, 1});
    // 3 * (1; 3) = (3 mod 2; 9 mod 4) = (1; 1)
    CHECK(scalar_mul_star(Poly({3}, 2), Codeword(p, {1, 3})) == Codeword(p, {1, 1}));
    // 2 * (1; 1) = (0; 2)
    CHECK(scalar_mul_star(Poly({2}, 2), Codeword(p, {1, 1})) == Codeword(p, {0, 2}));
}

TEST_CASE("poly tuples check degrees and moduli") {
    AlphabetProfile p({2, 3});
    CHECK_THROWS(PolyTuple(p, {Poly({1, 1, 1}, 1), Poly(2)}));
    CHECK_THROWS(PolyTuple(p, {Poly({1}, 2), Poly(2)}));
    CHECK_THROWS(PolyTuple(p, {Poly(1)}));
}

TEST_CASE("profile mismatch is rejected") {
    AlphabetProfile a({1, 1}), b({1, 3});
    CHECK_THROWS(add_codewords(Codeword(a), Codeword(b)));
}

TEST_CASE("hash and ordering are consistent") {
    AlphabetProfile p({1, 1});
    std::unordered_set<Codeword> s;
    naive::Space space{{1, 1}};
    for (const auto& a : space.all()) s.insert(from_vec(p, a));
    CHECK(s.size() == 8);
    CHECK(Codeword(p, {0, 3}) < Codeword(p, {1, 0}));
}
