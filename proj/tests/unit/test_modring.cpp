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

#include "naive.hpp"
#include "zcyclic/modring.hpp"

using namespace zcyclic;

namespace {

naive::Vec as_vec(const Poly& p) { return naive::Vec(p.coeffs().begin(), p.coeffs().end()); }

Poly random_poly(std::mt19937_64& rng, std::size_t max_deg, unsigned k) {
    std::vector<Coeff> c(rng() % (max_deg + 1) + 1);
    for (auto& x : c) x = rng();
    return Poly(c, k);
}

}  // namespace

TEST_CASE("residue arithmetic and range checks") {
    CHECK(Residue(7, 3).value() == 7);
    CHECK_THROWS_AS(Residue(8, 3), std::out_of_range);
    CHECK(Residue::reduce(13, 3).value() == 5);
    CHECK((Residue(5, 3) + Residue(6, 3)).value() == 3);
    CHECK((Residue(1, 3) - Residue(2, 3)).value() == 7);
    CHECK((Residue(3, 3) * Residue(3, 3)).value() == 1);
    CHECK_THROWS_AS(Residue(1, 2) + Residue(1, 3), ModulusMismatch);
    CHECK(Residue(3, 2).is_unit());
    CHECK_FALSE(Residue(2, 2).is_unit());
}

TEST_CASE("2-adic valuation and odd inverses") {
    CHECK(valuation2(0, 5) == 5);
    CHECK(valuation2(12, 5) == 2);
    for (unsigned k = 1; k <= 31; k += 5)
        for (Coeff odd = 1; odd < 200; odd += 2) CHECK(((odd * inverse_mod2k(odd, k)) & mask_of(k)) == 1);
    CHECK_THROWS(inverse_mod2k(4, 3));
}

TEST_CASE("polynomials are canonical") {
    const Poly p({3, 0, 2, 0, 8}, 2);
    CHECK(p.degree() == 2u);
    CHECK(p.to_string() == "3+2x^2");
    CHECK(Poly({4, 8}, 2).is_zero());
    CHECK_FALSE(Poly(2).degree().has_value());
    CHECK(Poly::x_pow_minus_one(5, 3) == Poly({7, 0, 0, 0, 0, 1}, 3));
    CHECK(Poly({1, 0, 1}, 1).wrapped(2) == Poly(1));
    CHECK(Poly({3, 2}, 3).at_modulus(1) == Poly({1}, 1));
    CHECK_FALSE(Poly({3, 0, 2}, 2).has_unit_leading());
}

TEST_CASE("multiplication agrees with the schoolbook oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned k = 1 + rng() % 4;
        const Poly a = random_poly(rng, 6, k), b = random_poly(rng, 6, k);
        const std::int64_t m = std::int64_t{1} << k;
        CHECK(as_vec(a * b) == naive::mul(as_vec(a), as_vec(b), m));
        const std::size_t alpha = 1 + rng() % 7;
        CHECK(as_vec(poly_mul(a, b, alpha)) == naive::mul(as_vec(a), as_vec(b), m, alpha));
        CHECK(as_vec(a + b) == naive::add(as_vec(a), as_vec(b), m));
        CHECK((a - b) + b == a);
    }
    CHECK_THROWS_AS(Poly({1}, 2) * Poly({1}, 3), ModulusMismatch);
}

TEST_CASE("euclidean division with unit leading coefficient") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = 1 + rng() % 3;
        Poly f = random_poly(rng, 3, k);
        f = f + Poly::monomial(f.degree().value_or(0) + 1, 1, k);
        const Poly g = random_poly(rng, 8, k);
        const auto qr = poly_divmod_unit_lead(g, f);
        CHECK(qr.quotient * f + qr.remainder == g);
        CHECK((qr.remainder.is_zero() || *qr.remainder.degree() < *f.degree()));
    }
    CHECK_THROWS_AS(poly_divmod_unit_lead(Poly({1}, 2), Poly({1, 2}, 2)), std::domain_error);
}

TEST_CASE("divisibility witness agrees with exhaustive search") {
    // Small Z_4 and Z_8 instances, both in the polynomial ring and in a quotient ring.
    std::mt19937_64 rng(3);
    int positives = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const unsigned k = 2 + rng() % 2;
        const std::int64_t m = std::int64_t{1} << k;
        const Poly f = random_poly(rng, 2, k);
        if (f.is_zero()) continue;
        const std::size_t alpha = 2 + rng() % 2;
        Poly g = (rng() % 2) ? poly_mul(f, random_poly(rng, 2, k), alpha) : random_poly(rng, alpha - 1, k);
        const auto w = divides_witness(f, g, alpha);
        const bool expected = naive::divides_by_search(as_vec(f), as_vec(g), m, alpha - 1, alpha);
        CHECK(w.has_value() == expected);
        if (w) {
            CHECK(poly_mul(f, *w, alpha) == g.wrapped(alpha));
            ++positives;
        }
    }
    CHECK(positives > 50);
}

TEST_CASE("unit polynomial with a zero-divisor lead divides x^5 - 1 over Z_4") {
    const Poly f({3, 0, 2}, 2);
    const auto h = divides_witness(f, Poly::x_pow_minus_one(5, 2));
    REQUIRE(h.has_value());
    CHECK(f * *h == Poly::x_pow_minus_one(5, 2));
    // Frozen: found by the linear solve, checked by multiplication above.
    CHECK(*h == Poly({1, 0, 2, 0, 0, 3, 0, 2}, 2));
}

TEST_CASE("non-divisibility is reported") {
    CHECK_FALSE(divides_witness(Poly({0, 1}, 2), Poly({1, 1, 1}, 2)).has_value());
    CHECK_FALSE(divides_witness(Poly({1, 1}, 1), Poly({1, 1, 1}, 1), 3).has_value());
    CHECK(divides_witness(Poly({1, 1}, 1), Poly(1), 3) == Poly(1));
}

TEST_CASE("linear solver over Z/2^k") {
    LinearSystem sys({{2, 1}, {0, 2}}, {3, 2}, 2);
    auto x = solve_linear_mod2k(sys);
    REQUIRE(x);
    CHECK(sys.satisfied_by(*x));
    CHECK_FALSE(solve_linear_mod2k(LinearSystem({{2}}, {1}, 3)));
    CHECK_THROWS_AS(LinearSystem({{1, 2}, {1}}, {0, 0}, 2), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned k = 1 + rng() % 5;
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        std::vector<std::vector<Coeff>> a(rows, std::vector<Coeff>(cols));
        std::vector<Coeff> sol(cols);
        for (auto& r : a)
            for (auto& c : r) c = rng() & mask_of(k) & ((rng() % 3) ? ~Coeff{1} : ~Coeff{0});
        for (auto& s : sol) s = rng() & mask_of(k);
        std::vector<Coeff> b(rows, 0);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) b[r] = (b[r] + a[r][c] * sol[c]) & mask_of(k);
        LinearSystem s(a, b, k);
        auto found = solve_linear_mod2k(s);
        REQUIRE(found);
        CHECK(s.satisfied_by(*found));
    }
}
