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

#ifndef ZCYCLIC_CODESPACE_HPP
#define ZCYCLIC_CODESPACE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zcyclic/modring.hpp"
#include "zcyclic/warning.hpp"

namespace zcyclic {

enum class ProfileCheck { strict, allow_nonstandard };

class ProfileError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Shape (alpha_1, ..., alpha_n) of the ambient module Z_2^{alpha_1} x Z_4^{alpha_2} x ... x Z_{2^n}^{alpha_n}.
 *
 * Levels are 1-based; level i carries alpha_i coordinates over Z_{2^i}. The
 * strict constructor rejects profiles with gcd(i, alpha_i) != 1; the
 * allow_nonstandard path keeps them and marks the profile nonstandard.
 * Copies share one immutable block.
 */
class AlphabetProfile {
   public:
    explicit AlphabetProfile(std::vector<std::size_t> alphas, ProfileCheck check = ProfileCheck::strict);

    unsigned levels() const noexcept;
    std::size_t alpha(unsigned level) const;
    std::span<const std::size_t> alphas() const noexcept;
    /// Flat index of the first coordinate of a level.
    std::size_t offset(unsigned level) const;
    /// Total coordinate count sum(alpha_i).
    std::size_t length() const noexcept;
    unsigned level_of(std::size_t flat_index) const;
    /// lcm(alpha_1, ..., alpha_n): T to this power is the identity.
    std::size_t shift_period() const noexcept;
    /// log2 of the ambient size: sum(i * alpha_i).
    std::size_t space_bits() const noexcept;
    /// Gray image length sum(2^{i-1} alpha_i).
    std::size_t gray_length() const noexcept;

    bool nonstandard() const noexcept;
    /// Levels i with gcd(i, alpha_i) != 1.
    std::span<const unsigned> gcd_violations() const noexcept;
    std::vector<Warning> warnings() const;

    std::string to_string() const;

    friend bool operator==(const AlphabetProfile& a, const AlphabetProfile& b) noexcept;

   private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// One element of the ambient module, stored as a flat coordinate vector in profile order.
class Codeword {
   public:
    /// The zero codeword.
    explicit Codeword(AlphabetProfile profile);
    /// Throws std::invalid_argument on wrong length or a coordinate outside its modulus.
    Codeword(AlphabetProfile profile, std::vector<Coeff> coords);
    static Codeword from_components(AlphabetProfile profile, const std::vector<std::vector<Coeff>>& components);

    const AlphabetProfile& profile() const noexcept { return profile_; }
    std::span<const Coeff> coords() const noexcept { return coords_; }
    std::span<const Coeff> component(unsigned level) const;
    Coeff at(unsigned level, std::size_t position) const;
    bool is_zero() const noexcept;

    friend bool operator==(const Codeword& a, const Codeword& b) noexcept {
        return a.coords_ == b.coords_ && a.profile_ == b.profile_;
    }
    /// Lexicographic on the flat coordinates (level 1 first).
    friend std::strong_ordering operator<=>(const Codeword& a, const Codeword& b) noexcept {
        return a.coords_ <=> b.coords_;
    }

   private:
    AlphabetProfile profile_;
    std::vector<Coeff> coords_;
};

/// (u_1(x), ..., u_n(x)) with u_i over Z_{2^i} and deg u_i < alpha_i.
class PolyTuple {
   public:
    PolyTuple(AlphabetProfile profile, std::vector<Poly> polys);

    const AlphabetProfile& profile() const noexcept { return profile_; }
    const Poly& component(unsigned level) const;
    std::span<const Poly> polys() const noexcept { return polys_; }

    friend bool operator==(const PolyTuple& a, const PolyTuple& b) noexcept {
        return a.polys_ == b.polys_ && a.profile_ == b.profile_;
    }

   private:
    AlphabetProfile profile_;
    std::vector<Poly> polys_;
};

/// Simultaneous right rotation of every level.
Codeword shift_T(const Codeword& v);
Codeword shift_T(const Codeword& v, std::size_t times);

Codeword add_codewords(const Codeword& u, const Codeword& v);
Codeword subtract_codewords(const Codeword& u, const Codeword& v);
/// Integer scalar c acting as c mod 2^i on level i.
Codeword scale_codeword(const Codeword& v, Coeff c);

PolyTuple to_polys(const Codeword& v);
Codeword from_polys(const PolyTuple& u);

/**
 * d(x) * (u_1, ..., u_n) = (d u_1 mod 2, d u_2 mod 4, ..., d u_n mod 2^n), each
 * reduced mod x^{alpha_i} - 1. d is read level by level, so a scalar written
 * at a lower modulus exponent is lifted implicitly.
 */
PolyTuple scalar_mul_star(const Poly& d, const PolyTuple& u);
Codeword scalar_mul_star(const Poly& d, const Codeword& v);

/// Canonical text "c,c,...|c,...|..." with levels separated by '|'.
std::string format_codeword(const Codeword& v);
/// Inverse of format_codeword; whitespace around entries is ignored.
Codeword parse_codeword(const AlphabetProfile& profile, std::string_view text);

void require_same_profile(const AlphabetProfile& a, const AlphabetProfile& b);

}  // namespace zcyclic

template <>
struct std::hash<zcyclic::Codeword> {
    std::size_t operator()(const zcyclic::Codeword& v) const noexcept;
};

#endif  // ZCYCLIC_CODESPACE_HPP
