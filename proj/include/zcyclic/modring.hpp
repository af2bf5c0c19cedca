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

#ifndef ZCYCLIC_MODRING_HPP
#define ZCYCLIC_MODRING_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zcyclic {

/// Raw coefficient storage. Values are always kept reduced below 2^k.
using Coeff = std::uint64_t;

/// Products of two reduced values must fit in 64 bits.
inline constexpr unsigned kMaxModulusExponent = 31;

class ModulusMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

constexpr Coeff modulus_of(unsigned k) noexcept { return Coeff{1} << k; }
constexpr Coeff mask_of(unsigned k) noexcept { return modulus_of(k) - 1; }

/// Throws std::invalid_argument unless 1 <= k <= kMaxModulusExponent.
void check_exponent(unsigned k);

/// 2-adic valuation of v modulo 2^k; returns k for v == 0 (mod 2^k).
unsigned valuation2(Coeff v, unsigned k) noexcept;

/// Inverse of an odd value modulo 2^k.
Coeff inverse_mod2k(Coeff odd, unsigned k);

/// An element of Z_{2^k}.
class Residue {
   public:
    /// Throws std::out_of_range if value >= 2^k.
    Residue(Coeff value, unsigned k);
    static Residue reduce(Coeff value, unsigned k);

    Coeff value() const noexcept { return value_; }
    unsigned k() const noexcept { return k_; }
    Coeff modulus() const noexcept { return modulus_of(k_); }
    bool is_unit() const noexcept { return (value_ & 1) != 0; }

    friend Residue operator+(Residue a, Residue b);
    friend Residue operator-(Residue a, Residue b);
    friend Residue operator*(Residue a, Residue b);
    friend bool operator==(const Residue&, const Residue&) = default;

   private:
    Residue(Coeff value, unsigned k, std::nullptr_t) noexcept : value_(value), k_(k) {}
    Coeff value_;
    unsigned k_;
};

/**
 * Polynomial over Z_{2^k}, coefficients in ascending powers.
 *
 * The coefficient vector never has trailing zeros, so the zero polynomial is
 * the empty vector and degree() is std::nullopt for it. Degree is the formal
 * degree: the leading coefficient may be a zero divisor (2x^2+3 over Z_4 has
 * degree 2).
 */
class Poly {
   public:
    explicit Poly(unsigned k = 1);
    /// Coefficients are read modulo 2^k.
    Poly(std::vector<Coeff> coeffs, unsigned k);
    Poly(std::initializer_list<Coeff> coeffs, unsigned k);

    static Poly constant(Coeff c, unsigned k);
    static Poly monomial(std::size_t exponent, Coeff c, unsigned k);
    /// x^alpha - 1, i.e. x^alpha + (2^k - 1).
    static Poly x_pow_minus_one(std::size_t alpha, unsigned k);

    unsigned k() const noexcept { return k_; }
    Coeff modulus() const noexcept { return modulus_of(k_); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    Coeff coeff(std::size_t exponent) const noexcept;
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    bool has_unit_leading() const noexcept;

    /// Same integer coefficients read modulo 2^k (reduction, or lift when k grows).
    Poly at_modulus(unsigned k) const;
    /// Image in Z_{2^k}[x]/(x^alpha - 1).
    Poly wrapped(std::size_t alpha) const;
    Poly scaled(Coeff c) const;
    /// x^e * p
    Poly shifted(std::size_t e) const;

    /// Human-readable form such as "3+2x^2".
    std::string to_string() const;

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void canonicalize();

    std::vector<Coeff> coeffs_;
    unsigned k_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_neg(const Poly& p);
/// Product in Z_{2^k}[x], or in Z_{2^k}[x]/(x^alpha - 1) when alpha is given.
Poly poly_mul(const Poly& p, const Poly& q, std::optional<std::size_t> alpha = std::nullopt);

inline Poly operator+(const Poly& p, const Poly& q) { return poly_add(p, q); }
inline Poly operator-(const Poly& p, const Poly& q) { return poly_sub(p, q); }
inline Poly operator-(const Poly& p) { return poly_neg(p); }
inline Poly operator*(const Poly& p, const Poly& q) { return poly_mul(p, q); }

struct QuotientRemainder {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division g = q*f + r. Requires f nonzero with odd leading coefficient.
QuotientRemainder poly_divmod_unit_lead(const Poly& g, const Poly& f);

/**
 * Find some q with q*f == g, either in Z_{2^k}[x] or, when alpha is given, in
 * Z_{2^k}[x]/(x^alpha - 1). Decided by a linear solve over Z/2^k whose unknowns
 * are the coefficients of q, so the answer is exact within the quotient degree
 * bound:
 *   - quotient ring: deg q < alpha;
 *   - f with unit leading coefficient: deg q <= deg g - deg f;
 *   - otherwise: deg q <= deg g + (k-1) deg f, which covers the inverses of
 *     unit polynomials such as 2x^2+3 over Z_4.
 * Among admissible witnesses the one with least-value free coefficients is
 * returned.
 */
std::optional<Poly> divides_witness(const Poly& f, const Poly& g, std::optional<std::size_t> alpha = std::nullopt);

/// Dense system A x = b over Z/2^k.
class LinearSystem {
   public:
    LinearSystem(std::size_t rows, std::size_t cols, unsigned k);
    /// Throws std::invalid_argument on ragged rows or a rhs of the wrong length.
    LinearSystem(const std::vector<std::vector<Coeff>>& matrix, std::vector<Coeff> rhs, unsigned k);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    unsigned k() const noexcept { return k_; }

    Coeff at(std::size_t r, std::size_t c) const { return matrix_[r * cols_ + c]; }
    Coeff rhs(std::size_t r) const { return rhs_[r]; }
    void set(std::size_t r, std::size_t c, Coeff v) { matrix_[r * cols_ + c] = v & mask_of(k_); }
    void set_rhs(std::size_t r, Coeff v) { rhs_[r] = v & mask_of(k_); }

    /// True iff x satisfies every equation exactly.
    bool satisfied_by(std::span<const Coeff> x) const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    unsigned k_;
    std::vector<Coeff> matrix_;
    std::vector<Coeff> rhs_;
};

/**
 * One solution of A x = b over Z/2^k, or std::nullopt when none exists.
 *
 * Gaussian elimination with pivots of minimal 2-adic valuation: the pivot row
 * is divided by the unit part of its pivot, rows below are cleared, and back
 * substitution accepts a pivot 2^v only if the reduced right-hand side has
 * valuation >= v. Free variables are set to 0 and each pivot variable takes
 * its least admissible value, so the witness is deterministic.
 */
std::optional<std::vector<Coeff>> solve_linear_mod2k(const LinearSystem& sys);

}  // namespace zcyclic

#endif  // ZCYCLIC_MODRING_HPP
