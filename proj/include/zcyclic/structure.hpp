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

#ifndef ZCYCLIC_STRUCTURE_HPP
#define ZCYCLIC_STRUCTURE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zcyclic/codespace.hpp"
#include "zcyclic/modring.hpp"
#include "zcyclic/warning.hpp"

namespace zcyclic {

/**
 * Triangular generator family
 *
 *     (a_1, 0, ..., 0), (l_21, a_2, 0, ..., 0), ..., (l_n1, ..., l_n(n-1), a_n)
 *
 * with a_i = sum_{j<i} 2^j a_ij over Z_{2^i}. The layers a_ij are stored at
 * modulus exponent i; l_ij sits in component j and is stored at exponent j.
 * A zero layer is rejected: an absent layer is written as x^{alpha_i} - 1.
 */
class StructuredGenerators {
   public:
    /// a_layers[i-1] holds (a_i0, ..., a_i(i-1)); l_offdiag[i-1] holds (l_i1, ..., l_i(i-1)),
    /// so l_offdiag[0] is empty. Throws std::invalid_argument on shape or modulus errors.
    StructuredGenerators(AlphabetProfile profile, std::vector<std::vector<Poly>> a_layers,
                         std::vector<std::vector<Poly>> l_offdiag);

    const AlphabetProfile& profile() const noexcept { return profile_; }
    unsigned levels() const noexcept { return profile_.levels(); }

    const Poly& a(unsigned i, unsigned j) const;
    const Poly& l(unsigned i, unsigned j) const;
    /// a_i = sum_j 2^j a_ij (not reduced mod x^alpha_i - 1).
    Poly a_combined(unsigned i) const;

    /// Generator i as a poly tuple, every component reduced in its quotient ring.
    PolyTuple generator(unsigned i) const;
    std::vector<Codeword> generator_codewords() const;

   private:
    AlphabetProfile profile_;
    std::vector<std::vector<Poly>> a_;
    std::vector<std::vector<Poly>> l_;
};

using LayerIndex = std::pair<unsigned, unsigned>;

/**
 * Cofactors of a generator family, each identity verified by multiplication:
 *   a_ij h_ij = x^{alpha_i} - 1        over Z_{2^i}[x]
 *   a_ij m_ij = a_i(j-1)              over Z_{2^i}[x], j >= 1
 *   a_i d_i  = h_(i+1)i l_(i+1)i      in Z_{2^i}[x]/(x^{alpha_i} - 1), i < n
 *
 * Row counts of the spanning blocks use formal degrees: alpha_i - deg a_ij for
 * h and deg a_i(j-1) - deg a_ij for m (clamped at 0). For unit-leading layers
 * they equal the witness degrees; otherwise a cofactor_degree warning records
 * the difference.
 */
struct Cofactors {
    unsigned levels = 0;
    std::map<LayerIndex, Poly> h;
    std::map<LayerIndex, Poly> m;
    std::map<unsigned, Poly> d;
    std::map<LayerIndex, std::size_t> h_rows;
    std::map<LayerIndex, std::size_t> m_rows;
    std::vector<Warning> warnings;

    const Poly& h_at(unsigned i, unsigned j) const { return h.at({i, j}); }
    const Poly& m_at(unsigned i, unsigned j) const { return m.at({i, j}); }
    const Poly& d_at(unsigned i) const { return d.at(i); }
};

/// A required cofactor (h, m or d) does not exist.
class NotADivisor : public std::runtime_error {
   public:
    NotADivisor(std::string which, unsigned i, unsigned j);
    const std::string& which() const noexcept { return which_; }
    unsigned i() const noexcept { return i_; }
    unsigned j() const noexcept { return j_; }

   private:
    std::string which_;
    unsigned i_;
    unsigned j_;
};

/// h_(i+1)i reduced to level i and multiplied by l_(i+1)i, in component i's ring.
Poly divisibility_target(const StructuredGenerators& g, const Cofactors& c, unsigned i);

Cofactors derive_cofactors(const StructuredGenerators& g);

enum class Condition { chain, degree, divisibility, compatibility };

/// "(i)".."(iv)"
std::string condition_label(Condition c);

struct ConditionCheck {
    Condition condition;
    unsigned i;
    unsigned j;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionCheck> checks;
    std::vector<Warning> warnings;

    bool passed() const noexcept;
    const ConditionCheck* first_failure() const noexcept;
    /// One line per condition instance, then one line per warning.
    std::string to_text() const;
};

/**
 * Checks the four structural conditions on a generator family:
 *   (i)   a_i(i-1) | ... | a_i0 | x^{alpha_i} - 1 over Z_{2^i}[x], every level;
 *   (ii)  deg l_(i+1)1 < deg a_1 and deg l_(i+1)i < deg a_i0, i = 1..n-1;
 *   (iii) a_i | h_(i+1)i l_(i+1)i in component i's ring, i = 1..n-1;
 *   (iv)  a_(i-1) | d_i l_i(i-1) - h_(i+1)i l_(i+1)(i-1) in component i-1's ring,
 *         i = 2..n-1.
 * A zero l has no degree and passes (ii). Entries come in (condition, i, j) order.
 */
ValidationReport validate_structure(const StructuredGenerators& g);

class ReductionFailure : public std::runtime_error {
   public:
    ReductionFailure(unsigned j, unsigned i);
    unsigned j() const noexcept { return j_; }
    unsigned i() const noexcept { return i_; }

   private:
    unsigned j_;
    unsigned i_;
};

/**
 * Polynomials f_ji (1 <= j < i) with
 *
 *     l_ij h_i(i-1) = a_j f_ji + sum_{k=j+1}^{i-1} l_kj f_ki
 *
 * in component j's ring. Built top-down: f_(i-1)i = d_(i-1), then each lower
 * f_ji from a divisibility solve. If a greedy step has no solution, the lower
 * family is re-solved jointly before giving up with ReductionFailure.
 * f_ji is stored at modulus exponent j.
 */
std::map<unsigned, Poly> compute_reduction_polys(const StructuredGenerators& g, const Cofactors& c, unsigned i);

/// Re-multiplies every identity of the family; true iff all hold.
bool reduction_identity_holds(const StructuredGenerators& g, const Cofactors& c, unsigned i,
                           const std::map<unsigned, Poly>& f);

}  // namespace zcyclic

#endif  // ZCYCLIC_STRUCTURE_HPP
