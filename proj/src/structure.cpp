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

#include "zcyclic/structure.hpp"

#include <numeric>
#include <sstream>

namespace zcyclic {

// ---------------------------------------------------------------- StructuredGenerators

StructuredGenerators::StructuredGenerators(AlphabetProfile profile, std::vector<std::vector<Poly>> a_layers,
                                           std::vector<std::vector<Poly>> l_offdiag)
    : profile_(std::move(profile)), a_(std::move(a_layers)), l_(std::move(l_offdiag)) {
    const unsigned n = profile_.levels();
    if (a_.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " a-levels");
    if (l_.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " l-levels");
    for (unsigned i = 1; i <= n; ++i) {
        if (a_[i - 1].size() != i)
            throw std::invalid_argument("level " + std::to_string(i) + " needs " + std::to_string(i) + " a-layers");
        if (l_[i - 1].size() != i - 1)
            throw std::invalid_argument("level " + std::to_string(i) + " needs " + std::to_string(i - 1) +
                                        " l-polynomials");
        for (unsigned j = 0; j < i; ++j) {
            const Poly& p = a_[i - 1][j];
            if (p.k() != i)
                throw ModulusMismatch("a_" + std::to_string(i) + std::to_string(j) + " must be over Z_2^" +
                                      std::to_string(i));
            if (p.is_zero())
                throw std::invalid_argument("a_" + std::to_string(i) + std::to_string(j) +
                                            " is zero; write an absent layer as x^alpha - 1");
        }
        for (unsigned j = 1; j < i; ++j)
            if (l_[i - 1][j - 1].k() != j)
                throw ModulusMismatch("l_" + std::to_string(i) + std::to_string(j) + " must be over Z_2^" +
                                      std::to_string(j));
    }
}

const Poly& StructuredGenerators::a(unsigned i, unsigned j) const {
    if (i == 0 || i > levels() || j >= i) throw std::out_of_range("a index out of range");
    return a_[i - 1][j];
}

const Poly& StructuredGenerators::l(unsigned i, unsigned j) const {
    if (i == 0 || i > levels() || j == 0 || j >= i) throw std::out_of_range("l index out of range");
    return l_[i - 1][j - 1];
}

Poly StructuredGenerators::a_combined(unsigned i) const {
    Poly sum(i);
    for (unsigned j = 0; j < i; ++j) sum = sum + a(i, j).scaled(Coeff{1} << j);
    return sum;
}

PolyTuple StructuredGenerators::generator(unsigned i) const {
    std::vector<Poly> comps;
    for (unsigned level = 1; level <= levels(); ++level) {
        const std::size_t alpha = profile_.alpha(level);
        if (level < i)
            comps.push_back(l(i, level).wrapped(alpha));
        else if (level == i)
            comps.push_back(a_combined(i).wrapped(alpha));
        else
            comps.emplace_back(level);
    }
    return PolyTuple(profile_, std::move(comps));
}

std::vector<Codeword> StructuredGenerators::generator_codewords() const {
    std::vector<Codeword> out;
    for (unsigned i = 1; i <= levels(); ++i) out.push_back(from_polys(generator(i)));
    return out;
}

// ---------------------------------------------------------------- Cofactors

NotADivisor::NotADivisor(std::string which, unsigned i, unsigned j)
    : std::runtime_error("not a divisor: cofactor " + which + "_" + std::to_string(i) + std::to_string(j) +
                         " does not exist"),
      which_(std::move(which)),
      i_(i),
      j_(j) {}

namespace {

std::string idx(unsigned i, unsigned j) { return std::to_string(i) + std::to_string(j); }

std::size_t clamp_diff(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

std::optional<Poly> h_witness(const StructuredGenerators& g, unsigned i, unsigned j) {
    return divides_witness(g.a(i, j), Poly::x_pow_minus_one(g.profile().alpha(i), i));
}

// h_(i+1)i reduced to level i, times l_(i+1)i, in Z_{2^i}[x]/(x^alpha_i - 1).
Poly divisibility_rhs(const StructuredGenerators& g, const Poly& h_next, unsigned i) {
    return poly_mul(h_next.at_modulus(i), g.l(i + 1, i), g.profile().alpha(i));
}

// d_i l_i(i-1) - h_(i+1)i l_(i+1)(i-1) in component (i-1)'s ring.
Poly compatibility_rhs(const StructuredGenerators& g, const Poly& d_i, const Poly& h_next, unsigned i) {
    const std::size_t alpha = g.profile().alpha(i - 1);
    return poly_sub(poly_mul(d_i.at_modulus(i - 1), g.l(i, i - 1), alpha),
                    poly_mul(h_next.at_modulus(i - 1), g.l(i + 1, i - 1), alpha));
}

std::optional<Poly> solve_d(const StructuredGenerators& g, const Poly& h_next, unsigned i) {
    const std::size_t alpha = g.profile().alpha(i);
    return divides_witness(g.a_combined(i).wrapped(alpha), divisibility_rhs(g, h_next, i), alpha);
}

}  // namespace

Poly divisibility_target(const StructuredGenerators& g, const Cofactors& c, unsigned i) {
    return divisibility_rhs(g, c.h_at(i + 1, i), i);
}

Cofactors derive_cofactors(const StructuredGenerators& g) {
    Cofactors c;
    const unsigned n = g.levels();
    c.levels = n;
    for (unsigned i = 1; i <= n; ++i) {
        const std::size_t alpha = g.profile().alpha(i);
        for (unsigned j = 0; j < i; ++j) {
            const Poly& a = g.a(i, j);
            auto h = h_witness(g, i, j);
            if (!h) throw NotADivisor("h", i, j);
            const std::size_t rows = clamp_diff(alpha, *a.degree());
            const std::size_t wdeg = h->degree().value_or(0);
            if (wdeg != rows)
                c.warnings.push_back({"cofactor_degree", "h_" + idx(i, j) + " witness degree " + std::to_string(wdeg) +
                                                             ", formal degree " + std::to_string(rows)});
            c.h.emplace(LayerIndex{i, j}, std::move(*h));
            c.h_rows.emplace(LayerIndex{i, j}, rows);

            if (j == 0) continue;
            const Poly& prev = g.a(i, j - 1);
            auto m = divides_witness(a, prev);
            if (!m) throw NotADivisor("m", i, j);
            if (*prev.degree() < *a.degree())
                c.warnings.push_back({"negative_formal_degree", "deg a_" + idx(i, j - 1) + " < deg a_" + idx(i, j) +
                                                                    "; S_" + idx(i, j) + " is empty"});
            const std::size_t mrows = clamp_diff(*prev.degree(), *a.degree());
            const std::size_t mdeg = m->degree().value_or(0);
            if (mdeg != mrows)
                c.warnings.push_back({"cofactor_degree", "m_" + idx(i, j) + " witness degree " +
                                                             std::to_string(mdeg) + ", formal degree " +
                                                             std::to_string(mrows)});
            c.m.emplace(LayerIndex{i, j}, std::move(*m));
            c.m_rows.emplace(LayerIndex{i, j}, mrows);
        }
    }
    for (unsigned i = 1; i < n; ++i) {
        auto d = solve_d(g, c.h_at(i + 1, i), i);
        if (!d) throw NotADivisor("d", i, i + 1);
        c.d.emplace(i, std::move(*d));
    }
    return c;
}

// ---------------------------------------------------------------- validation

std::string condition_label(Condition c) {
    switch (c) {
        case Condition::chain: return "(i)";
        case Condition::degree: return "(ii)";
        case Condition::divisibility: return "(iii)";
        case Condition::compatibility: return "(iv)";
    }
    return "(?)";
}

bool ValidationReport::passed() const noexcept { return first_failure() == nullptr; }

const ConditionCheck* ValidationReport::first_failure() const noexcept {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << "condition " << condition_label(c.condition) << " i=" << c.i << " j=" << c.j << ' '
           << (c.passed ? "PASS" : "FAIL") << ' ' << c.detail << '\n';
    for (const auto& w : warnings) os << "warning " << w.code << ' ' << w.detail << '\n';
    os << "verdict " << (passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace {

std::string degree_text(const Poly& p) { return p.degree() ? std::to_string(*p.degree()) : "none"; }

bool is_unit_polynomial(const Poly& p) {
    if (p.is_zero() || (p.coeff(0) & 1) == 0) return false;
    for (std::size_t e = 1; e < p.coeffs().size(); ++e)
        if (p.coeff(e) & 1) return false;
    return true;
}

}  // namespace

ValidationReport validate_structure(const StructuredGenerators& g) {
    ValidationReport report;
    report.warnings = g.profile().warnings();
    const unsigned n = g.levels();

    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; j < i; ++j) {
            const Poly& a = g.a(i, j);
            if (!a.has_unit_leading())
                report.warnings.push_back({"nonunit_leading", "a_" + idx(i, j) + " = " + a.to_string()});
            if (*a.degree() > 0 && is_unit_polynomial(a))
                report.warnings.push_back({"unit_layer", "a_" + idx(i, j) + " = " + a.to_string() +
                                                             " is a unit of Z_2^" + std::to_string(i) + "[x]"});
        }

    // (i)
    for (unsigned i = 1; i <= n; ++i) {
        const std::size_t alpha = g.profile().alpha(i);
        for (unsigned j = 0; j < i; ++j) {
            const Poly& divisor = g.a(i, j);
            const Poly dividend = j == 0 ? Poly::x_pow_minus_one(alpha, i) : g.a(i, j - 1);
            const std::string what = "a_" + idx(i, j) + " | " +
                                     (j == 0 ? "x^" + std::to_string(alpha) + "-1" : "a_" + idx(i, j - 1)) +
                                     " mod 2^" + std::to_string(i);
            auto q = divides_witness(divisor, dividend);
            report.checks.push_back({Condition::chain, i, j, q.has_value(),
                                     what + (q ? " quotient=" + q->to_string() : " no quotient")});
        }
    }

    // (ii)
    for (unsigned i = 1; i < n; ++i) {
        const auto check = [&](unsigned j, const Poly& lp, const Poly& bound, const std::string& bound_name) {
            const bool ok = !lp.degree() || *lp.degree() < *bound.degree();
            report.checks.push_back({Condition::degree, i, j, ok,
                                     "deg l_" + idx(i + 1, j) + "=" + degree_text(lp) + " < deg " + bound_name + "=" +
                                         degree_text(bound)});
        };
        check(1, g.l(i + 1, 1), g.a(1, 0), "a_1");
        if (i > 1) check(i, g.l(i + 1, i), g.a(i, 0), "a_" + idx(i, 0));
    }

    // (iii), (iv)
    std::map<unsigned, Poly> d;
    std::map<unsigned, Poly> h_next;
    for (unsigned i = 1; i < n; ++i)
        if (auto h = h_witness(g, i + 1, i)) h_next.emplace(i, std::move(*h));

    for (unsigned i = 1; i < n; ++i) {
        const std::string what = "a_" + std::to_string(i) + " | h_" + idx(i + 1, i) + " l_" + idx(i + 1, i) +
                                 " mod 2^" + std::to_string(i);
        if (!h_next.contains(i)) {
            report.checks.push_back({Condition::divisibility, i, i + 1, false, what + " h_" + idx(i + 1, i) + " undefined"});
            continue;
        }
        auto di = solve_d(g, h_next.at(i), i);
        report.checks.push_back({Condition::divisibility, i, i + 1, di.has_value(),
                                 what + (di ? " d_" + std::to_string(i) + "=" + di->to_string() : " no quotient")});
        if (di) d.emplace(i, std::move(*di));
    }

    for (unsigned i = 2; i < n; ++i) {
        const std::string what = "a_" + std::to_string(i - 1) + " | d_" + std::to_string(i) + " l_" + idx(i, i - 1) +
                                 " - h_" + idx(i + 1, i) + " l_" + idx(i + 1, i - 1) + " mod 2^" +
                                 std::to_string(i - 1);
        if (!d.contains(i)) {
            report.checks.push_back({Condition::compatibility, i, i - 1, false, what + " d_" + std::to_string(i) + " undefined"});
            continue;
        }
        const Poly target = compatibility_rhs(g, d.at(i), h_next.at(i), i);
        const std::size_t alpha = g.profile().alpha(i - 1);
        auto q = divides_witness(g.a_combined(i - 1).wrapped(alpha), target, alpha);
        report.checks.push_back({Condition::compatibility, i, i - 1, q.has_value(),
                                 what + (q ? " quotient=" + q->to_string() : " no quotient")});
    }
    return report;
}

// ---------------------------------------------------------------- f polynomials

ReductionFailure::ReductionFailure(unsigned j, unsigned i)
    : std::runtime_error("no solution for f_" + std::to_string(j) + std::to_string(i)), j_(j), i_(i) {}

namespace {

// Right-hand side for component j once f_k, k > j, are known (f_k with k <= skip_below are ignored).
Poly reduction_residual(const StructuredGenerators& g, const Poly& H, unsigned i, unsigned j,
                     const std::map<unsigned, Poly>& f) {
    const std::size_t alpha = g.profile().alpha(j);
    Poly r = poly_mul(g.l(i, j), H.at_modulus(j), alpha);
    for (unsigned k = j + 1; k < i; ++k) {
        auto it = f.find(k);
        if (it == f.end()) continue;
        r = poly_sub(r, poly_mul(g.l(k, j), it->second.at_modulus(j), alpha));
    }
    return r;
}

// Solve for f_1 .. f_(i-2) together, with f_(i-1) fixed.
std::optional<std::map<unsigned, Poly>> reduction_joint(const StructuredGenerators& g, const Poly& H, unsigned i,
                                                     const Poly& top) {
    const unsigned K = i - 2;
    const AlphabetProfile& p = g.profile();
    std::vector<std::size_t> length(K + 1, 0), start(K + 2, 0);
    std::size_t period = 1;
    for (unsigned k = 1; k <= K; ++k) {
        period = std::lcm(period, p.alpha(k));
        length[k] = period;
        start[k + 1] = start[k] + length[k];
    }
    const std::size_t unknowns = start[K + 1];
    std::size_t equations = 0;
    for (unsigned j = 1; j <= K; ++j) equations += p.alpha(j);

    LinearSystem sys(equations, unknowns, K);
    std::map<unsigned, Poly> fixed{{i - 1, top}};
    std::size_t row = 0;
    for (unsigned j = 1; j <= K; ++j) {
        const std::size_t alpha = p.alpha(j);
        const Coeff scale = Coeff{1} << (K - j);
        const Poly rhs = reduction_residual(g, H, i, j, fixed);
        for (std::size_t e = 0; e < alpha; ++e) {
            for (unsigned k = j; k <= K; ++k) {
                const Poly mult = (k == j ? g.a_combined(j) : g.l(k, j)).wrapped(alpha);
                for (std::size_t t = 0; t < length[k]; ++t) {
                    const Coeff c = mult.coeff((e + alpha - t % alpha) % alpha);
                    if (c) sys.set(row + e, start[k] + t, sys.at(row + e, start[k] + t) + c * scale);
                }
            }
            sys.set_rhs(row + e, rhs.coeff(e) * scale);
        }
        row += alpha;
    }
    auto x = solve_linear_mod2k(sys);
    if (!x) return std::nullopt;
    std::map<unsigned, Poly> f;
    for (unsigned k = 1; k <= K; ++k)
        f.emplace(k, Poly(std::vector<Coeff>(x->begin() + start[k], x->begin() + start[k + 1]), k));
    f.emplace(i - 1, top);
    return f;
}

}  // namespace

std::map<unsigned, Poly> compute_reduction_polys(const StructuredGenerators& g, const Cofactors& c, unsigned i) {
    if (i < 2 || i > g.levels()) throw std::out_of_range("f family needs 2 <= i <= n");
    const Poly& H = c.h_at(i, i - 1);
    std::map<unsigned, Poly> f;
    f.emplace(i - 1, c.d_at(i - 1));
    for (unsigned j = i - 1; j-- > 1;) {
        const std::size_t alpha = g.profile().alpha(j);
        const Poly rhs = reduction_residual(g, H, i, j, f);
        auto fj = divides_witness(g.a_combined(j).wrapped(alpha), rhs, alpha);
        if (!fj) {
            auto joint = reduction_joint(g, H, i, c.d_at(i - 1));
            if (!joint || !reduction_identity_holds(g, c, i, *joint)) throw ReductionFailure(j, i);
            return *joint;
        }
        f.emplace(j, std::move(*fj));
    }
    if (!reduction_identity_holds(g, c, i, f)) throw ReductionFailure(i - 1, i);
    return f;
}

bool reduction_identity_holds(const StructuredGenerators& g, const Cofactors& c, unsigned i,
                           const std::map<unsigned, Poly>& f) {
    const Poly& H = c.h_at(i, i - 1);
    for (unsigned j = 1; j < i; ++j) {
        if (!f.contains(j)) return false;
        const std::size_t alpha = g.profile().alpha(j);
        const Poly lhs = poly_mul(g.l(i, j), H.at_modulus(j), alpha);
        Poly rhs = poly_mul(g.a_combined(j).wrapped(alpha), f.at(j).at_modulus(j), alpha);
        for (unsigned k = j + 1; k < i; ++k) rhs = poly_add(rhs, poly_mul(g.l(k, j), f.at(k).at_modulus(j), alpha));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace zcyclic
