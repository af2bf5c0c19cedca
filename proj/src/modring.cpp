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

#include "zcyclic/modring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <utility>

namespace zcyclic {

void check_exponent(unsigned k) {
    if (k == 0 || k > kMaxModulusExponent)
        throw std::invalid_argument("modulus exponent must lie in [1, " + std::to_string(kMaxModulusExponent) +
                                    "], got " + std::to_string(k));
}

unsigned valuation2(Coeff v, unsigned k) noexcept {
    v &= mask_of(k);
    if (v == 0) return k;
    return static_cast<unsigned>(std::countr_zero(v));
}

Coeff inverse_mod2k(Coeff odd, unsigned k) {
    if ((odd & 1) == 0) throw std::domain_error("inverse_mod2k: value is not a unit");
    // Newton iteration doubles the number of correct low bits; odd*odd == 1 mod 8.
    Coeff x = odd;
    for (int i = 0; i < 5; ++i) x *= Coeff{2} - odd * x;
    return x & mask_of(k);
}

// ---------------------------------------------------------------- Residue

Residue::Residue(Coeff value, unsigned k) : value_(value), k_(k) {
    check_exponent(k);
    if (value >= modulus_of(k))
        throw std::out_of_range("residue " + std::to_string(value) + " out of range mod 2^" + std::to_string(k));
}

Residue Residue::reduce(Coeff value, unsigned k) {
    check_exponent(k);
    return Residue(value & mask_of(k), k, nullptr);
}

namespace {

void require_same(unsigned a, unsigned b) {
    if (a != b)
        throw ModulusMismatch("modulus mismatch: 2^" + std::to_string(a) + " vs 2^" + std::to_string(b));
}

}  // namespace

Residue operator+(Residue a, Residue b) {
    require_same(a.k_, b.k_);
    return Residue((a.value_ + b.value_) & mask_of(a.k_), a.k_, nullptr);
}

Residue operator-(Residue a, Residue b) {
    require_same(a.k_, b.k_);
    return Residue((a.value_ - b.value_) & mask_of(a.k_), a.k_, nullptr);
}

Residue operator*(Residue a, Residue b) {
    require_same(a.k_, b.k_);
    return Residue((a.value_ * b.value_) & mask_of(a.k_), a.k_, nullptr);
}

// ---------------------------------------------------------------- Poly

Poly::Poly(unsigned k) : k_(k) { check_exponent(k); }

Poly::Poly(std::vector<Coeff> coeffs, unsigned k) : coeffs_(std::move(coeffs)), k_(k) {
    check_exponent(k);
    for (auto& c : coeffs_) c &= mask_of(k_);
    canonicalize();
}

Poly::Poly(std::initializer_list<Coeff> coeffs, unsigned k) : Poly(std::vector<Coeff>(coeffs), k) {}

Poly Poly::constant(Coeff c, unsigned k) { return Poly(std::vector<Coeff>{c}, k); }

Poly Poly::monomial(std::size_t exponent, Coeff c, unsigned k) {
    std::vector<Coeff> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(std::move(v), k);
}

Poly Poly::x_pow_minus_one(std::size_t alpha, unsigned k) {
    std::vector<Coeff> v(alpha + 1, 0);
    v[0] = mask_of(k);
    v[alpha] += 1;
    return Poly(std::move(v), k);
}

void Poly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Coeff Poly::coeff(std::size_t exponent) const noexcept {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
}

bool Poly::has_unit_leading() const noexcept { return !coeffs_.empty() && (coeffs_.back() & 1) != 0; }

Poly Poly::at_modulus(unsigned k) const { return Poly(coeffs_, k); }

Poly Poly::wrapped(std::size_t alpha) const {
    if (alpha == 0) throw std::invalid_argument("wrapped: alpha must be positive");
    if (coeffs_.size() <= alpha) return *this;
    std::vector<Coeff> v(alpha, 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) v[e % alpha] += coeffs_[e];
    return Poly(std::move(v), k_);
}

Poly Poly::scaled(Coeff c) const {
    std::vector<Coeff> v(coeffs_);
    c &= mask_of(k_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v), k_);
}

Poly Poly::shifted(std::size_t e) const {
    if (is_zero()) return *this;
    std::vector<Coeff> v(e, 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v), k_);
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const Coeff c = coeffs_[e];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'x';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) {
    require_same(p.k(), q.k());
    std::vector<Coeff> v(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t e = 0; e < v.size(); ++e) v[e] = p.coeff(e) + q.coeff(e);
    return Poly(std::move(v), p.k());
}

Poly poly_neg(const Poly& p) { return p.scaled(mask_of(p.k())); }

Poly poly_sub(const Poly& p, const Poly& q) { return poly_add(p, poly_neg(q)); }

Poly poly_mul(const Poly& p, const Poly& q, std::optional<std::size_t> alpha) {
    require_same(p.k(), q.k());
    if (alpha && *alpha == 0) throw std::invalid_argument("poly_mul: alpha must be positive");
    if (p.is_zero() || q.is_zero()) return Poly(p.k());
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    const Coeff mask = mask_of(p.k());
    const std::size_t len = alpha ? std::min(*alpha, a.size() + b.size() - 1) : a.size() + b.size() - 1;
    std::vector<Coeff> v(len, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t e = alpha ? (i + j) % *alpha : i + j;
            v[e] = (v[e] + a[i] * b[j]) & mask;
        }
    }
    return Poly(std::move(v), p.k());
}

QuotientRemainder poly_divmod_unit_lead(const Poly& g, const Poly& f) {
    require_same(g.k(), f.k());
    if (f.is_zero()) throw std::domain_error("poly_divmod_unit_lead: division by zero polynomial");
    if (!f.has_unit_leading()) throw std::domain_error("poly_divmod_unit_lead: leading coefficient is not a unit");
    const unsigned k = g.k();
    const Coeff mask = mask_of(k);
    const std::size_t df = *f.degree();
    const Coeff inv = inverse_mod2k(f.coeffs().back(), k);

    std::vector<Coeff> r(g.coeffs().begin(), g.coeffs().end());
    if (r.size() <= df) return {Poly(k), g};
    std::vector<Coeff> q(r.size() - df, 0);
    for (std::size_t e = r.size(); e-- > df;) {
        const Coeff c = (r[e] * inv) & mask;
        q[e - df] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= df; ++t) r[e - df + t] = (r[e - df + t] - c * f.coeff(t)) & mask;
    }
    r.resize(df);
    return {Poly(std::move(q), k), Poly(std::move(r), k)};
}

std::optional<Poly> divides_witness(const Poly& f, const Poly& g, std::optional<std::size_t> alpha) {
    require_same(f.k(), g.k());
    const unsigned k = f.k();

    if (alpha) {
        if (*alpha == 0) throw std::invalid_argument("divides_witness: alpha must be positive");
        const std::size_t n = *alpha;
        const Poly fr = f.wrapped(n);
        const Poly gr = g.wrapped(n);
        LinearSystem sys(n, n, k);
        for (std::size_t e = 0; e < n; ++e) {
            for (std::size_t c = 0; c < n; ++c) sys.set(e, c, fr.coeff((e + n - c) % n));
            sys.set_rhs(e, gr.coeff(e));
        }
        auto x = solve_linear_mod2k(sys);
        if (!x) return std::nullopt;
        Poly q(std::move(*x), k);
        if (poly_mul(q, fr, n) != gr) throw std::logic_error("divides_witness: multiply-back failed");
        return q;
    }

    if (g.is_zero()) return Poly(k);
    if (f.is_zero()) return std::nullopt;
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    std::size_t unknowns;
    if (f.has_unit_leading()) {
        if (dg < df) return std::nullopt;
        unknowns = dg - df + 1;
    } else {
        unknowns = dg + (k - 1) * df + 1;
    }
    const std::size_t equations = df + unknowns;
    LinearSystem sys(equations, unknowns, k);
    for (std::size_t e = 0; e < equations; ++e) {
        for (std::size_t c = 0; c < unknowns && c <= e; ++c)
            if (e - c <= df) sys.set(e, c, f.coeff(e - c));
        sys.set_rhs(e, g.coeff(e));
    }
    auto x = solve_linear_mod2k(sys);
    if (!x) return std::nullopt;
    Poly q(std::move(*x), k);
    if (poly_mul(q, f) != g) throw std::logic_error("divides_witness: multiply-back failed");
    return q;
}

// ---------------------------------------------------------------- LinearSystem

LinearSystem::LinearSystem(std::size_t rows, std::size_t cols, unsigned k)
    : rows_(rows), cols_(cols), k_(k), matrix_(rows * cols, 0), rhs_(rows, 0) {
    check_exponent(k);
}

LinearSystem::LinearSystem(const std::vector<std::vector<Coeff>>& matrix, std::vector<Coeff> rhs, unsigned k)
    : LinearSystem(matrix.size(), matrix.empty() ? 0 : matrix.front().size(), k) {
    if (rhs.size() != rows_)
        throw std::invalid_argument("LinearSystem: rhs has " + std::to_string(rhs.size()) + " entries, expected " +
                                    std::to_string(rows_));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (matrix[r].size() != cols_) throw std::invalid_argument("LinearSystem: ragged matrix");
        for (std::size_t c = 0; c < cols_; ++c) set(r, c, matrix[r][c]);
        set_rhs(r, rhs[r]);
    }
}

bool LinearSystem::satisfied_by(std::span<const Coeff> x) const {
    if (x.size() != cols_) return false;
    const Coeff mask = mask_of(k_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Coeff acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + at(r, c) * (x[c] & mask)) & mask;
        if (acc != rhs_[r]) return false;
    }
    return true;
}

std::optional<std::vector<Coeff>> solve_linear_mod2k(const LinearSystem& sys) {
    const unsigned k = sys.k();
    const Coeff mask = mask_of(k);
    const std::size_t R = sys.rows();
    const std::size_t C = sys.cols();

    std::vector<Coeff> a(R * C);
    std::vector<Coeff> b(R);
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) a[r * C + c] = sys.at(r, c);
        b[r] = sys.rhs(r);
    }
    std::vector<std::size_t> column(C);  // permuted position -> original unknown
    std::iota(column.begin(), column.end(), std::size_t{0});
    std::vector<unsigned> pivot_val;

    std::size_t rank = 0;
    while (rank < R && rank < C) {
        unsigned best = k;
        std::size_t br = rank, bc = rank;
        for (std::size_t r = rank; r < R && best > 0; ++r)
            for (std::size_t c = rank; c < C; ++c) {
                const unsigned v = valuation2(a[r * C + c], k);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                    if (v == 0) break;
                }
            }
        if (best == k) break;

        if (br != rank) {
            for (std::size_t c = 0; c < C; ++c) std::swap(a[br * C + c], a[rank * C + c]);
            std::swap(b[br], b[rank]);
        }
        if (bc != rank) {
            for (std::size_t r = 0; r < R; ++r) std::swap(a[r * C + bc], a[r * C + rank]);
            std::swap(column[bc], column[rank]);
        }

        const Coeff inv = inverse_mod2k(a[rank * C + rank] >> best, k);
        for (std::size_t c = rank; c < C; ++c) a[rank * C + c] = (a[rank * C + c] * inv) & mask;
        b[rank] = (b[rank] * inv) & mask;

        for (std::size_t r = rank + 1; r < R; ++r) {
            const Coeff e = a[r * C + rank];
            if (e == 0) continue;
            const Coeff factor = e >> best;
            for (std::size_t c = rank; c < C; ++c) a[r * C + c] = (a[r * C + c] - factor * a[rank * C + c]) & mask;
            b[r] = (b[r] - factor * b[rank]) & mask;
        }
        pivot_val.push_back(best);
        ++rank;
    }

    for (std::size_t r = rank; r < R; ++r)
        if (b[r] != 0) return std::nullopt;

    std::vector<Coeff> y(C, 0);
    for (std::size_t t = rank; t-- > 0;) {
        Coeff rhs = b[t];
        for (std::size_t c = t + 1; c < C; ++c) rhs = (rhs - a[t * C + c] * y[c]) & mask;
        const unsigned v = pivot_val[t];
        if (valuation2(rhs, k) < v) return std::nullopt;
        y[t] = rhs >> v;
    }

    std::vector<Coeff> x(C, 0);
    for (std::size_t p = 0; p < C; ++p) x[column[p]] = y[p];
    return x;
}

}  // namespace zcyclic
