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

#include "zcyclic/spanning.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace zcyclic {

std::string format_label(const RowLabel& label) {
    return "S" + std::to_string(label.i) + std::to_string(label.j) + "[k=" + std::to_string(label.k) + "]";
}

std::size_t SpanningSet::total_exponent() const {
    std::size_t t = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) t += coefficient_exponent(r);
    return t;
}

// ---------------------------------------------------------------- construction

namespace {

Codeword block_base(const StructuredGenerators& g, const Cofactors& c, unsigned i, unsigned j) {
    if (j == 0) return from_polys(g.generator(i));
    const AlphabetProfile& p = g.profile();
    const Poly& h = c.h_at(i, j - 1);
    std::vector<Poly> comps;
    for (unsigned level = 1; level <= g.levels(); ++level) {
        const std::size_t alpha = p.alpha(level);
        if (level < i) {
            comps.push_back(poly_mul(g.l(i, level), h.at_modulus(level), alpha));
        } else if (level == i) {
            Poly tail(i);
            for (unsigned q = j; q < i; ++q) tail = tail + g.a(i, q).scaled(Coeff{1} << q);
            comps.push_back(poly_mul(tail, h, alpha));
        } else {
            comps.emplace_back(level);
        }
    }
    return from_polys(PolyTuple(p, std::move(comps)));
}

}  // namespace

SpanningSet build_spanning_set(const StructuredGenerators& g, const Cofactors& c) {
    SpanningSet s{g.profile(), {}, {}, {}, {}, {}};
    for (unsigned i = 1; i <= g.levels(); ++i)
        for (unsigned j = 0; j < i; ++j) {
            const std::size_t count = j == 0 ? c.h_rows.at({i, j}) : c.m_rows.at({i, j});
            s.block_size[{i, j}] = count;
            if (count == 0) continue;
            const Codeword base = block_base(g, c, i, j);
            for (std::size_t k = 0; k < count; ++k) {
                Codeword row = shift_T(base, k);
                if (row.is_zero())
                    s.warnings.push_back({"zero_row", format_label({i, j, k})});
                s.rows.push_back(std::move(row));
                s.labels.push_back({i, j, k});
            }
        }

    std::unordered_map<Codeword, std::size_t> first_seen;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        auto [it, inserted] = first_seen.emplace(s.rows[r], r);
        if (!inserted) {
            s.duplicate_rows.emplace_back(r, it->second);
            s.warnings.push_back({"duplicate_row", format_label(s.labels[r]) + " equals " +
                                                       format_label(s.labels[it->second])});
        }
    }
    return s;
}

std::size_t codeword_count(const Cofactors& c) {
    std::size_t t = 0;
    for (const auto& [index, rows] : c.h_rows)
        if (index.second == 0) t += index.first * rows;
    for (const auto& [index, rows] : c.m_rows) t += (index.first - index.second) * rows;
    return t;
}

// ---------------------------------------------------------------- enumeration

namespace {

// Flat arithmetic for the enumeration inner loop.
struct FlatRows {
    std::vector<Coeff> mask;                // per coordinate
    std::vector<std::vector<Coeff>> rows;  // row coordinates
    std::vector<unsigned> exponent;         // coefficient exponent per row

    explicit FlatRows(const SpanningSet& s) {
        const AlphabetProfile& p = s.profile;
        for (unsigned level = 1; level <= p.levels(); ++level)
            mask.insert(mask.end(), p.alpha(level), mask_of(level));
        for (std::size_t r = 0; r < s.rows.size(); ++r) {
            rows.emplace_back(s.rows[r].coords().begin(), s.rows[r].coords().end());
            exponent.push_back(s.coefficient_exponent(r));
        }
    }

    void add_scaled(std::vector<Coeff>& acc, std::size_t r, Coeff factor) const {
        const auto& row = rows[r];
        for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = (acc[x] + factor * row[x]) & mask[x];
    }
};

}  // namespace

std::vector<Codeword> enumerate_range(const SpanningSet& s, std::uint64_t begin, std::uint64_t end) {
    const std::size_t t = s.total_exponent();
    if (t >= 64) throw BudgetExceeded("coefficient space 2^" + std::to_string(t) + " is not enumerable");
    const std::uint64_t total = std::uint64_t{1} << t;
    end = std::min(end, total);
    std::vector<Codeword> out;
    if (begin >= end) return out;
    out.reserve(end - begin);

    const FlatRows flat(s);
    const std::size_t nrows = flat.rows.size();
    std::vector<Coeff> digit(nrows, 0);
    std::vector<Coeff> acc(s.profile.length(), 0);
    std::uint64_t rest = begin;
    for (std::size_t r = 0; r < nrows; ++r) {
        digit[r] = rest & mask_of(flat.exponent[r]);
        rest >>= flat.exponent[r];
        if (digit[r]) flat.add_scaled(acc, r, digit[r]);
    }

    for (std::uint64_t index = begin; index < end; ++index) {
        out.emplace_back(s.profile, acc);
        for (std::size_t r = 0; r < nrows; ++r) {
            flat.add_scaled(acc, r, 1);
            if (++digit[r] < modulus_of(flat.exponent[r])) break;
            digit[r] = 0;
            flat.add_scaled(acc, r, Coeff{0} - modulus_of(flat.exponent[r]));
        }
    }
    return out;
}

std::vector<Codeword> distinct_sorted(std::vector<Codeword> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

Enumeration enumerate_codewords(const SpanningSet& s, const EnumerationOptions& options) {
    const std::size_t t = s.total_exponent();
    if (t >= 63 || (std::uint64_t{1} << t) > options.budget)
        throw BudgetExceeded("enumeration needs 2^" + std::to_string(t) + " codewords, budget is " +
                             std::to_string(options.budget));
    const std::uint64_t total = std::uint64_t{1} << t;
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));

    std::vector<std::vector<Codeword>> parts(workers);
    if (workers == 1) {
        parts[0] = enumerate_range(s, 0, total);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = total * w / workers;
            const std::uint64_t hi = total * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] { parts[w] = enumerate_range(s, lo, hi); });
        }
    }

    Enumeration result;
    result.stream.reserve(total);
    for (auto& part : parts)
        std::move(part.begin(), part.end(), std::back_inserter(result.stream));
    result.distinct = distinct_sorted(result.stream).size();
    return result;
}

// ---------------------------------------------------------------- membership

Codeword evaluate(const SpanningSet& s, const std::vector<Coeff>& coefficients) {
    if (coefficients.size() != s.rows.size()) throw std::invalid_argument("one coefficient per row expected");
    const FlatRows flat(s);
    std::vector<Coeff> acc(s.profile.length(), 0);
    for (std::size_t r = 0; r < coefficients.size(); ++r)
        if (coefficients[r]) flat.add_scaled(acc, r, coefficients[r]);
    return Codeword(s.profile, std::move(acc));
}

namespace {

// Smallest 2^e with 2^e * row = 0.
unsigned additive_order_exponent(const Codeword& row) {
    const AlphabetProfile& p = row.profile();
    unsigned e = 0;
    for (unsigned level = 1; level <= p.levels(); ++level)
        for (Coeff c : row.component(level))
            if (c) e = std::max(e, level - valuation2(c, level));
    return e;
}

Decomposition package(const SpanningSet& s, std::vector<Coeff> coefficients) {
    Decomposition d;
    std::map<LayerIndex, std::vector<Coeff>> grouped;
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const RowLabel& lab = s.labels[r];
        if (coefficients[r] >= modulus_of(s.coefficient_exponent(r))) d.within_declared_domains = false;
        auto& poly = grouped[{lab.i, lab.j}];
        poly.resize(lab.k + 1, 0);
        poly[lab.k] = coefficients[r];
    }
    for (const auto& [index, size] : s.block_size) {
        if (size == 0) continue;
        d.e.emplace(index, Poly(grouped[index], index.first));
    }
    d.coefficients = std::move(coefficients);
    return d;
}

std::optional<std::vector<Coeff>> solve_by_level(const Codeword& v, const SpanningSet& s) {
    const AlphabetProfile& p = s.profile;
    const FlatRows flat(s);
    std::vector<Coeff> residual(v.coords().begin(), v.coords().end());
    std::vector<Coeff> coefficients(s.rows.size(), 0);

    for (unsigned c = p.levels(); c >= 1; --c) {
        std::vector<std::size_t> unknowns;
        for (std::size_t r = 0; r < s.rows.size(); ++r)
            if (s.labels[r].i == c) unknowns.push_back(r);
        const std::size_t off = p.offset(c);
        const std::size_t alpha = p.alpha(c);
        if (unknowns.empty()) {
            for (std::size_t e = 0; e < alpha; ++e)
                if (residual[off + e]) return std::nullopt;
            continue;
        }
        LinearSystem sys(alpha, unknowns.size(), c);
        for (std::size_t e = 0; e < alpha; ++e) {
            for (std::size_t u = 0; u < unknowns.size(); ++u) sys.set(e, u, flat.rows[unknowns[u]][off + e]);
            sys.set_rhs(e, residual[off + e]);
        }
        auto x = solve_linear_mod2k(sys);
        if (!x) return std::nullopt;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const std::size_t r = unknowns[u];
            const Coeff value = (*x)[u] & mask_of(flat.exponent[r]);
            coefficients[r] = value;
            if (value) flat.add_scaled(residual, r, Coeff{0} - value);
        }
        for (std::size_t e = 0; e < alpha; ++e)
            if (residual[off + e]) return std::nullopt;
    }
    return coefficients;
}

std::optional<std::vector<Coeff>> solve_jointly(const Codeword& v, const SpanningSet& s) {
    const AlphabetProfile& p = s.profile;
    const unsigned n = p.levels();
    if (s.rows.empty()) return v.is_zero() ? std::optional(std::vector<Coeff>{}) : std::nullopt;
    LinearSystem sys(p.length(), s.rows.size(), n);
    for (std::size_t x = 0; x < p.length(); ++x) {
        const Coeff scale = Coeff{1} << (n - p.level_of(x));
        for (std::size_t r = 0; r < s.rows.size(); ++r) sys.set(x, r, s.rows[r].coords()[x] * scale);
        sys.set_rhs(x, v.coords()[x] * scale);
    }
    auto sol = solve_linear_mod2k(sys);
    if (!sol) return std::nullopt;
    for (std::size_t r = 0; r < s.rows.size(); ++r) (*sol)[r] &= mask_of(additive_order_exponent(s.rows[r]));
    return sol;
}

}  // namespace

std::optional<Decomposition> membership_test(const Codeword& v, const SpanningSet& s) {
    require_same_profile(v.profile(), s.profile);
    auto coefficients = solve_by_level(v, s);
    if (!coefficients) coefficients = solve_jointly(v, s);
    if (!coefficients || evaluate(s, *coefficients) != v) return std::nullopt;
    return package(s, std::move(*coefficients));
}

// ---------------------------------------------------------------- matrices

GeneratorMatrix generator_matrix(const SpanningSet& s) { return {s.profile, s.rows, s.labels}; }

std::string matrix_to_csv(const GeneratorMatrix& m) {
    std::string out;
    for (const auto& row : m.rows) out += format_codeword(row) + '\n';
    return out;
}

std::vector<Codeword> parse_matrix_csv(const AlphabetProfile& profile, std::string_view text) {
    std::vector<Codeword> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        rows.push_back(parse_codeword(profile, line));
    }
    return rows;
}

std::string status_name(MatrixDiff::Status s) {
    switch (s) {
        case MatrixDiff::Status::match: return "match";
        case MatrixDiff::Status::ambiguous: return "ambiguous";
        case MatrixDiff::Status::out_of_order: return "out_of_order";
        case MatrixDiff::Status::duplicate: return "duplicate";
        case MatrixDiff::Status::unmatched: return "unmatched";
    }
    return "?";
}

std::string MatrixDiff::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "reference row " << e.reference_row << ": " << status_name(e.status);
        if (e.duplicate_of) os << " of reference row " << *e.duplicate_of;
        if (e.constructed_row) os << " -> constructed row " << *e.constructed_row << ' ' << format_label(*e.label);
        for (std::size_t other : e.also_equals) os << " (also equals constructed row " << other << ')';
        os << '\n';
    }
    for (std::size_t u = 0; u < unreferenced.size(); ++u)
        os << "constructed row " << unreferenced[u] << ' ' << format_label(unreferenced_labels[u])
           << ": not in reference\n";
    return os.str();
}

MatrixDiff diff_matrices(const GeneratorMatrix& constructed, const std::vector<Codeword>& reference) {
    MatrixDiff diff;
    std::unordered_map<Codeword, std::vector<std::size_t>> constructed_index;
    for (std::size_t r = 0; r < constructed.rows.size(); ++r) constructed_index[constructed.rows[r]].push_back(r);
    std::unordered_map<Codeword, std::size_t> reference_index;
    std::vector<bool> used(constructed.rows.size(), false);
    std::optional<std::size_t> last_matched;

    for (std::size_t r = 0; r < reference.size(); ++r) {
        MatrixDiff::Entry entry{r + 1, MatrixDiff::Status::unmatched, std::nullopt, std::nullopt, std::nullopt, {}};
        auto [seen, fresh] = reference_index.emplace(reference[r], r);
        auto it = constructed_index.find(reference[r]);
        if (!fresh) {
            entry.status = MatrixDiff::Status::duplicate;
            entry.duplicate_of = seen->second + 1;
        } else if (it != constructed_index.end()) {
            // Prefer an unused row after the previous match, then any unused row, then the first.
            const auto& candidates = it->second;
            std::optional<std::size_t> pick;
            for (std::size_t c : candidates)
                if (!used[c] && (!last_matched || c > *last_matched)) {
                    pick = c;
                    break;
                }
            if (!pick)
                for (std::size_t c : candidates)
                    if (!used[c]) {
                        pick = c;
                        break;
                    }
            const std::size_t c = pick.value_or(candidates.front());
            used[c] = true;
            entry.constructed_row = c + 1;
            entry.label = constructed.labels.at(c);
            for (std::size_t other : candidates)
                if (other != c) entry.also_equals.push_back(other + 1);
            if (last_matched && c < *last_matched)
                entry.status = MatrixDiff::Status::out_of_order;
            else if (!entry.also_equals.empty())
                entry.status = MatrixDiff::Status::ambiguous;
            else
                entry.status = MatrixDiff::Status::match;
            last_matched = std::max(c, last_matched.value_or(0));
        }
        diff.entries.push_back(std::move(entry));
    }
    diff.positional_equal = reference == constructed.rows;
    for (std::size_t c = 0; c < used.size(); ++c)
        if (!used[c]) {
            diff.unreferenced.push_back(c + 1);
            diff.unreferenced_labels.push_back(constructed.labels.at(c));
        }
    return diff;
}

}  // namespace zcyclic
