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

#include "zcyclic/duality.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "zcyclic/warning.hpp"

namespace zcyclic {

Residue inner_product(const Codeword& u, const Codeword& v) {
    require_same_profile(u.profile(), v.profile());
    const unsigned n = u.profile().levels();
    Coeff sum = 0;
    for (unsigned level = 1; level <= n; ++level) {
        Coeff part = 0;
        const auto a = u.component(level);
        const auto b = v.component(level);
        for (std::size_t x = 0; x < a.size(); ++x) part += a[x] * b[x];
        sum += part << (n - level);
    }
    return Residue::reduce(sum, n);
}

std::vector<Codeword> shift_orbit_family(const std::vector<Codeword>& generators) {
    std::vector<Codeword> out;
    for (const auto& g : generators) {
        Codeword cur = g;
        for (std::size_t k = 0; k < g.profile().shift_period(); ++k) {
            out.push_back(cur);
            cur = shift_T(cur);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Layout {
    std::vector<unsigned> level;  // per coordinate
    std::vector<Coeff> weight;    // 2^(n - level)
    std::size_t bits = 0;

    explicit Layout(const AlphabetProfile& p) {
        for (unsigned l = 1; l <= p.levels(); ++l)
            for (std::size_t x = 0; x < p.alpha(l); ++x) {
                level.push_back(l);
                weight.push_back(Coeff{1} << (p.levels() - l));
            }
        bits = p.space_bits();
    }

    // Last coordinate varies fastest, so index order is lexicographic order.
    std::vector<Coeff> decode(std::uint64_t index) const {
        std::vector<Coeff> c(level.size(), 0);
        for (std::size_t x = level.size(); x-- > 0;) {
            c[x] = index & mask_of(level[x]);
            index >>= level[x];
        }
        return c;
    }

    void increment(std::vector<Coeff>& c) const {
        for (std::size_t x = level.size(); x-- > 0;) {
            if (++c[x] < modulus_of(level[x])) return;
            c[x] = 0;
        }
    }
};

void require_budget(std::size_t bits, std::uint64_t budget) {
    if (bits >= 63 || (std::uint64_t{1} << bits) > budget)
        throw BudgetExceeded("ambient space has 2^" + std::to_string(bits) + " elements, budget is " +
                             std::to_string(budget));
}

}  // namespace

std::vector<Codeword> ambient_elements(const AlphabetProfile& profile, std::uint64_t budget) {
    const Layout lay(profile);
    require_budget(lay.bits, budget);
    std::vector<Codeword> out;
    const std::uint64_t total = std::uint64_t{1} << lay.bits;
    out.reserve(total);
    std::vector<Coeff> c(lay.level.size(), 0);
    for (std::uint64_t index = 0; index < total; ++index, lay.increment(c)) out.emplace_back(profile, c);
    return out;
}

DualResult brute_force_dual(const AlphabetProfile& profile, const std::vector<Codeword>& family,
                            std::size_t source_count, const DualOptions& options) {
    for (const auto& f : family) require_same_profile(profile, f.profile());
    const Layout lay(profile);
    require_budget(lay.bits, options.budget);
    const std::uint64_t total = std::uint64_t{1} << lay.bits;
    const Coeff mask = mask_of(profile.levels());

    std::vector<std::vector<Coeff>> weighted;
    for (const auto& f : family) {
        std::vector<Coeff> w(f.coords().begin(), f.coords().end());
        for (std::size_t x = 0; x < w.size(); ++x) w[x] *= lay.weight[x];
        weighted.push_back(std::move(w));
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));
    std::vector<std::vector<Codeword>> parts(workers);
    auto scan = [&](unsigned w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        std::vector<Coeff> c = lay.decode(lo);
        for (std::uint64_t index = lo; index < hi; ++index, lay.increment(c)) {
            bool orthogonal = true;
            for (const auto& f : weighted) {
                Coeff s = 0;
                for (std::size_t x = 0; x < c.size(); ++x) s += f[x] * c[x];
                if (s & mask) {
                    orthogonal = false;
                    break;
                }
            }
            if (orthogonal) parts[w].emplace_back(profile, c);
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    }

    DualResult result;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(result.dual));
    result.source_count = source_count;
    result.dual_count = result.dual.size();
    result.space_bits = lay.bits;

    const std::unordered_set<Codeword> members(result.dual.begin(), result.dual.end());
    result.cyclic_flag = std::all_of(result.dual.begin(), result.dual.end(),
                                     [&](const Codeword& v) { return members.contains(shift_T(v)); });
    return result;
}

bool shift_adjoint_check(const Codeword& u, const Codeword& v) {
    const std::size_t k = u.profile().shift_period();
    return inner_product(shift_T(v, k - 1), u) == inner_product(v, shift_T(u));
}

}  // namespace zcyclic
