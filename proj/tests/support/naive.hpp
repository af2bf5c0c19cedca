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

// Slow reference implementations used only by the tests. None of these call
// into the library's arithmetic; they work on plain integer vectors.

#ifndef ZCYCLIC_TESTS_NAIVE_HPP
#define ZCYCLIC_TESTS_NAIVE_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace naive {

using Vec = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

inline Vec trim(Vec p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Vec reduce(Vec p, std::int64_t m) {
    for (auto& c : p) c = mod(c, m);
    return trim(p);
}

// Schoolbook product over Z_m, optionally folded mod x^alpha - 1.
inline Vec mul(const Vec& a, const Vec& b, std::int64_t m, std::size_t alpha = 0) {
    if (a.empty() || b.empty()) return {};
    Vec out(alpha ? alpha : a.size() + b.size() - 1, 0);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) {
            const std::size_t e = alpha ? (x + y) % alpha : x + y;
            out[e] = mod(out[e] + a[x] * b[y], m);
        }
    return trim(out);
}

inline Vec add(const Vec& a, const Vec& b, std::int64_t m) {
    Vec out(std::max(a.size(), b.size()), 0);
    for (std::size_t x = 0; x < a.size(); ++x) out[x] += a[x];
    for (std::size_t x = 0; x < b.size(); ++x) out[x] += b[x];
    return reduce(out, m);
}

inline Vec fold(const Vec& p, std::size_t alpha, std::int64_t m) {
    Vec out(alpha, 0);
    for (std::size_t e = 0; e < p.size(); ++e) out[e % alpha] = mod(out[e % alpha] + p[e], m);
    return trim(out);
}

// Exhaustive search for q with deg q <= max_deg and f q == g (mod x^alpha - 1 if alpha).
inline bool divides_by_search(const Vec& f, const Vec& g, std::int64_t m, std::size_t max_deg, std::size_t alpha = 0) {
    const Vec target = alpha ? fold(g, alpha, m) : reduce(g, m);
    Vec q(max_deg + 1, 0);
    while (true) {
        if (mul(f, trim(q), m, alpha) == target) return true;
        std::size_t x = 0;
        while (x < q.size() && ++q[x] == m) q[x++] = 0;
        if (x == q.size()) return false;
    }
}

// Gray image by the unit-vector recurrence: phi(m+1) = phi(m) + e at position
// (m mod q) + 1 counted from the right, starting from phi(0) = 0.
inline std::vector<int> gray_by_recurrence(unsigned level, std::uint64_t value) {
    if (level == 1) return {static_cast<int>(value)};
    const std::uint64_t q = std::uint64_t{1} << (level - 1);
    std::vector<int> bits(q, 0);
    for (std::uint64_t m = 0; m < value; ++m) {
        const std::uint64_t from_right = (m % q) + 1;
        bits[q - from_right] ^= 1;
    }
    return bits;
}

// Flat words over a profile, level i coordinates mod 2^i.
struct Space {
    std::vector<std::size_t> alphas;

    std::vector<unsigned> levels() const {
        std::vector<unsigned> out;
        for (std::size_t i = 0; i < alphas.size(); ++i) out.insert(out.end(), alphas[i], static_cast<unsigned>(i + 1));
        return out;
    }

    std::vector<Vec> all() const {
        const auto lv = levels();
        std::uint64_t total = 1;
        for (unsigned l : lv) total <<= l;
        std::vector<Vec> out;
        for (std::uint64_t index = 0; index < total; ++index) {
            Vec c(lv.size(), 0);
            std::uint64_t rest = index;
            for (std::size_t x = lv.size(); x-- > 0;) {
                c[x] = static_cast<std::int64_t>(rest % (std::uint64_t{1} << lv[x]));
                rest >>= lv[x];
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    Vec add(const Vec& u, const Vec& v) const {
        const auto lv = levels();
        Vec out(u.size());
        for (std::size_t x = 0; x < u.size(); ++x) out[x] = mod(u[x] + v[x], std::int64_t{1} << lv[x]);
        return out;
    }

    Vec shift(const Vec& u) const {
        Vec out(u.size());
        std::size_t off = 0;
        for (std::size_t a : alphas) {
            for (std::size_t x = 0; x < a; ++x) out[off + (x + 1) % a] = u[off + x];
            off += a;
        }
        return out;
    }

    std::int64_t dot(const Vec& u, const Vec& v) const {
        const auto lv = levels();
        const unsigned n = static_cast<unsigned>(alphas.size());
        std::int64_t s = 0;
        for (std::size_t x = 0; x < u.size(); ++x) s += (std::int64_t{1} << (n - lv[x])) * u[x] * v[x];
        return mod(s, std::int64_t{1} << n);
    }

    // Fixed point of {0} u seeds under pairwise sums and shifts.
    std::set<Vec> closure(const std::vector<Vec>& seeds) const {
        std::set<Vec> s(seeds.begin(), seeds.end());
        s.insert(Vec(levels().size(), 0));
        while (true) {
            std::set<Vec> next = s;
            for (const auto& u : s) {
                next.insert(shift(u));
                for (const auto& v : s) next.insert(add(u, v));
            }
            if (next.size() == s.size()) return s;
            s = std::move(next);
        }
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace naive

#endif  // ZCYCLIC_TESTS_NAIVE_HPP
