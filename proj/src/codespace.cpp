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

#include "zcyclic/codespace.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace zcyclic {

// ---------------------------------------------------------------- AlphabetProfile

struct AlphabetProfile::Data {
    std::vector<std::size_t> alphas;
    std::vector<std::size_t> offsets;  // size n+1
    std::vector<unsigned> violations;
    std::size_t period = 1;
    std::size_t space_bits = 0;
    std::size_t gray_length = 0;
};

AlphabetProfile::AlphabetProfile(std::vector<std::size_t> alphas, ProfileCheck check) {
    if (alphas.empty()) throw ProfileError("profile needs at least one level");
    if (alphas.size() > kMaxModulusExponent)
        throw ProfileError("profile has " + std::to_string(alphas.size()) + " levels; at most " +
                           std::to_string(kMaxModulusExponent) + " are supported");
    auto data = std::make_shared<Data>();
    data->offsets.push_back(0);
    for (std::size_t idx = 0; idx < alphas.size(); ++idx) {
        const unsigned level = static_cast<unsigned>(idx + 1);
        const std::size_t a = alphas[idx];
        if (a == 0) throw ProfileError("alpha_" + std::to_string(level) + " must be positive");
        if (std::gcd<std::size_t, std::size_t>(level, a) != 1) data->violations.push_back(level);
        data->offsets.push_back(data->offsets.back() + a);
        data->period = std::lcm(data->period, a);
        data->space_bits += level * a;
        data->gray_length += (std::size_t{1} << (level - 1)) * a;
    }
    if (!data->violations.empty() && check == ProfileCheck::strict) {
        std::string levels;
        for (unsigned v : data->violations) levels += (levels.empty() ? "" : ",") + std::to_string(v);
        throw ProfileError("gcd(i, alpha_i) != 1 at level(s) " + levels +
                           "; use the nonstandard override to accept this profile");
    }
    data->alphas = std::move(alphas);
    data_ = std::move(data);
}

unsigned AlphabetProfile::levels() const noexcept { return static_cast<unsigned>(data_->alphas.size()); }

std::size_t AlphabetProfile::alpha(unsigned level) const {
    if (level == 0 || level > levels()) throw std::out_of_range("level " + std::to_string(level) + " out of range");
    return data_->alphas[level - 1];
}

std::span<const std::size_t> AlphabetProfile::alphas() const noexcept { return data_->alphas; }

std::size_t AlphabetProfile::offset(unsigned level) const {
    if (level == 0 || level > levels()) throw std::out_of_range("level " + std::to_string(level) + " out of range");
    return data_->offsets[level - 1];
}

std::size_t AlphabetProfile::length() const noexcept { return data_->offsets.back(); }

unsigned AlphabetProfile::level_of(std::size_t flat_index) const {
    const auto& off = data_->offsets;
    const auto it = std::upper_bound(off.begin(), off.end(), flat_index);
    if (it == off.end()) throw std::out_of_range("coordinate index out of range");
    return static_cast<unsigned>(it - off.begin());
}

std::size_t AlphabetProfile::shift_period() const noexcept { return data_->period; }
std::size_t AlphabetProfile::space_bits() const noexcept { return data_->space_bits; }
std::size_t AlphabetProfile::gray_length() const noexcept { return data_->gray_length; }
bool AlphabetProfile::nonstandard() const noexcept { return !data_->violations.empty(); }
std::span<const unsigned> AlphabetProfile::gcd_violations() const noexcept { return data_->violations; }

std::vector<Warning> AlphabetProfile::warnings() const {
    std::vector<Warning> out;
    for (unsigned level : data_->violations)
        out.push_back({"nonstandard_profile", "gcd(" + std::to_string(level) + ", alpha_" + std::to_string(level) +
                                                  "=" + std::to_string(alpha(level)) + ") != 1"});
    return out;
}

std::string AlphabetProfile::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < data_->alphas.size(); ++i) s += (i ? "," : "") + std::to_string(data_->alphas[i]);
    return s + ")";
}

bool operator==(const AlphabetProfile& a, const AlphabetProfile& b) noexcept {
    return a.data_ == b.data_ || a.data_->alphas == b.data_->alphas;
}

void require_same_profile(const AlphabetProfile& a, const AlphabetProfile& b) {
    if (!(a == b)) throw std::invalid_argument("profile mismatch: " + a.to_string() + " vs " + b.to_string());
}

// ---------------------------------------------------------------- Codeword

Codeword::Codeword(AlphabetProfile profile) : profile_(std::move(profile)), coords_(profile_.length(), 0) {}

Codeword::Codeword(AlphabetProfile profile, std::vector<Coeff> coords)
    : profile_(std::move(profile)), coords_(std::move(coords)) {
    if (coords_.size() != profile_.length())
        throw std::invalid_argument("codeword has " + std::to_string(coords_.size()) + " coordinates, profile " +
                                    profile_.to_string() + " needs " + std::to_string(profile_.length()));
    for (unsigned level = 1; level <= profile_.levels(); ++level) {
        const std::size_t off = profile_.offset(level);
        for (std::size_t j = 0; j < profile_.alpha(level); ++j)
            if (coords_[off + j] >= modulus_of(level))
                throw std::invalid_argument("coordinate " + std::to_string(coords_[off + j]) + " at level " +
                                            std::to_string(level) + " exceeds modulus " +
                                            std::to_string(modulus_of(level)));
    }
}

Codeword Codeword::from_components(AlphabetProfile profile, const std::vector<std::vector<Coeff>>& components) {
    if (components.size() != profile.levels())
        throw std::invalid_argument("expected " + std::to_string(profile.levels()) + " components");
    std::vector<Coeff> flat;
    flat.reserve(profile.length());
    for (unsigned level = 1; level <= profile.levels(); ++level) {
        const auto& comp = components[level - 1];
        if (comp.size() != profile.alpha(level))
            throw std::invalid_argument("component " + std::to_string(level) + " has length " +
                                        std::to_string(comp.size()) + ", expected " +
                                        std::to_string(profile.alpha(level)));
        flat.insert(flat.end(), comp.begin(), comp.end());
    }
    return Codeword(std::move(profile), std::move(flat));
}

std::span<const Coeff> Codeword::component(unsigned level) const {
    return std::span<const Coeff>(coords_).subspan(profile_.offset(level), profile_.alpha(level));
}

Coeff Codeword::at(unsigned level, std::size_t position) const {
    if (position >= profile_.alpha(level)) throw std::out_of_range("position out of range");
    return coords_[profile_.offset(level) + position];
}

bool Codeword::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Coeff c) { return c == 0; });
}

// ---------------------------------------------------------------- PolyTuple

PolyTuple::PolyTuple(AlphabetProfile profile, std::vector<Poly> polys)
    : profile_(std::move(profile)), polys_(std::move(polys)) {
    if (polys_.size() != profile_.levels())
        throw std::invalid_argument("poly tuple needs " + std::to_string(profile_.levels()) + " components");
    for (unsigned level = 1; level <= profile_.levels(); ++level) {
        const Poly& p = polys_[level - 1];
        if (p.k() != level)
            throw ModulusMismatch("component " + std::to_string(level) + " must be over Z_2^" +
                                  std::to_string(level));
        if (p.degree() && *p.degree() >= profile_.alpha(level))
            throw std::invalid_argument("component " + std::to_string(level) + " has degree >= alpha");
    }
}

const Poly& PolyTuple::component(unsigned level) const {
    if (level == 0 || level > polys_.size()) throw std::out_of_range("level out of range");
    return polys_[level - 1];
}

// ---------------------------------------------------------------- operations

Codeword shift_T(const Codeword& v) { return shift_T(v, 1); }

Codeword shift_T(const Codeword& v, std::size_t times) {
    const AlphabetProfile& p = v.profile();
    std::vector<Coeff> out(p.length());
    const auto in = v.coords();
    for (unsigned level = 1; level <= p.levels(); ++level) {
        const std::size_t off = p.offset(level);
        const std::size_t a = p.alpha(level);
        const std::size_t s = times % a;
        for (std::size_t j = 0; j < a; ++j) out[off + (j + s) % a] = in[off + j];
    }
    return Codeword(p, std::move(out));
}

namespace {

template <class Op>
Codeword combine(const Codeword& u, const Codeword& v, Op op) {
    require_same_profile(u.profile(), v.profile());
    const AlphabetProfile& p = u.profile();
    std::vector<Coeff> out(p.length());
    const auto a = u.coords();
    const auto b = v.coords();
    for (unsigned level = 1; level <= p.levels(); ++level) {
        const std::size_t off = p.offset(level);
        const Coeff mask = mask_of(level);
        for (std::size_t j = 0; j < p.alpha(level); ++j) out[off + j] = op(a[off + j], b[off + j]) & mask;
    }
    return Codeword(p, std::move(out));
}

}  // namespace

Codeword add_codewords(const Codeword& u, const Codeword& v) {
    return combine(u, v, [](Coeff x, Coeff y) { return x + y; });
}

Codeword subtract_codewords(const Codeword& u, const Codeword& v) {
    return combine(u, v, [](Coeff x, Coeff y) { return x - y; });
}

Codeword scale_codeword(const Codeword& v, Coeff c) {
    const AlphabetProfile& p = v.profile();
    std::vector<Coeff> out(v.coords().begin(), v.coords().end());
    for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx] = (out[idx] * c) & mask_of(p.level_of(idx));
    return Codeword(p, std::move(out));
}

PolyTuple to_polys(const Codeword& v) {
    std::vector<Poly> polys;
    for (unsigned level = 1; level <= v.profile().levels(); ++level) {
        const auto comp = v.component(level);
        polys.emplace_back(std::vector<Coeff>(comp.begin(), comp.end()), level);
    }
    return PolyTuple(v.profile(), std::move(polys));
}

Codeword from_polys(const PolyTuple& u) {
    const AlphabetProfile& p = u.profile();
    std::vector<Coeff> flat(p.length(), 0);
    for (unsigned level = 1; level <= p.levels(); ++level) {
        const Poly& poly = u.component(level);
        for (std::size_t j = 0; j < p.alpha(level); ++j) flat[p.offset(level) + j] = poly.coeff(j);
    }
    return Codeword(p, std::move(flat));
}

PolyTuple scalar_mul_star(const Poly& d, const PolyTuple& u) {
    const AlphabetProfile& p = u.profile();
    std::vector<Poly> out;
    out.reserve(p.levels());
    for (unsigned level = 1; level <= p.levels(); ++level)
        out.push_back(poly_mul(d.at_modulus(level), u.component(level), p.alpha(level)));
    return PolyTuple(p, std::move(out));
}

Codeword scalar_mul_star(const Poly& d, const Codeword& v) { return from_polys(scalar_mul_star(d, to_polys(v))); }

std::string format_codeword(const Codeword& v) {
    std::string s;
    const AlphabetProfile& p = v.profile();
    for (unsigned level = 1; level <= p.levels(); ++level) {
        if (level > 1) s += '|';
        const auto comp = v.component(level);
        for (std::size_t j = 0; j < comp.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(comp[j]);
        }
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Codeword parse_codeword(const AlphabetProfile& profile, std::string_view text) {
    std::vector<std::vector<Coeff>> comps;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        const std::string_view block = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
        std::vector<Coeff> values;
        std::size_t pos = 0;
        while (pos <= block.size()) {
            const std::size_t comma = block.find(',', pos);
            const std::string_view item = trim(block.substr(pos, comma == block.npos ? block.npos : comma - pos));
            Coeff value = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
                throw std::invalid_argument("malformed codeword entry '" + std::string(item) + "'");
            values.push_back(value);
            if (comma == block.npos) break;
            pos = comma + 1;
        }
        comps.push_back(std::move(values));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Codeword::from_components(profile, comps);
}

}  // namespace zcyclic

std::size_t std::hash<zcyclic::Codeword>::operator()(const zcyclic::Codeword& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : v.coords()) {
        h ^= c + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}
