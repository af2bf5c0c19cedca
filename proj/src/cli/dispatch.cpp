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

#include <chrono>
#include <sstream>

#include "zcyclic/cli/codespec.hpp"
#include "zcyclic/cli/report.hpp"
#include "zcyclic/duality.hpp"
#include "zcyclic/metrics.hpp"
#include "zcyclic/oracle.hpp"

namespace zcyclic::cli {

using nlohmann::json;

namespace {

class ValidationFailed : public std::runtime_error {
   public:
    explicit ValidationFailed(ValidationReport r) : std::runtime_error("validation failed"), report(std::move(r)) {}
    ValidationReport report;
};

std::string count_text(std::size_t t) {
    if (t < 64) return std::to_string(std::uint64_t{1} << t);
    return "2^" + std::to_string(t);
}

void append(std::vector<Warning>& into, const std::vector<Warning>& from) {
    into.insert(into.end(), from.begin(), from.end());
}

struct Pipeline {
    const Flags& flags;
    RunReport& report;
    std::optional<StructuredGenerators> gens;
    std::optional<Cofactors> cof;
    std::optional<SpanningSet> span;

    const StructuredGenerators& generators(const std::optional<std::string>& spec) {
        if (!gens) {
            if (!spec) throw SchemaError("<input>", "command needs a code specification file");
            gens.emplace(load_code_spec(*spec));
        }
        return *gens;
    }

    // Validates, then derives cofactors; dependent commands stop here on failure.
    const Cofactors& cofactors(const std::optional<std::string>& spec) {
        if (!cof) {
            const auto& g = generators(spec);
            ValidationReport v = validate_structure(g);
            if (!v.passed()) throw ValidationFailed(std::move(v));
            append(report.warnings, v.warnings);
            cof.emplace(derive_cofactors(g));
            append(report.warnings, cof->warnings);
        }
        return *cof;
    }

    const SpanningSet& spanning(const std::optional<std::string>& spec) {
        if (!span) {
            const auto& c = cofactors(spec);
            span.emplace(build_spanning_set(*gens, c));
            append(report.warnings, span->warnings);
        }
        return *span;
    }

    Enumeration enumerate(const std::optional<std::string>& spec) {
        return enumerate_codewords(spanning(spec), {flags.budget, flags.threads});
    }
};

json codeword_list(const std::vector<Codeword>& words) {
    json out = json::array();
    for (const auto& w : words) out.push_back(format_codeword(w));
    return out;
}

void run(const std::string& command, const std::optional<std::string>& spec, const Flags& flags, RunReport& r) {
    Pipeline p{flags, r, {}, {}, {}};
    std::ostringstream text;

    if (command == "gray") {
        if (!flags.level || !flags.value) throw SchemaError("--level/--value", "gray needs --level and --value");
        const GrayVector v{gray_phi(*flags.level, *flags.value)};
        r.results = {{"level", *flags.level}, {"value", *flags.value}, {"bits", v.to_string()}};
        text << v.to_string() << '\n';
    } else if (command == "validate") {
        const ValidationReport v = validate_structure(p.generators(spec));
        r.results = to_json(v);
        append(r.warnings, v.warnings);
        text << v.to_text();
        if (!v.passed()) r.exit_code = kValidationFailure;
    } else if (command == "cofactors") {
        const Cofactors& c = p.cofactors(spec);
        json h = json::array(), m = json::array(), d = json::array();
        for (const auto& [idx, poly] : c.h) {
            h.push_back({{"i", idx.first}, {"j", idx.second}, {"poly", poly.to_string()}, {"rows", c.h_rows.at(idx)}});
            text << "h_" << idx.first << idx.second << " = " << poly.to_string() << "  rows=" << c.h_rows.at(idx)
                 << '\n';
        }
        for (const auto& [idx, poly] : c.m) {
            m.push_back({{"i", idx.first}, {"j", idx.second}, {"poly", poly.to_string()}, {"rows", c.m_rows.at(idx)}});
            text << "m_" << idx.first << idx.second << " = " << poly.to_string() << "  rows=" << c.m_rows.at(idx)
                 << '\n';
        }
        for (const auto& [i, poly] : c.d) {
            d.push_back({{"i", i}, {"poly", poly.to_string()}});
            text << "d_" << i << " = " << poly.to_string() << '\n';
        }
        r.results = {{"h", h}, {"m", m}, {"d", d}};
    } else if (command == "span") {
        const SpanningSet& s = p.spanning(spec);
        json blocks = json::array(), rows = json::array();
        for (const auto& [idx, size] : s.block_size) {
            blocks.push_back({{"i", idx.first}, {"j", idx.second}, {"rows", size}});
            text << "# block S" << idx.first << idx.second << " rows=" << size << '\n';
        }
        for (std::size_t x = 0; x < s.rows.size(); ++x) {
            rows.push_back({{"label", format_label(s.labels[x])}, {"codeword", format_codeword(s.rows[x])}});
            text << format_label(s.labels[x]) << ' ' << format_codeword(s.rows[x]) << '\n';
        }
        r.results = {{"blocks", blocks}, {"rows", rows}};
    } else if (command == "matrix") {
        const GeneratorMatrix m = generator_matrix(p.spanning(spec));
        json rows = json::array();
        for (const auto& row : m.rows) rows.push_back(std::vector<Coeff>(row.coords().begin(), row.coords().end()));
        r.results = {{"profile", std::vector<std::size_t>(m.profile.alphas().begin(), m.profile.alphas().end())},
                     {"rows", rows}};
        if (flags.diff_reference) {
            const MatrixDiff d = diff_matrices(m, parse_matrix_csv(m.profile, *flags.diff_reference));
            r.results["diff"] = to_json(d);
            for (const auto& e : d.entries)
                if (e.status != MatrixDiff::Status::match)
                    r.warnings.push_back({"matrix_diff", "reference row " + std::to_string(e.reference_row) + " " +
                                                             status_name(e.status)});
            text << d.to_text();
        } else {
            text << matrix_to_csv(m);
        }
    } else if (command == "enum") {
        const Enumeration e = p.enumerate(spec);
        r.results = {{"t", p.span->total_exponent()}, {"distinct", e.distinct}, {"codewords", codeword_list(e.stream)}};
        text << "# t=" << p.span->total_exponent() << " emitted=" << e.stream.size() << " distinct=" << e.distinct
             << '\n';
        for (const auto& w : e.stream) text << format_codeword(w) << '\n';
        if (e.distinct != e.stream.size())
            r.warnings.push_back({"minimality_violation", "emitted " + std::to_string(e.stream.size()) +
                                                              " codewords, " + std::to_string(e.distinct) + " distinct"});
    } else if (command == "count") {
        const std::size_t t = codeword_count(p.cofactors(spec));
        r.results = {{"t", t}, {"size", count_text(t)}};
        text << "t=" << t << ", |C|=" << count_text(t) << '\n';
    } else if (command == "mindist") {
        const Enumeration e = p.enumerate(spec);
        const auto code = distinct_sorted(e.stream);
        const auto d = min_distance(code, flags.threads);
        const WeightDistribution dist = weight_distribution(code, flags.threads);
        json dj = json::array();
        for (const auto& [w, c] : dist) dj.push_back({{"weight", w}, {"count", c}});
        r.results = {{"min_distance", d ? json(*d) : json("undefined")}, {"size", code.size()}, {"distribution", dj}};
        if (d)
            text << "d=" << *d << '\n';
        else
            text << "d=undefined (no nonzero codeword)\n";
        text << weight_distribution_csv(dist);
    } else if (command == "dual") {
        const auto& g = p.generators(spec);
        p.cofactors(spec);
        std::size_t source = 0;
        try {
            source = p.enumerate(spec).distinct;
        } catch (const BudgetExceeded& ex) {
            r.warnings.push_back({"source_count_unavailable", ex.what()});
        }
        const DualResult d = brute_force_dual(g.profile(), shift_orbit_family(g.generator_codewords()), source,
                                              {flags.space_budget, flags.threads});
        r.results = {{"source_count", d.source_count},
                     {"dual_count", d.dual_count},
                     {"space_bits", d.space_bits},
                     {"cyclic", d.cyclic_flag},
                     {"dual", codeword_list(d.dual)}};
        text << "# |C|=" << d.source_count << " |C_perp|=" << d.dual_count << " space=2^" << d.space_bits
             << " cyclic=" << (d.cyclic_flag ? "true" : "false") << '\n';
        for (const auto& w : d.dual) text << format_codeword(w) << '\n';
        if (!d.cyclic_flag) r.warnings.push_back({"dual_not_cyclic", "T does not map the dual into itself"});
    } else if (command == "oracle-check") {
        const auto& g = p.generators(spec);
        const Enumeration e = p.enumerate(spec);
        const auto enumerated = distinct_sorted(e.stream);
        const ClosureResult c = module_closure(g.generator_codewords(), flags.budget);
        const bool equal = c.saturated && enumerated == c.elements;
        r.results = {{"enumerated", enumerated.size()},
                     {"closure", c.elements.size()},
                     {"saturated", c.saturated},
                     {"t", p.span->total_exponent()},
                     {"equal", equal}};
        text << "equal=" << (equal ? "true" : "false") << " enumerated=" << enumerated.size()
             << " closure=" << c.elements.size() << " saturated=" << (c.saturated ? "true" : "false") << '\n';
        if (!c.saturated) r.warnings.push_back({"closure_budget", "closure stopped before saturation"});
        if (c.saturated && !equal) r.exit_code = kValidationFailure;
    } else {
        throw SchemaError("<command>", "unknown command '" + command + "'");
    }
    r.text = text.str();
}

}  // namespace

RunReport dispatch(const std::string& command, const std::optional<std::string>& spec_text, const Flags& flags) {
    RunReport r;
    r.command = command;
    r.input_digest = fnv1a_digest(spec_text.value_or("") + flags.diff_reference.value_or(""));
    const auto start = std::chrono::steady_clock::now();
    try {
        run(command, spec_text, flags, r);
    } catch (const ValidationFailed& e) {
        r.exit_code = kValidationFailure;
        r.results = {{"error", "validation failed"}, {"validation", to_json(e.report)}};
        r.text = e.report.to_text();
    } catch (const SchemaError& e) {
        r.exit_code = kBudgetOrSchema;
        r.results = {{"error", "schema"}, {"field", e.field()}, {"message", e.what()}};
        r.text = std::string("error: ") + e.what() + '\n';
    } catch (const BudgetExceeded& e) {
        r.exit_code = kBudgetOrSchema;
        r.results = {{"error", "budget"}, {"message", e.what()}};
        r.text = std::string("error: ") + e.what() + '\n';
    } catch (const std::invalid_argument& e) {
        r.exit_code = kBudgetOrSchema;
        r.results = {{"error", "input"}, {"message", e.what()}};
        r.text = std::string("error: ") + e.what() + '\n';
    } catch (const std::out_of_range& e) {
        r.exit_code = kBudgetOrSchema;
        r.results = {{"error", "input"}, {"message", e.what()}};
        r.text = std::string("error: ") + e.what() + '\n';
    } catch (const NotADivisor& e) {
        r.exit_code = kValidationFailure;
        r.results = {{"error", "cofactor"}, {"message", e.what()}};
        r.text = std::string("error: ") + e.what() + '\n';
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace zcyclic::cli
