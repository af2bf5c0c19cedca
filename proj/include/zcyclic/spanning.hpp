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

#ifndef ZCYCLIC_SPANNING_HPP
#define ZCYCLIC_SPANNING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zcyclic/codespace.hpp"
#include "zcyclic/structure.hpp"
#include "zcyclic/warning.hpp"

namespace zcyclic {

/// Row k of block (i, j): x^k times the (i, j) base element.
struct RowLabel {
    unsigned i;
    unsigned j;
    std::size_t k;

    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

std::string format_label(const RowLabel& label);

/**
 * Labeled spanning rows, ordered by level i, then layer j, then shift k.
 * Row r takes coefficients in Z_{2^{i-j}} (coefficient_exponent).
 */
struct SpanningSet {
    AlphabetProfile profile;
    std::vector<Codeword> rows;
    std::vector<RowLabel> labels;
    std::map<LayerIndex, std::size_t> block_size;
    /// (row, earlier identical row), 0-based.
    std::vector<std::pair<std::size_t, std::size_t>> duplicate_rows;
    std::vector<Warning> warnings;

    unsigned coefficient_exponent(std::size_t row) const { return labels.at(row).i - labels.at(row).j; }
    /// Sum of coefficient exponents over all rows.
    std::size_t total_exponent() const;
};

SpanningSet build_spanning_set(const StructuredGenerators& g, const Cofactors& c);

/// t with |C| = 2^t, from the formal row counts.
std::size_t codeword_count(const Cofactors& c);

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t{1} << 16;
    unsigned threads = 1;
};

struct Enumeration {
    /// Codewords in coefficient-tuple order (row 0 fastest).
    std::vector<Codeword> stream;
    std::size_t distinct = 0;
};

/// Codewords for coefficient-tuple indices [begin, end).
std::vector<Codeword> enumerate_range(const SpanningSet& s, std::uint64_t begin, std::uint64_t end);

/// Full enumeration; throws BudgetExceeded when 2^t > budget. Output is independent of the thread count.
Enumeration enumerate_codewords(const SpanningSet& s, const EnumerationOptions& options = {});

/// Sorted distinct codewords.
std::vector<Codeword> distinct_sorted(std::vector<Codeword> words);

/**
 * Coefficients e_ij as polynomials in x (coefficient of x^k multiplies row
 * (i, j, k)). within_declared_domains is false when the only solution found
 * needs a coefficient outside Z_{2^{i-j}}.
 */
struct Decomposition {
    std::vector<Coeff> coefficients;
    std::map<LayerIndex, Poly> e;
    bool within_declared_domains = true;
};

Codeword evaluate(const SpanningSet& s, const std::vector<Coeff>& coefficients);

/// Level-by-level solve from level n down to 1, with a joint solve as fallback.
std::optional<Decomposition> membership_test(const Codeword& v, const SpanningSet& s);

struct GeneratorMatrix {
    AlphabetProfile profile;
    std::vector<Codeword> rows;
    std::vector<RowLabel> labels;
};

GeneratorMatrix generator_matrix(const SpanningSet& s);
/// One row per line, blocks separated by '|'.
std::string matrix_to_csv(const GeneratorMatrix& m);
/// Reads rows written by matrix_to_csv; blank lines and lines starting with '#' are skipped.
std::vector<Codeword> parse_matrix_csv(const AlphabetProfile& profile, std::string_view text);

/**
 * Content comparison of a reference matrix against a constructed one.
 * Each reference row is looked up by content, not by position.
 */
struct MatrixDiff {
    /// ambiguous: equal to more than one constructed row (the first in order is reported).
    enum class Status { match, ambiguous, out_of_order, duplicate, unmatched };

    struct Entry {
        std::size_t reference_row;                 // 1-based
        Status status;
        std::optional<std::size_t> constructed_row;  // 1-based
        std::optional<RowLabel> label;
        std::optional<std::size_t> duplicate_of;     // 1-based reference row
        std::vector<std::size_t> also_equals;        // other constructed rows with the same content
    };

    std::vector<Entry> entries;
    /// Constructed rows (1-based) that no reference row matched.
    std::vector<std::size_t> unreferenced;
    std::vector<RowLabel> unreferenced_labels;
    /// Same row count and equal rows at every position.
    bool positional_equal = false;

    bool identical() const { return positional_equal; }
    std::string to_text() const;
};

std::string status_name(MatrixDiff::Status s);

MatrixDiff diff_matrices(const GeneratorMatrix& constructed, const std::vector<Codeword>& reference);

}  // namespace zcyclic

#endif  // ZCYCLIC_SPANNING_HPP
