/*
   Copyright 2026 The mdsdual Authors

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

#include "mdsdual/verify.hpp"

#include <algorithm>
#include <numeric>

namespace mdsdual {

std::size_t rank(const Field& f, Matrix m)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != r) {
            std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());
        }
        const Elem inv_pivot = f.inv(m(r, col));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) {
                continue;
            }
            const Elem factor = f.neg(f.mul(m(i, col), inv_pivot));
            auto target = m.row(i);
            const auto source = m.row(r);
            for (std::size_t j = col; j < m.cols(); ++j) {
                target[j] = f.add(target[j], f.mul(factor, source[j]));
            }
        }
        ++r;
    }
    return r;
}

bool gram_is_zero(const Field& f, const Matrix& g)
{
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const auto ri = g.row(i);
        for (std::size_t j = i; j < g.rows(); ++j) {
            const auto rj = g.row(j);
            Elem acc = f.zero();
            for (std::size_t c = 0; c < g.cols(); ++c) {
                acc = f.add(acc, f.mul(ri[c], rj[c]));
            }
            if (!acc.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_half_rate(const CodeArtifact& art)
{
    const Matrix& g = art.generator;
    if (g.cols() != 2 * g.rows() || g.rows() != art.k) {
        throw Error(ErrorCode::DimensionMismatch, "generator is " + std::to_string(g.rows()) + "x" +
                                                      std::to_string(g.cols()) + ", need k x 2k with k = " +
                                                      std::to_string(art.k));
    }
}

bool nonsingular(const Field& f, const Matrix& g, std::span<const std::size_t> columns)
{
    const std::size_t k = g.rows();
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            minor(i, j) = g(i, columns[j]);
        }
    }
    return rank(f, std::move(minor)) == k;
}

}  // namespace

bool check_self_dual(const CodeArtifact& art)
{
    require_half_rate(art);
    const Field& f = *art.field;
    return gram_is_zero(f, art.generator) && rank(f, art.generator) == art.k;
}

MinorCheck check_mds_minors(const CodeArtifact& art, std::size_t max_length)
{
    const Matrix& g = art.generator;
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    if (n > max_length) {
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " > " + std::to_string(max_length) +
                                             " for exhaustive minors");
    }
    MinorCheck out;
    if (k == 0 || k > n) {
        return out;
    }
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        if (!nonsingular(*art.field, g, cols)) {
            out.singular_columns = cols;
            return out;
        }
        // next k-subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            cols[j] = cols[j - 1] + 1;
        }
    }
    out.mds = true;
    return out;
}

std::uint64_t min_distance(const CodeArtifact& art, std::uint64_t budget)
{
    const Field& f = *art.field;
    const Matrix& g = art.generator;
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const auto total = checked_pow(f.size(), static_cast<unsigned>(k));
    if (!total || *total > budget) {
        throw Error(ErrorCode::TooLarge, "q^k exceeds the enumeration budget of " + std::to_string(budget));
    }
    // Walk all messages in mixed radix (digit values in encoding order) and
    // keep the codeword up to date with one row update per changed digit.
    const std::uint64_t q = f.size();
    std::vector<std::uint64_t> digits(k, 0);
    std::vector<Elem> word(n, f.zero());
    std::uint64_t best = n;
    auto add_row = [&](std::size_t row, Elem scale) {
        const auto r = g.row(row);
        for (std::size_t c = 0; c < n; ++c) {
            word[c] = f.add(word[c], f.mul(scale, r[c]));
        }
    };
    for (std::uint64_t step = 1; step < *total; ++step) {
        std::size_t pos = 0;
        while (digits[pos] == q - 1) {
            // wrap q-1 -> 0
            add_row(pos, f.neg(Elem{q - 1}));
            digits[pos] = 0;
            ++pos;
        }
        add_row(pos, f.sub(Elem{digits[pos] + 1}, Elem{digits[pos]}));
        ++digits[pos];
        const auto weight = static_cast<std::uint64_t>(
            std::count_if(word.begin(), word.end(), [](Elem x) { return !x.is_zero(); }));
        best = std::min(best, weight);
    }
    return best;
}

bool check_distinct_points(std::span<const Elem> points)
{
    std::vector<Elem> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool check_distinct_points(const CodeArtifact& art) { return check_distinct_points(art.points); }

std::string_view to_string(MdsCheck check) noexcept
{
    switch (check) {
    case MdsCheck::ExhaustiveMinors: return "exhaustive_minors";
    case MdsCheck::MinWeight: return "min_weight";
    case MdsCheck::SkippedTooLarge: return "skipped_too_large";
    }
    return "?";
}

bool VerificationReport::ok() const noexcept
{
    return self_dual && rank_ok && distinct_points && mds.value_or(true);
}

VerificationReport verify(const CodeArtifact& art, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const Field& f = *art.field;
    require_half_rate(art);

    VerificationReport report;
    report.rank_ok = rank(f, art.generator) == art.k;
    report.self_dual = report.rank_ok && gram_is_zero(f, art.generator);
    report.distinct_points = check_distinct_points(art);

    if (options.mds) {
        const std::size_t n = art.length();
        const auto words = checked_pow(f.size(), static_cast<unsigned>(art.k));
        const bool enumerable = words && *words <= options.enumeration_budget;
        if (n <= options.minor_max_length) {
            report.mds_checked = MdsCheck::ExhaustiveMinors;
            report.mds = check_mds_minors(art, options.minor_max_length).mds;
            if (enumerable) {
                report.min_distance = min_distance(art, options.enumeration_budget);
            }
        } else if (enumerable) {
            report.mds_checked = MdsCheck::MinWeight;
            report.min_distance = min_distance(art, options.enumeration_budget);
            report.mds = *report.min_distance == n - art.k + 1;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace mdsdual
