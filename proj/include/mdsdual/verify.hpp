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

#ifndef MDSDUAL_VERIFY_HPP
#define MDSDUAL_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mdsdual/grs.hpp"

namespace mdsdual {

// Everything here works from the generator matrix and field arithmetic
// alone; nothing is taken from the construction side.

std::size_t rank(const Field& f, Matrix m);

/// G * G^T == 0.
bool gram_is_zero(const Field& f, const Matrix& g);

/// G G^T = 0 and rank(G) = k. Throws DimensionMismatch unless n = 2k.
bool check_self_dual(const CodeArtifact& art);

struct MinorCheck {
    bool mds = false;
    /// Lexicographically first k-subset of columns with zero determinant.
    std::optional<std::vector<std::size_t>> singular_columns;
};

inline constexpr std::size_t kDefaultMinorMaxLength = 16;
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

/// Every k columns independent. Throws TooLarge when n > max_length.
MinorCheck check_mds_minors(const CodeArtifact& art, std::size_t max_length = kDefaultMinorMaxLength);

/// Minimum Hamming weight over all nonzero codewords. Throws TooLarge when
/// q^k exceeds the budget.
std::uint64_t min_distance(const CodeArtifact& art, std::uint64_t budget = kDefaultEnumerationBudget);

bool check_distinct_points(std::span<const Elem> points);
bool check_distinct_points(const CodeArtifact& art);

enum class MdsCheck { ExhaustiveMinors, MinWeight, SkippedTooLarge };

std::string_view to_string(MdsCheck check) noexcept;

struct VerificationReport {
    bool self_dual = false;
    bool rank_ok = false;
    bool distinct_points = false;
    MdsCheck mds_checked = MdsCheck::SkippedTooLarge;
    std::optional<bool> mds;                    // set unless skipped
    std::optional<std::uint64_t> min_distance;  // absent when skipped
    std::chrono::nanoseconds elapsed{0};

    /// self-dual, full rank, distinct points and (when checked) MDS.
    [[nodiscard]] bool ok() const noexcept;
};

struct VerifyOptions {
    bool mds = true;
    std::size_t minor_max_length = kDefaultMinorMaxLength;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

VerificationReport verify(const CodeArtifact& art, const VerifyOptions& options = {});

}  // namespace mdsdual

#endif  // MDSDUAL_VERIFY_HPP
