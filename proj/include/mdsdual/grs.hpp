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

#ifndef MDSDUAL_GRS_HPP
#define MDSDUAL_GRS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsdual/field.hpp"

namespace mdsdual {

/// Dense row-major matrix over a field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Distinct evaluation points alpha_1..alpha_N. When `extended()` the code
/// carries one more coordinate (the "infinity" coordinate), so n = N + 1.
class EvalVector {
public:
    /// Throws DuplicatePoint if two points coincide.
    EvalVector(std::vector<Elem> points, bool extended);

    [[nodiscard]] const std::vector<Elem>& points() const noexcept { return points_; }
    [[nodiscard]] bool extended() const noexcept { return extended_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    /// Code length.
    [[nodiscard]] std::size_t length() const noexcept { return points_.size() + (extended_ ? 1 : 0); }

private:
    std::vector<Elem> points_;
    bool extended_;
};

/// Intermediates recorded while building a code. Only the members the
/// originating construction defines are set.
struct ConstructionTrace {
    std::optional<std::vector<std::uint64_t>> coset_indices;  // I
    std::optional<std::uint64_t> coset_index_sum;              // A
    std::optional<Elem> lambda;
    std::vector<Elem> locators;                                // brute-force L_a per point
    std::optional<std::vector<Elem>> u;                        // one value per coset index z
    std::optional<Elem> c;
    std::optional<Elem> xi_s;
    std::optional<Elem> beta;
    std::optional<Elem> omega;
    std::optional<std::vector<Elem>> basis;                    // S (subfield basis) or V basis

    friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

/// A constructed [n, k] code: GRS_k(a, v) or GRS_k(a, v, infinity).
struct CodeArtifact {
    FieldPtr field;
    std::vector<Elem> points;   // a
    bool extended = false;
    std::vector<Elem> weights;  // v (the infinity coordinate has implicit weight 1)
    std::size_t k = 0;
    Matrix generator;           // k x n
    std::string label;

    [[nodiscard]] std::size_t length() const noexcept { return generator.cols(); }
};

/// L_a(alpha_i) = prod_{j != i} (alpha_i - alpha_j), by brute force.
Elem locator(const Field& f, std::span<const Elem> points, std::size_t i);
std::vector<Elem> all_locators(const Field& f, std::span<const Elem> points);

/// Closed form of the locator on the m-th roots of unity: m * alpha^{-i},
/// alpha = root_of_unity(m). Throws NotDividing.
Elem cyclotomic_locator(const Field& f, std::uint64_t m, std::int64_t i);

/// Rows v_j * alpha_j^i for 0 <= i < k.
Matrix grs_generator_matrix(const Field& f, const EvalVector& a, std::span<const Elem> v, std::size_t k);
/// As grs_generator_matrix plus a last column e_{k-1} carrying f_{k-1}.
Matrix xgrs_generator_matrix(const Field& f, const EvalVector& a, std::span<const Elem> v, std::size_t k);

struct Assembly {
    CodeArtifact artifact;
    std::vector<Elem> locators;
};

/// Self-dual GRS_{n/2}(a, v) with v_i^2 = 1 / (lambda L_a(alpha_i)).
/// Throws OddLength, SquareConditionViolated (detail names the point index).
Assembly assemble_self_dual_grs(const FieldPtr& f, const EvalVector& a, Elem lambda);

/// Self-dual GRS_{n/2}(a, v, infinity) with v_i^2 = -1 / L_a(alpha_i).
Assembly assemble_self_dual_xgrs(const FieldPtr& f, const EvalVector& a);

/// First lambda among g^0, g^1 making lambda L_a(alpha_i) a square everywhere.
std::optional<Elem> search_lambda(const Field& f, const EvalVector& a);

}  // namespace mdsdual

#endif  // MDSDUAL_GRS_HPP
