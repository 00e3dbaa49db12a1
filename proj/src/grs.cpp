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

#include "mdsdual/grs.hpp"

#include <algorithm>

namespace mdsdual {

EvalVector::EvalVector(std::vector<Elem> points, bool extended) : points_(std::move(points)), extended_(extended)
{
    std::vector<Elem> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw Error(ErrorCode::DuplicatePoint, "evaluation point " + std::to_string(dup->value()) + " repeated");
    }
}

Elem locator(const Field& f, std::span<const Elem> points, std::size_t i)
{
    if (i >= points.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(i) + " of " + std::to_string(points.size()) + " points");
    }
    Elem prod = f.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (j != i) {
            prod = f.mul(prod, f.sub(points[i], points[j]));
        }
    }
    return prod;
}

std::vector<Elem> all_locators(const Field& f, std::span<const Elem> points)
{
    std::vector<Elem> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i] = locator(f, points, i);
    }
    return out;
}

Elem cyclotomic_locator(const Field& f, std::uint64_t m, std::int64_t i)
{
    const Elem alpha = f.root_of_unity(m);
    return f.mul(f.from_int(static_cast<std::int64_t>(m % f.characteristic())), f.pow(alpha, -i));
}

Matrix grs_generator_matrix(const Field& f, const EvalVector& a, std::span<const Elem> v, std::size_t k)
{
    const std::size_t n = a.size();
    if (a.extended() || v.size() != n || k < 1 || k > n) {
        throw Error(ErrorCode::DimensionMismatch, "GRS needs a plain point set, |v| = n and 1 <= k <= n");
    }
    Matrix G(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem entry = v[j];
        for (std::size_t i = 0; i < k; ++i) {
            G(i, j) = entry;
            entry = f.mul(entry, a.points()[j]);
        }
    }
    return G;
}

Matrix xgrs_generator_matrix(const Field& f, const EvalVector& a, std::span<const Elem> v, std::size_t k)
{
    const std::size_t n = a.length();
    if (!a.extended() || v.size() != a.size() || k < 1 || k > n) {
        throw Error(ErrorCode::DimensionMismatch, "extended GRS needs |v| = n - 1 and 1 <= k <= n");
    }
    Matrix G(k, n);
    for (std::size_t j = 0; j < a.size(); ++j) {
        Elem entry = v[j];
        for (std::size_t i = 0; i < k; ++i) {
            G(i, j) = entry;
            entry = f.mul(entry, a.points()[j]);
        }
    }
    G(k - 1, n - 1) = f.one();
    return G;
}

namespace {

std::string point_clause(const Field& f, std::size_t i, Elem point, Elem value)
{
    return "point " + std::to_string(i) + " (" + f.to_string(point) + "): " + f.to_string(value) + " is not a square";
}

}  // namespace

Assembly assemble_self_dual_grs(const FieldPtr& f, const EvalVector& a, Elem lambda)
{
    if (a.extended()) {
        throw Error(ErrorCode::DimensionMismatch, "plain GRS assembly given an extended point set");
    }
    const std::size_t n = a.length();
    if (n % 2 != 0) {
        throw Error(ErrorCode::OddLength, "n = " + std::to_string(n));
    }
    if (lambda.is_zero()) {
        throw Error(ErrorCode::ZeroElement, "lambda must be nonzero");
    }
    std::vector<Elem> L = all_locators(*f, a.points());
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem target = f->mul(lambda, L[i]);
        if (f->quadratic_character(target) != 1) {
            throw Error(ErrorCode::SquareConditionViolated, point_clause(*f, i, a.points()[i], target));
        }
        v[i] = f->sqrt(f->inv(target));
    }
    Assembly out;
    out.artifact.field = f;
    out.artifact.points = a.points();
    out.artifact.extended = false;
    out.artifact.k = n / 2;
    out.artifact.generator = grs_generator_matrix(*f, a, v, n / 2);
    out.artifact.weights = std::move(v);
    out.locators = std::move(L);
    return out;
}

Assembly assemble_self_dual_xgrs(const FieldPtr& f, const EvalVector& a)
{
    if (!a.extended()) {
        throw Error(ErrorCode::DimensionMismatch, "extended GRS assembly given a plain point set");
    }
    const std::size_t n = a.length();
    if (n % 2 != 0) {
        throw Error(ErrorCode::OddLength, "n = " + std::to_string(n));
    }
    std::vector<Elem> L = all_locators(*f, a.points());
    std::vector<Elem> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Elem target = f->neg(L[i]);
        if (f->quadratic_character(target) != 1) {
            throw Error(ErrorCode::SquareConditionViolated, point_clause(*f, i, a.points()[i], target));
        }
        v[i] = f->sqrt(f->inv(target));
    }
    Assembly out;
    out.artifact.field = f;
    out.artifact.points = a.points();
    out.artifact.extended = true;
    out.artifact.k = n / 2;
    out.artifact.generator = xgrs_generator_matrix(*f, a, v, n / 2);
    out.artifact.weights = std::move(v);
    out.locators = std::move(L);
    return out;
}

std::optional<Elem> search_lambda(const Field& f, const EvalVector& a)
{
    const std::vector<Elem> L = all_locators(f, a.points());
    for (const Elem lambda : {f.one(), f.generator()}) {
        const bool ok = std::all_of(L.begin(), L.end(),
                                    [&](Elem l) { return f.quadratic_character(f.mul(lambda, l)) == 1; });
        if (ok) {
            return lambda;
        }
    }
    return std::nullopt;
}

}  // namespace mdsdual
