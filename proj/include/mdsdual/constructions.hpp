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

#ifndef MDSDUAL_CONSTRUCTIONS_HPP
#define MDSDUAL_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsdual/field.hpp"
#include "mdsdual/grs.hpp"
#include "mdsdual/numtheory.hpp"

namespace mdsdual {

enum class Theorem { T1i, T1ii, T2, T3i, T3ii, T4, T5 };

std::string_view to_string(Theorem theorem) noexcept;
std::optional<Theorem> parse_theorem(std::string_view name) noexcept;

/// Parameters of one construction. Members a theorem does not use stay 0.
/// `k` is the subfield exponent of T5 (q = p^{k m'}), not a code dimension.
struct ConstructionParams {
    Theorem theorem = Theorem::T1i;
    std::uint64_t m = 0;
    std::uint64_t t = 0;
    std::uint64_t s = 0;
    std::uint64_t e = 0;
    std::uint64_t k = 0;

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

ConstructionParams t1i(std::uint64_t m, std::uint64_t t);
ConstructionParams t1ii(std::uint64_t m, std::uint64_t t);
ConstructionParams t2(std::uint64_t m, std::uint64_t t);
ConstructionParams t3i(std::uint64_t m, std::uint64_t t, std::uint64_t s);
ConstructionParams t3ii(std::uint64_t m, std::uint64_t t, std::uint64_t s);
ConstructionParams t4(std::uint64_t e);
ConstructionParams t5(std::uint64_t k, std::uint64_t t, std::uint64_t e);

/// "T1i(m=4,t=1)", "T3ii(m=4,t=2,s=2)", "T4(e=1)", "T5(k=1,t=1,e=1)".
std::string label(const ConstructionParams& params);

/// Upper bounds on t used by the hypothesis sets.
std::uint64_t t1_max_t(std::uint64_t r, std::uint64_t m);
std::uint64_t t2_max_t(std::uint64_t r, std::uint64_t m);
std::uint64_t t3_max_t(std::uint64_t r, std::uint64_t m, std::uint64_t s);

/// The first hypothesis of the theorem that fails over F_{p^d}, as a clause
/// string, or nullopt when all hold. Works for q beyond 64 bits.
std::optional<std::string> hypothesis_violation(const ConstructionParams& params, std::uint64_t p, unsigned d);

/// Checks the hypotheses and returns the code length n. Throws
/// HypothesisViolated with the failing clause.
BigInt validate(const ConstructionParams& params, std::uint64_t p, unsigned d);

/// Constructions never materialize codes longer than this.
inline constexpr std::uint64_t kMaxMaterializedLength = std::uint64_t{1} << 16;

enum class CosetParity { Any, SumEven, SumOdd, AllEven };

struct CosetSelection {
    std::vector<std::uint64_t> indices;  // i_1 < ... < i_t
    std::uint64_t sum = 0;               // A
};

/// Greedy ascending choice of t indices i with g^{stride i} in distinct cosets
/// of T = <g^{(q-1)/m}>. Cosets are told apart by stride*i*m mod (q-1).
/// For SumEven/SumOdd the first t-1 admissible indices are kept and the last
/// one is scanned upward until A has the requested parity.
/// Throws NotEnoughCosets, ParityInfeasible.
CosetSelection select_coset_reps(const Field& f, std::uint64_t stride, std::uint64_t m, std::uint64_t t,
                                 CosetParity parity);

struct Construction {
    ConstructionParams params;
    CodeArtifact artifact;
    ConstructionTrace trace;
};

Construction construct_t1i(const FieldPtr& f, std::uint64_t m, std::uint64_t t);
Construction construct_t1ii(const FieldPtr& f, std::uint64_t m, std::uint64_t t);
Construction construct_t2(const FieldPtr& f, std::uint64_t m, std::uint64_t t);
Construction construct_t3i(const FieldPtr& f, std::uint64_t m, std::uint64_t t, std::uint64_t s);
Construction construct_t3ii(const FieldPtr& f, std::uint64_t m, std::uint64_t t, std::uint64_t s);
Construction construct_t4(const FieldPtr& f, std::uint64_t e);
Construction construct_t5(const FieldPtr& f, std::uint64_t k, std::uint64_t t, std::uint64_t e);

/// Dispatch on params.theorem over an existing field.
Construction construct(const FieldPtr& f, const ConstructionParams& params);

/// Validates first, refuses lengths above kMaxMaterializedLength with
/// TooLargeToMaterialize, and only then builds F_{p^d}.
Construction construct(std::uint64_t p, unsigned d, const ConstructionParams& params);

/// The locator at point `index` evaluated by the theorem's closed form from
/// the recorded trace (independent of the brute-force product).
Elem closed_form_locator(const Field& f, const ConstructionParams& params, const ConstructionTrace& trace,
                         std::span<const Elem> points, std::size_t index);

}  // namespace mdsdual

#endif  // MDSDUAL_CONSTRUCTIONS_HPP
