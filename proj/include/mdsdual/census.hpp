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

#ifndef MDSDUAL_CENSUS_HPP
#define MDSDUAL_CENSUS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mdsdual/constructions.hpp"
#include "mdsdual/field.hpp"

namespace mdsdual {

enum class RuleSource { Prior, New };

/// One row of the length tables, as a predicate on (q, n).
struct CensusRule {
    std::string id;
    RuleSource source;
    std::string citation;
};

/// Rows in evaluation order: prior constructions first, then the new ones.
const std::vector<CensusRule>& census_rules();

struct RuleHits {
    const CensusRule* rule = nullptr;
    std::set<std::uint64_t> lengths;
};

struct ValidParams {
    ConstructionParams params;
    std::uint64_t length;
};

/// Every parameter tuple of the new constructions that passes
/// hypothesis_violation over F_{p^d} with n <= max_length, in a fixed
/// enumeration order (theorem, then m, s, t or k, t, e ascending).
std::vector<ValidParams> enumerate_valid_params(std::uint64_t p, unsigned d, std::uint64_t max_length);

inline constexpr std::uint64_t kCensusBudget = 100'000;

/// Even n <= q + 1 admitted by each row. Throws EvenQ, NotPrimePower,
/// BudgetExceeded.
std::vector<RuleHits> evaluate_rules(std::uint64_t q, RuleSource source);

std::set<std::uint64_t> prior_lengths(std::uint64_t q);
std::set<std::uint64_t> new_lengths(std::uint64_t q);

struct CensusReport {
    std::uint64_t q = 0;
    std::set<std::uint64_t> lengths_prior;
    std::set<std::uint64_t> lengths_new;
    std::set<std::uint64_t> lengths_union;
    std::map<std::string, std::set<std::uint64_t>> per_rule;
    /// n -> label of the witness construction that was built and verified.
    std::map<std::uint64_t, std::string> spot_checks;
    std::uint64_t spot_check_bound = 0;
};

/// Full census. Every new length n <= spot_check_bound is realized by an
/// actual construction and certified self-dual; failure throws
/// SpotCheckFailed.
CensusReport census_report(std::uint64_t q, std::uint64_t spot_check_bound);

}  // namespace mdsdual

#endif  // MDSDUAL_CENSUS_HPP
