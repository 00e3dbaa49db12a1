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

#include <doctest.h>

#include <algorithm>

#include "mdsdual/census.hpp"
#include "mdsdual/verify.hpp"

using namespace mdsdual;

namespace {

bool contains_all(const std::set<std::uint64_t>& s, std::initializer_list<std::uint64_t> xs)
{
    return std::all_of(xs.begin(), xs.end(), [&](std::uint64_t x) { return s.count(x) > 0; });
}

ErrorCode code_of(std::uint64_t q)
{
    try {
        (void)census_report(q, 0);
    } catch (const Error& err) {
        return err.code();
    }
    return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("small fields")
{
    CHECK(contains_all(new_lengths(9), {4, 6, 10}));
    for (const std::uint64_t q : {3ULL, 5ULL, 9ULL, 27ULL, 121ULL, 3125ULL}) {
        CHECK(prior_lengths(q).count(q + 1) == 1);
    }
    const CensusReport r25 = census_report(25, 26);
    CHECK(r25.lengths_new.count(26) == 1);
    CHECK(r25.spot_checks.count(26) == 1);
}

TEST_CASE("report invariants")
{
    for (const std::uint64_t q : {3ULL, 7ULL, 9ULL, 25ULL, 27ULL, 49ULL, 81ULL, 243ULL, 343ULL, 361ULL, 625ULL}) {
        CAPTURE(q);
        const CensusReport r = census_report(q, 0);
        std::set<std::uint64_t> u = r.lengths_prior;
        u.insert(r.lengths_new.begin(), r.lengths_new.end());
        CHECK(u == r.lengths_union);
        for (const std::uint64_t n : r.lengths_union) {
            CHECK(n % 2 == 0);
            CHECK(n >= 2);
            CHECK(n <= q + 1);
            if (q % 4 == 3) {
                CHECK(n % 4 == 0);
            }
        }
        std::set<std::uint64_t> from_rules;
        for (const auto& [id, lengths] : r.per_rule) {
            from_rules.insert(lengths.begin(), lengths.end());
        }
        CHECK(from_rules == r.lengths_union);
        CHECK(r.per_rule.size() == census_rules().size());
    }
}

TEST_CASE("witnesses construct and verify")
{
    const CensusReport r = census_report(9, 16);
    CHECK(r.spot_checks.size() == r.lengths_new.size());
    for (const ValidParams& vp : enumerate_valid_params(7, 2, 50)) {
        CAPTURE(label(vp.params));
        const FieldPtr f = make_field(7, 2);
        const Construction c = construct(f, vp.params);
        CHECK(c.artifact.length() == vp.length);
        CHECK(check_self_dual(c.artifact));
    }
}

TEST_CASE("worked-example lengths are new lengths")
{
    const auto lengths = new_lengths(151 * 151);
    CHECK(lengths.count(426) == 1);
    CHECK(lengths.count(1006) == 1);
}

TEST_CASE("census errors")
{
    CHECK(code_of(10) == ErrorCode::EvenQ);
    CHECK(code_of(15) == ErrorCode::NotPrimePower);
    CHECK(code_of(100003) == ErrorCode::BudgetExceeded);
}
