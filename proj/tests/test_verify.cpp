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

#include "mdsdual/constructions.hpp"
#include "mdsdual/verify.hpp"
#include "oracle.hpp"

using namespace mdsdual;

namespace {

CodeArtifact from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint64_t>>& rows)
{
    CodeArtifact art;
    art.field = f;
    art.k = rows.size();
    art.generator = Matrix(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            art.generator(r, c) = Elem{rows[r][c]};
        }
    }
    return art;
}

/// Minimum weight by enumerating every message with the oracle arithmetic.
std::uint64_t oracle_min_weight(const CodeArtifact& art)
{
    const Field& f = *art.field;
    const oracle::NaiveField nf(f.characteristic(), f.degree(), f.modulus());
    const std::uint64_t q = f.size();
    const std::uint64_t total = oracle::ipow(q, static_cast<unsigned>(art.k));
    std::uint64_t best = art.length();
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        std::vector<std::uint64_t> coeff(art.k);
        std::uint64_t x = msg;
        for (auto& c : coeff) {
            c = x % q;
            x /= q;
        }
        std::uint64_t weight = 0;
        for (std::size_t col = 0; col < art.length(); ++col) {
            std::uint64_t acc = 0;
            for (std::size_t r = 0; r < art.k; ++r) {
                acc = nf.add(acc, nf.mul(coeff[r], art.generator(r, col).value()));
            }
            weight += acc != 0 ? 1 : 0;
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace

TEST_CASE("check_self_dual")
{
    const FieldPtr f9 = make_field(3, 2);
    CHECK(check_self_dual(from_rows(f9, {{1, 3}})));
    const FieldPtr f3 = make_field(3, 1);
    CHECK_FALSE(check_self_dual(from_rows(f3, {{1, 1}})));
    // Gram matrix zero but rank deficient.
    CHECK_FALSE(check_self_dual(from_rows(f9, {{1, 3, 0, 0}, {1, 3, 0, 0}})));
    CHECK_THROWS_AS((void)check_self_dual(from_rows(f3, {{1, 1, 1}})), Error);
}

TEST_CASE("MDS minors and minimum distance")
{
    const FieldPtr f9 = make_field(3, 2);
    const Construction c = construct_t1i(f9, 4, 1);
    const MinorCheck mc = check_mds_minors(c.artifact);
    CHECK(mc.mds);
    CHECK_FALSE(mc.singular_columns);
    CHECK(min_distance(c.artifact) == 3);
    CHECK(oracle_min_weight(c.artifact) == 3);

    const FieldPtr f5 = make_field(5, 1);
    const CodeArtifact bad = from_rows(f5, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    const MinorCheck mb = check_mds_minors(bad);
    CHECK_FALSE(mb.mds);
    REQUIRE(mb.singular_columns);
    CHECK(*mb.singular_columns == std::vector<std::size_t>{0, 1});
    CHECK(min_distance(bad) == 2);

    const FieldPtr f3 = make_field(3, 1);
    CHECK(min_distance(from_rows(f3, {{1, 1}})) == 2);

    const Construction c10 = construct_t4(f9, 1);
    CHECK(min_distance(c10.artifact) == 6);
    CHECK(check_mds_minors(c10.artifact).mds);

    const FieldPtr f49 = make_field(7, 2);
    const Construction c20 = construct_t1i(f49, 12, 2);
    CHECK(c20.artifact.length() == 24);
    CHECK_THROWS_AS((void)check_mds_minors(c20.artifact), Error);
    CHECK_THROWS_AS((void)min_distance(c20.artifact), Error);
}

TEST_CASE("minor check and weight enumeration agree")
{
    for (const std::uint64_t q : {9ULL, 25ULL, 49ULL}) {
        const FieldPtr f = make_field_of_order(q);
        const std::uint64_t r = *f->sqrt_order();
        for (const std::uint64_t m : divisors(q - 1)) {
            for (std::uint64_t t = 1; t <= t1_max_t(r, m) && t * m + 2 <= 8; ++t) {
                for (const auto& params : {t1i(m, t), t1ii(m, t)}) {
                    if (hypothesis_violation(params, f->characteristic(), f->degree())) {
                        continue;
                    }
                    const Construction c = construct(f, params);
                    CAPTURE(c.artifact.label);
                    const std::uint64_t words = oracle::ipow(q, static_cast<unsigned>(c.artifact.k));
                    if (words > 200000) {
                        continue;
                    }
                    const bool mds = check_mds_minors(c.artifact).mds;
                    const std::uint64_t d = min_distance(c.artifact);
                    CHECK(mds == (d == c.artifact.length() - c.artifact.k + 1));
                    CHECK(d == oracle_min_weight(c.artifact));
                }
            }
        }
    }
}

TEST_CASE("distinct points")
{
    CHECK_FALSE(check_distinct_points(std::vector<Elem>{Elem{1}, Elem{1}}));
    CHECK(check_distinct_points(std::vector<Elem>{}));
    const FieldPtr f9 = make_field(3, 2);
    CHECK(check_distinct_points(construct_t1ii(f9, 4, 1).artifact));
}

TEST_CASE("verification report")
{
    const FieldPtr f9 = make_field(3, 2);
    const Construction c = construct_t1ii(f9, 4, 1);
    const VerificationReport rep = verify(c.artifact);
    CHECK(rep.ok());
    CHECK(rep.mds_checked == MdsCheck::ExhaustiveMinors);
    CHECK(rep.min_distance == 4);

    const FieldPtr f49 = make_field(7, 2);
    const VerificationReport big = verify(construct_t1i(f49, 12, 2).artifact);
    CHECK(big.ok());
    CHECK(big.mds_checked == MdsCheck::SkippedTooLarge);
    CHECK_FALSE(big.min_distance);

    CodeArtifact broken = c.artifact;
    // Scaling a nonzero entry by g shifts that row's self-product by G^2 (g^2 - 1) != 0.
    REQUIRE_FALSE(broken.generator(0, 0).is_zero());
    broken.generator(0, 0) = f9->mul(broken.generator(0, 0), f9->generator());
    const VerificationReport bad = verify(broken);
    CHECK_FALSE(bad.self_dual);
    CHECK_FALSE(bad.ok());
}
