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

#include <random>

#include "mdsdual/field.hpp"
#include "oracle.hpp"

using namespace mdsdual;

namespace {

oracle::NaiveField naive_of(const Field& f)
{
    return oracle::NaiveField(f.characteristic(), f.degree(), f.modulus());
}

const std::vector<std::pair<std::uint64_t, unsigned>> kSmallFields = {
    {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {11, 2}, {13, 1}, {3, 5}, {17, 2},
};

}  // namespace

TEST_CASE("prime field F_3")
{
    const FieldPtr f = make_field(3, 1);
    CHECK(f->modulus() == std::vector<std::uint64_t>{0, 1});
    CHECK(f->generator() == Elem{2});
    CHECK(f->size() == 3);
}

TEST_CASE("F_9 has modulus x^2+1 and generator 1+x")
{
    const FieldPtr f = make_field(3, 2);
    CHECK(f->modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(format_polynomial(f->modulus()) == "x^2+1");
    CHECK(f->generator() == Elem{4});
    CHECK(f->to_string(f->generator()) == "1+x");
    CHECK(f->sqrt_order() == 3);

    const Elem x{3};
    CHECK(f->mul(x, x) == Elem{2});
    CHECK(f->pow(Elem{4}, 4) == Elem{2});
    CHECK(f->quadratic_character(Elem{2}) == 1);
    CHECK(f->sqrt(Elem{2}) == x);
    CHECK(f->element_order(Elem{2}) == 2);
    CHECK(f->root_of_unity(4) == Elem{6});
    CHECK(f->subfield_generator(3) == Elem{2});
    CHECK(f->subfield_generator(9) == f->generator());
}

TEST_CASE("field construction errors")
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& err) {
            return err.code();
        }
        FAIL("no error raised");
        return ErrorCode::MalformedInput;
    };
    CHECK(code_of([] { (void)make_field(2, 4); }) == ErrorCode::EvenCharacteristic);
    CHECK(code_of([] { (void)make_field(9, 1); }) == ErrorCode::NonPrime);
    CHECK(code_of([] { (void)make_field(3, 0); }) == ErrorCode::DegreeZero);
    CHECK(code_of([] { (void)make_field(5, 27); }) == ErrorCode::FieldTooLarge);
    CHECK(code_of([] { (void)make_field_of_order(15); }) == ErrorCode::NotPrimePower);

    const FieldPtr f = make_field(3, 2);
    CHECK(code_of([&] { (void)f->inv(Elem{0}); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { (void)f->pow(Elem{0}, -1); }) == ErrorCode::ZeroToNegativePower);
    CHECK(code_of([&] { (void)f->sqrt(f->generator()); }) == ErrorCode::NotASquare);
    CHECK(code_of([&] { (void)f->element_order(Elem{0}); }) == ErrorCode::ZeroElement);
    CHECK(code_of([&] { (void)f->root_of_unity(3); }) == ErrorCode::NotDividing);
    CHECK(code_of([&] { (void)f->subfield_generator(4); }) == ErrorCode::NotASubfield);
    CHECK(code_of([&] { (void)f->element(9); }) == ErrorCode::MalformedInput);
}

TEST_CASE("modulus and generator match brute-force search")
{
    for (const auto& [p, d] : kSmallFields) {
        CAPTURE(p);
        CAPTURE(d);
        const FieldPtr f = make_field(p, d);
        CHECK(f->modulus() == oracle::smallest_irreducible(p, d));
        const auto nf = naive_of(*f);
        std::uint64_t expected_g = 0;
        for (std::uint64_t x = 1; x < f->size(); ++x) {
            if (nf.order(x) == f->size() - 1) {
                expected_g = x;
                break;
            }
        }
        CHECK(f->generator().value() == expected_g);
        CHECK(make_field(p, d)->generator() == f->generator());
    }
}

TEST_CASE("arithmetic agrees with schoolbook polynomial arithmetic")
{
    for (const auto& [p, d] : kSmallFields) {
        const FieldPtr f = make_field(p, d);
        if (f->size() > 125) {
            continue;
        }
        CAPTURE(f->size());
        const auto nf = naive_of(*f);
        for (std::uint64_t x = 0; x < f->size(); ++x) {
            for (std::uint64_t y = 0; y < f->size(); ++y) {
                REQUIRE(f->add(Elem{x}, Elem{y}).value() == nf.add(x, y));
                REQUIRE(f->sub(Elem{x}, Elem{y}).value() == nf.sub(x, y));
                REQUIRE(f->mul(Elem{x}, Elem{y}).value() == nf.mul(x, y));
            }
            if (x != 0) {
                REQUIRE(f->inv(Elem{x}).value() == nf.inv(x));
                REQUIRE(f->div(Elem{x}, Elem{x}) == f->one());
            }
            REQUIRE(f->add(Elem{x}, f->zero()) == Elem{x});
        }
    }
}

TEST_CASE("quadratic character, square roots and orders")
{
    for (const auto& [p, d] : kSmallFields) {
        const FieldPtr f = make_field(p, d);
        CAPTURE(f->size());
        const auto nf = naive_of(*f);
        const auto squares = nf.squares();
        CHECK(f->quadratic_character(f->zero()) == 0);
        CHECK(f->quadratic_character(f->generator()) == -1);
        for (std::uint64_t x = 1; x < f->size(); ++x) {
            const Elem a{x};
            const bool square = squares.count(x) > 0;
            REQUIRE(f->quadratic_character(a) == (square ? 1 : -1));
            REQUIRE(f->element_order(a) == nf.order(x));
            if (square) {
                const Elem s = f->sqrt(a);
                REQUIRE(f->mul(s, s) == a);
                REQUIRE(s.value() <= f->neg(s).value());
            }
        }
        for (std::int64_t j = -5; j < 20; ++j) {
            CHECK(f->quadratic_character(f->gen_pow(j)) == (j % 2 == 0 ? 1 : -1));
        }
        for (const std::uint64_t m : divisors(f->size() - 1)) {
            CHECK(f->element_order(f->root_of_unity(m)) == m);
        }
        CHECK(f->pow(f->generator(), static_cast<std::int64_t>(f->size() - 1)) == f->one());
        CHECK(f->pow(Elem{2}, 0) == f->one());
    }
}

TEST_CASE("subfields")
{
    const FieldPtr f = make_field(3, 4);
    for (const std::uint64_t sub : {3ULL, 9ULL, 81ULL}) {
        const Elem gamma = f->subfield_generator(sub);
        CHECK(f->element_order(gamma) == sub - 1);
        const auto elems = f->subfield_elements(sub);
        CHECK(elems.size() == sub);
        CHECK(std::is_sorted(elems.begin(), elems.end()));
        std::uint64_t members = 0;
        for (std::uint64_t x = 0; x < f->size(); ++x) {
            members += f->in_subfield(Elem{x}, sub) ? 1 : 0;
        }
        CHECK(members == sub);
    }
    CHECK_THROWS_AS((void)f->subfield_generator(27), Error);
}

TEST_CASE("encoding round trip")
{
    for (const auto& [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 8}, {97, 2}, {7, 4}}) {
        const FieldPtr f = make_field(p, d);
        REQUIRE(f->size() <= 10000);
        for (std::uint64_t x = 0; x < f->size(); ++x) {
            const auto c = f->coeffs(Elem{x});
            REQUIRE(c.size() == d);
            REQUIRE(f->from_coeffs(c) == Elem{x});
        }
    }
    const FieldPtr f9 = make_field(3, 2);
    CHECK(f9->coeffs(Elem{4}) == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("fields without tables agree with the oracle")
{
    for (const auto& [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 15}, {1000003, 2}, {5, 11}}) {
        const FieldPtr f = make_field(p, d);
        CAPTURE(f->size());
        CHECK_FALSE(f->has_tables());
        const auto nf = naive_of(*f);
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<std::uint64_t> pick(0, f->size() - 1);
        for (int i = 0; i < 300; ++i) {
            const std::uint64_t x = pick(rng);
            const std::uint64_t y = pick(rng);
            REQUIRE(f->add(Elem{x}, Elem{y}).value() == nf.add(x, y));
            REQUIRE(f->mul(Elem{x}, Elem{y}).value() == nf.mul(x, y));
            if (x != 0) {
                REQUIRE(f->mul(Elem{x}, f->inv(Elem{x})) == f->one());
                const Elem sq = f->mul(Elem{x}, Elem{x});
                REQUIRE(f->quadratic_character(sq) == 1);
                const Elem s = f->sqrt(sq);
                REQUIRE(f->mul(s, s) == sq);
            }
        }
        CHECK(f->element_order(f->generator()) == f->size() - 1);
    }
}
