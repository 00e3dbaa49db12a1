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

#ifndef MDSDUAL_NUMTHEORY_HPP
#define MDSDUAL_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mdsdual {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
    std::uint64_t p;
    unsigned d;
};

struct PrimeFactor {
    std::uint64_t prime;
    unsigned exponent;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization, ascending by prime. Trial division up to 10^6, then
/// Pollard rho (Brent) with deterministic seeds.
std::vector<PrimeFactor> factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// q = p^d with p prime, if any.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

BigInt big_pow(std::uint64_t base, unsigned exp);

/// Reduce a signed exponent into [0, modulus).
std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t modulus);

}  // namespace mdsdual

#endif  // MDSDUAL_NUMTHEORY_HPP
