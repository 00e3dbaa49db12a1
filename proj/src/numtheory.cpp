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

#include "mdsdual/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace mdsdual {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::uint64_t odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    for (std::uint64_t witness : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(witness, odd, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < twos; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t pollard_brent(std::uint64_t n)
{
    if (n % 2 == 0) {
        return 2;
    }
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2;
        std::uint64_t x = 2;
        std::uint64_t g = 1;
        std::uint64_t acc = 1;
        std::uint64_t ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t kBatch = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = step(y);
            }
            for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = step(y);
                    acc = mulmod(acc, x > y ? x - y : y - x, n);
                }
                g = std::gcd(acc, n);
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t f = pollard_brent(n);
    split(f, primes);
    split(n / f, primes);
}

}  // namespace

std::vector<PrimeFactor> factorize(std::uint64_t n)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t f = 2; f <= kTrialLimit && f * f <= n; f += (f == 2 ? 1 : 2)) {
        while (n % f == 0) {
            primes.push_back(f);
            n /= f;
        }
    }
    if (n > 1) {
        split(n, primes);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<PrimeFactor> out;
    for (std::uint64_t prime : primes) {
        if (!out.empty() && out.back().prime == prime) {
            ++out.back().exponent;
        } else {
            out.push_back({prime, 1});
        }
    }
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t power = 1;
        for (unsigned e = 0; e < exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * power);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q)
{
    if (q < 2) {
        return std::nullopt;
    }
    auto factors = factorize(q);
    if (factors.size() != 1) {
        return std::nullopt;
    }
    return PrimePower{factors.front().prime, factors.front().exponent};
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) {
            return std::nullopt;
        }
        result *= base;
    }
    return result;
}

BigInt big_pow(std::uint64_t base, unsigned exp)
{
    return boost::multiprecision::pow(BigInt(base), exp);
}

std::uint64_t reduce_exponent(std::int64_t e, std::uint64_t modulus)
{
    const auto m = static_cast<__int128>(modulus);
    __int128 r = static_cast<__int128>(e) % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace mdsdual
