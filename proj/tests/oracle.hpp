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

// Naive reference arithmetic for tests. Deliberately shares nothing with the
// library: elements are coefficient vectors, products are schoolbook
// multiplication followed by long division, and every number-theoretic
// question is answered by exhaustive search.

#ifndef MDSDUAL_TESTS_ORACLE_HPP
#define MDSDUAL_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint64_t>;  // constant term first

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(out);
    return out;
}

/// Remainder of a modulo a monic polynomial m.
inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

/// True when some monic polynomial of degree 1..deg/2 divides f.
inline bool has_small_factor(const Poly& f, std::uint64_t p)
{
    const std::size_t deg = f.size() - 1;
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(k));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(k + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[k] = 1;
            if (poly_mod(f, g, p).empty()) {
                return true;
            }
        }
    }
    return false;
}

/// Monic irreducible of degree d with the smallest encoding of its lower
/// coefficients, found by scanning and trial division by every candidate.
inline Poly smallest_irreducible(std::uint64_t p, unsigned d)
{
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(d + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[d] = 1;
        if (d == 1 || !has_small_factor(f, p)) {
            return f;
        }
    }
    return {};
}

class NaiveField {
public:
    NaiveField(std::uint64_t p, unsigned d, Poly modulus) : p_(p), d_(d), q_(ipow(p, d)), m_(std::move(modulus)) {}

    std::uint64_t size() const { return q_; }

    Poly decode(std::uint64_t v) const
    {
        Poly a(d_, 0);
        for (unsigned i = 0; i < d_; ++i) {
            a[i] = v % p_;
            v /= p_;
        }
        trim(a);
        return a;
    }

    std::uint64_t encode(const Poly& a) const
    {
        std::uint64_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            v = v * p_ + a[i];
        }
        return v;
    }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const
    {
        Poly a = decode(x);
        Poly b = decode(y);
        a.resize(d_, 0);
        b.resize(d_, 0);
        for (unsigned i = 0; i < d_; ++i) {
            a[i] = (a[i] + b[i]) % p_;
        }
        trim(a);
        return encode(a);
    }

    std::uint64_t neg(std::uint64_t x) const
    {
        Poly a = decode(x);
        for (auto& c : a) {
            c = (p_ - c) % p_;
        }
        return encode(a);
    }

    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const
    {
        return encode(poly_mod(poly_mul(decode(x), decode(y), p_), m_, p_));
    }

    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const
    {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) {
            r = mul(r, x);
        }
        return r;
    }

    /// Multiplicative order by repeated multiplication.
    std::uint64_t order(std::uint64_t x) const
    {
        std::uint64_t acc = x;
        std::uint64_t k = 1;
        while (acc != 1) {
            acc = mul(acc, x);
            ++k;
        }
        return k;
    }

    std::uint64_t inv(std::uint64_t x) const
    {
        for (std::uint64_t y = 1; y < q_; ++y) {
            if (mul(x, y) == 1) {
                return y;
            }
        }
        return 0;
    }

    /// Nonzero squares, by squaring everything.
    std::set<std::uint64_t> squares() const
    {
        std::set<std::uint64_t> out;
        for (std::uint64_t x = 1; x < q_; ++x) {
            out.insert(mul(x, x));
        }
        return out;
    }

    /// Image of an integer in F_p.
    std::uint64_t from_int(std::int64_t n) const
    {
        const auto p = static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(((n % p) + p) % p);
    }

private:
    std::uint64_t p_;
    unsigned d_;
    std::uint64_t q_;
    Poly m_;
};

/// prod_{j != i} (a_i - a_j), straight from the definition.
inline std::uint64_t locator(const NaiveField& f, const std::vector<std::uint64_t>& a, std::size_t i)
{
    std::uint64_t acc = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) {
            acc = f.mul(acc, f.sub(a[i], a[j]));
        }
    }
    return acc;
}

}  // namespace oracle

#endif  // MDSDUAL_TESTS_ORACLE_HPP
