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

#include "mdsdual/field.hpp"

#include <algorithm>
#include <sstream>

namespace mdsdual {

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const std::uint64_t sub = mulmod(factor, m[i], p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p)
{
    Poly result = poly_mod(Poly{1}, m, p);
    base = poly_mod(std::move(base), m, p);
    while (e != 0) {
        if (e & 1U) {
            result = poly_mulmod(result, base, m, p);
        }
        base = poly_mulmod(base, base, m, p);
        e >>= 1U;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree d is irreducible iff gcd(x^{p^i} - x, f) = 1 for
// every 1 <= i <= d/2.
bool is_irreducible(const Poly& f, std::uint64_t p)
{
    const std::size_t d = f.size() - 1;
    Poly xpow{0, 1};
    for (std::size_t i = 1; i <= d / 2; ++i) {
        xpow = poly_powmod(xpow, p, f, p);
        Poly diff = xpow;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) {
            return false;
        }
        if (poly_gcd(f, diff, p).size() != 1) {
            return false;
        }
    }
    return true;
}

Poly find_modulus(std::uint64_t p, unsigned d)
{
    const std::uint64_t count = *checked_pow(p, d);
    for (std::uint64_t lower = 0; lower < count; ++lower) {
        Poly f(d + 1, 0);
        std::uint64_t rest = lower;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[d] = 1;
        if (is_irreducible(f, p)) {
            return f;
        }
    }
    // Unreachable: irreducibles of every degree exist.
    throw Error(ErrorCode::NonPrime, "no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint64_t p, unsigned d) : p_(p), d_(d), q_(*checked_pow(p, d))
{
    modulus_ = find_modulus(p, d);
    p_powers_.resize(d_);
    std::uint64_t power = 1;
    for (unsigned i = 0; i < d_; ++i) {
        p_powers_[i] = power;
        power *= p_;
    }
    order_factors_ = factorize(q_ - 1);

    auto is_primitive = [&](Elem c) {
        for (const auto& f : order_factors_) {
            if (pow_u(c, (q_ - 1) / f.prime) == one()) {
                return false;
            }
        }
        return true;
    };
    // Encodings below p form F_p, which holds no primitive element once d > 1.
    for (std::uint64_t enc = d_ > 1 ? p_ : 1; enc < q_; ++enc) {
        if (is_primitive(Elem{enc})) {
            g_ = Elem{enc};
            break;
        }
    }
    if (q_ <= kTableLimit) {
        build_tables();
    }
}

void Field::build_tables()
{
    const std::uint64_t n = q_ - 1;
    std::vector<std::uint32_t> exp_table(2 * n);
    std::vector<std::uint32_t> log_table(q_, kNoLog);
    Elem x = one();
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_table[i] = static_cast<std::uint32_t>(x.value());
        log_table[x.value()] = static_cast<std::uint32_t>(i);
        x = mul_poly(x, g_);
    }
    for (std::uint64_t i = n; i < 2 * n; ++i) {
        exp_table[i] = exp_table[i - n];
    }
    std::vector<std::uint32_t> zech(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Elem s = add_digits(one(), Elem{exp_table[i]}, false);
        zech[i] = s.is_zero() ? kNoLog : log_table[s.value()];
    }
    exp_ = std::move(exp_table);
    log_ = std::move(log_table);
    zech_ = std::move(zech);
}

std::optional<std::uint64_t> Field::sqrt_order() const noexcept
{
    if (d_ % 2 != 0) {
        return std::nullopt;
    }
    return *checked_pow(p_, d_ / 2);
}

Elem Field::from_int(std::int64_t n) const noexcept
{
    return Elem{reduce_exponent(n, p_)};
}

Elem Field::element(std::uint64_t encoding) const
{
    if (encoding >= q_) {
        throw Error(ErrorCode::MalformedInput,
                    "encoding " + std::to_string(encoding) + " outside [0, " + std::to_string(q_) + ")");
    }
    return Elem{encoding};
}

Elem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const
{
    if (coeffs.size() > d_) {
        throw Error(ErrorCode::DimensionMismatch, "more than d coefficients");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        value += (coeffs[i] % p_) * p_powers_[i];
    }
    return Elem{value};
}

std::vector<std::uint64_t> Field::coeffs(Elem a) const
{
    std::vector<std::uint64_t> out(d_);
    std::uint64_t rest = a.value();
    for (unsigned i = 0; i < d_; ++i) {
        out[i] = rest % p_;
        rest /= p_;
    }
    return out;
}

Elem Field::add_digits(Elem a, Elem b, bool negate_b) const noexcept
{
    std::uint64_t x = a.value();
    std::uint64_t y = b.value();
    std::uint64_t out = 0;
    for (unsigned i = 0; i < d_; ++i) {
        const std::uint64_t cx = x % p_;
        std::uint64_t cy = y % p_;
        x /= p_;
        y /= p_;
        if (negate_b && cy != 0) {
            cy = p_ - cy;
        }
        std::uint64_t c = cx + cy;
        if (c >= p_) {
            c -= p_;
        }
        out += c * p_powers_[i];
    }
    return Elem{out};
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept
{
    const Poly pa = coeffs(a);
    const Poly pb = coeffs(b);
    Poly prod = poly_mulmod(pa, pb, modulus_, p_);
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < prod.size(); ++i) {
        value += prod[i] * p_powers_[i];
    }
    return Elem{value};
}

Elem Field::inv(Elem a) const
{
    if (a.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    if (has_tables()) {
        const std::uint32_t la = log_[a.value()];
        return Elem{exp_[la == 0 ? 0 : (q_ - 1) - la]};
    }
    return pow_u(a, q_ - 2);
}

Elem Field::pow_u(Elem a, std::uint64_t e) const
{
    if (e == 0) {
        return one();
    }
    if (a.is_zero()) {
        return zero();
    }
    e %= (q_ - 1);
    if (has_tables()) {
        return Elem{exp_[mulmod(log_[a.value()], e, q_ - 1)]};
    }
    Elem result = one();
    Elem base = a;
    while (e != 0) {
        if (e & 1U) {
            result = mul_poly(result, base);
        }
        base = mul_poly(base, base);
        e >>= 1U;
    }
    return result;
}

Elem Field::pow(Elem a, std::int64_t e) const
{
    if (e >= 0) {
        return pow_u(a, static_cast<std::uint64_t>(e));
    }
    if (a.is_zero()) {
        throw Error(ErrorCode::ZeroToNegativePower, "0^" + std::to_string(e));
    }
    return pow_u(a, reduce_exponent(e, q_ - 1));
}

Elem Field::gen_pow(std::int64_t e) const
{
    const std::uint64_t k = reduce_exponent(e, q_ - 1);
    if (has_tables()) {
        return Elem{exp_[k]};
    }
    return pow_u(g_, k);
}

std::uint64_t Field::log(Elem a) const
{
    if (a.is_zero()) {
        throw Error(ErrorCode::ZeroElement, "log of zero");
    }
    if (has_tables()) {
        return log_[a.value()];
    }
    // Pohlig-Hellman would be the general answer; only table-backed fields
    // need discrete logs in this library.
    throw Error(ErrorCode::FieldTooLarge, "discrete log needs a table-backed field");
}

int Field::quadratic_character(Elem a) const
{
    if (a.is_zero()) {
        return 0;
    }
    return pow_u(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

Elem Field::sqrt(Elem a) const
{
    if (a.is_zero()) {
        return a;
    }
    if (quadratic_character(a) != 1) {
        throw Error(ErrorCode::NotASquare, to_string(a));
    }
    // Tonelli-Shanks with the generator as the fixed non-residue.
    std::uint64_t odd = q_ - 1;
    unsigned twos = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    unsigned m = twos;
    Elem c = pow_u(g_, odd);
    Elem t = pow_u(a, odd);
    Elem root = pow_u(a, (odd + 1) / 2);
    while (t != one()) {
        unsigned i = 0;
        Elem probe = t;
        while (probe != one()) {
            probe = mul(probe, probe);
            ++i;
        }
        Elem b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) {
            b = mul(b, b);
        }
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        root = mul(root, b);
    }
    const Elem other = neg(root);
    return std::min(root, other);
}

std::uint64_t Field::element_order(Elem a) const
{
    if (a.is_zero()) {
        throw Error(ErrorCode::ZeroElement, "order of zero");
    }
    std::uint64_t order = q_ - 1;
    for (const auto& f : order_factors_) {
        for (unsigned i = 0; i < f.exponent; ++i) {
            if (pow_u(a, order / f.prime) != one()) {
                break;
            }
            order /= f.prime;
        }
    }
    return order;
}

Elem Field::root_of_unity(std::uint64_t m) const
{
    if (m == 0 || (q_ - 1) % m != 0) {
        throw Error(ErrorCode::NotDividing, std::to_string(m) + " does not divide " + std::to_string(q_ - 1));
    }
    return gen_pow(static_cast<std::int64_t>((q_ - 1) / m));
}

std::uint64_t Field::check_subfield(std::uint64_t sub_q) const
{
    const auto pp = as_prime_power(sub_q);
    if (!pp || pp->p != p_ || d_ % pp->d != 0) {
        throw Error(ErrorCode::NotASubfield, std::to_string(sub_q) + " is not a subfield order of " + std::to_string(q_));
    }
    return sub_q;
}

Elem Field::subfield_generator(std::uint64_t sub_q) const
{
    (void)check_subfield(sub_q);
    return gen_pow(static_cast<std::int64_t>((q_ - 1) / (sub_q - 1)));
}

bool Field::in_subfield(Elem x, std::uint64_t sub_q) const
{
    (void)check_subfield(sub_q);
    return pow_u(x, sub_q) == x;
}

std::vector<Elem> Field::subfield_elements(std::uint64_t sub_q) const
{
    const Elem gamma = subfield_generator(sub_q);
    std::vector<Elem> out{zero()};
    Elem x = one();
    for (std::uint64_t i = 0; i + 1 < sub_q; ++i) {
        out.push_back(x);
        x = mul(x, gamma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Field::to_string(Elem a) const
{
    if (a.is_zero()) {
        return "0";
    }
    const auto c = coeffs(a);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (i == 0 || c[i] != 1) {
            out += std::to_string(c[i]);
        }
        if (i >= 1) {
            out += 'x';
        }
        if (i >= 2) {
            out += '^' + std::to_string(i);
        }
    }
    return out;
}

std::string format_polynomial(std::span<const std::uint64_t> coeffs)
{
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::uint64_t c = coeffs[i];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (i == 0 || c != 1) {
            out += std::to_string(c);
        }
        if (i >= 1) {
            out += 'x';
        }
        if (i >= 2) {
            out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FieldPtr make_field(std::uint64_t p, unsigned d)
{
    if (d == 0) {
        throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
    }
    if (!is_prime(p)) {
        throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    }
    if (p == 2) {
        throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    }
    const auto q = checked_pow(p, d);
    if (!q || *q > Field::kMaxOrder) {
        throw Error(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(d) + " exceeds 2^62");
    }
    return std::make_shared<const Field>(p, d);
}

FieldPtr make_field_of_order(std::uint64_t q)
{
    if (q % 2 == 0) {
        throw Error(ErrorCode::EvenCharacteristic, "q = " + std::to_string(q) + " is even");
    }
    const auto pp = as_prime_power(q);
    if (!pp) {
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    return make_field(pp->p, pp->d);
}

}  // namespace mdsdual
