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

#ifndef MDSDUAL_FIELD_HPP
#define MDSDUAL_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsdual/error.hpp"
#include "mdsdual/numtheory.hpp"

namespace mdsdual {

/// An element of F_q, stored as its canonical encoding sum_i c_i p^i where
/// c_0, ..., c_{d-1} are the coefficients over F_p (constant term first).
/// The encoding is a bijection onto [0, q), so ordering and hashing are free.
class Elem {
public:
    constexpr Elem() = default;
    constexpr explicit Elem(std::uint64_t encoding) : value_(encoding) {}

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }

    friend constexpr auto operator<=>(Elem, Elem) = default;

private:
    std::uint64_t value_ = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_q = F_p[x]/(modulus) with a fixed primitive element. The modulus is the
/// monic irreducible of degree d with the smallest encoding of its lower
/// coefficients; the generator is the primitive element with the smallest
/// encoding. Both are deterministic, so equal (p, d) give identical fields.
///
/// Immutable once built. Fields with q up to kTableLimit carry log/antilog and
/// Zech tables; larger fields fall back to polynomial arithmetic.
class Field {
public:
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

    Field(std::uint64_t p, unsigned d);

    [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
    [[nodiscard]] unsigned degree() const noexcept { return d_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return q_; }
    /// |F_q^*| = q - 1.
    [[nodiscard]] std::uint64_t group_order() const noexcept { return q_ - 1; }
    /// Modulus coefficients, constant term first, length d + 1 (monic).
    [[nodiscard]] const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    [[nodiscard]] Elem generator() const noexcept { return g_; }
    /// Factorization of q - 1.
    [[nodiscard]] const std::vector<PrimeFactor>& group_order_factors() const noexcept { return order_factors_; }
    /// r with q = r^2, when d is even.
    [[nodiscard]] std::optional<std::uint64_t> sqrt_order() const noexcept;
    [[nodiscard]] bool has_tables() const noexcept { return !exp_.empty(); }

    [[nodiscard]] Elem zero() const noexcept { return Elem{0}; }
    [[nodiscard]] Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer in the prime subfield.
    [[nodiscard]] Elem from_int(std::int64_t n) const noexcept;
    /// Checked conversion from a canonical encoding.
    [[nodiscard]] Elem element(std::uint64_t encoding) const;
    [[nodiscard]] Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;
    [[nodiscard]] std::vector<std::uint64_t> coeffs(Elem a) const;
    [[nodiscard]] bool contains(Elem a) const noexcept { return a.value() < q_; }

    [[nodiscard]] Elem add(Elem a, Elem b) const noexcept
    {
        if (a.is_zero()) {
            return b;
        }
        if (b.is_zero()) {
            return a;
        }
        if (!has_tables()) {
            return add_digits(a, b, false);
        }
        const std::uint32_t la = log_[a.value()];
        const std::uint32_t lb = log_[b.value()];
        const std::uint64_t diff = lb >= la ? lb - la : lb + (q_ - 1) - la;
        const std::uint32_t z = zech_[diff];
        if (z == kNoLog) {
            return Elem{0};
        }
        return Elem{exp_[la + z]};
    }

    [[nodiscard]] Elem neg(Elem a) const noexcept
    {
        if (a.is_zero()) {
            return a;
        }
        if (!has_tables()) {
            return add_digits(Elem{0}, a, true);
        }
        return Elem{exp_[log_[a.value()] + (q_ - 1) / 2]};
    }

    [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept
    {
        if (a.is_zero() || b.is_zero()) {
            return Elem{0};
        }
        if (!has_tables()) {
            return mul_poly(a, b);
        }
        return Elem{exp_[log_[a.value()] + log_[b.value()]]};
    }

    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^e; for a != 0 the exponent is reduced mod q - 1.
    [[nodiscard]] Elem pow(Elem a, std::int64_t e) const;
    [[nodiscard]] Elem pow_u(Elem a, std::uint64_t e) const;
    /// g^e for any integer e.
    [[nodiscard]] Elem gen_pow(std::int64_t e) const;
    /// Discrete log base g; a must be nonzero.
    [[nodiscard]] std::uint64_t log(Elem a) const;

    /// +1 on nonzero squares, -1 on non-squares, 0 on zero.
    [[nodiscard]] int quadratic_character(Elem a) const;
    /// Square root, value-smaller branch. Throws NotASquare.
    [[nodiscard]] Elem sqrt(Elem a) const;
    /// Multiplicative order. Throws ZeroElement.
    [[nodiscard]] std::uint64_t element_order(Elem a) const;
    /// g^((q-1)/m), a primitive m-th root of unity. Throws NotDividing.
    [[nodiscard]] Elem root_of_unity(std::uint64_t m) const;
    /// g^((q-1)/(sub_q-1)), generating F_{sub_q}^*. Throws NotASubfield.
    [[nodiscard]] Elem subfield_generator(std::uint64_t sub_q) const;
    /// x in F_{sub_q} iff x^{sub_q} = x.
    [[nodiscard]] bool in_subfield(Elem x, std::uint64_t sub_q) const;
    /// Elements of F_{sub_q}, ascending by encoding.
    [[nodiscard]] std::vector<Elem> subfield_elements(std::uint64_t sub_q) const;

    /// Constant-first text form, e.g. "1+x", "2x^2".
    [[nodiscard]] std::string to_string(Elem a) const;

private:
    static constexpr std::uint32_t kNoLog = UINT32_MAX;

    [[nodiscard]] Elem add_digits(Elem a, Elem b, bool negate_b) const noexcept;
    [[nodiscard]] Elem mul_poly(Elem a, Elem b) const noexcept;
    [[nodiscard]] std::uint64_t check_subfield(std::uint64_t sub_q) const;
    void build_tables();

    std::uint64_t p_;
    unsigned d_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> p_powers_;
    std::vector<PrimeFactor> order_factors_;
    Elem g_;
    std::vector<std::uint32_t> exp_;   // g^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log_;   // indexed by encoding; log_[0] unused
    std::vector<std::uint32_t> zech_;  // log(1 + g^i), kNoLog when 1 + g^i = 0
};

/// Validates (p, d) and builds the field. Errors: NonPrime, EvenCharacteristic,
/// DegreeZero, FieldTooLarge.
FieldPtr make_field(std::uint64_t p, unsigned d);

/// Factors q into (p, d) first. Errors additionally NotPrimePower.
FieldPtr make_field_of_order(std::uint64_t q);

/// Descending text form of a coefficient list, e.g. {1, 0, 1} -> "x^2+1".
std::string format_polynomial(std::span<const std::uint64_t> coeffs);

}  // namespace mdsdual

#endif  // MDSDUAL_FIELD_HPP
