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

#include "mdsdual/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace mdsdual {

std::string_view to_string(Theorem theorem) noexcept
{
    switch (theorem) {
    case Theorem::T1i: return "T1i";
    case Theorem::T1ii: return "T1ii";
    case Theorem::T2: return "T2";
    case Theorem::T3i: return "T3i";
    case Theorem::T3ii: return "T3ii";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) noexcept
{
    for (Theorem t : {Theorem::T1i, Theorem::T1ii, Theorem::T2, Theorem::T3i, Theorem::T3ii, Theorem::T4,
                      Theorem::T5}) {
        if (to_string(t) == name) {
            return t;
        }
    }
    return std::nullopt;
}

ConstructionParams t1i(std::uint64_t m, std::uint64_t t) { return {Theorem::T1i, m, t, 0, 0, 0}; }
ConstructionParams t1ii(std::uint64_t m, std::uint64_t t) { return {Theorem::T1ii, m, t, 0, 0, 0}; }
ConstructionParams t2(std::uint64_t m, std::uint64_t t) { return {Theorem::T2, m, t, 0, 0, 0}; }
ConstructionParams t3i(std::uint64_t m, std::uint64_t t, std::uint64_t s) { return {Theorem::T3i, m, t, s, 0, 0}; }
ConstructionParams t3ii(std::uint64_t m, std::uint64_t t, std::uint64_t s) { return {Theorem::T3ii, m, t, s, 0, 0}; }
ConstructionParams t4(std::uint64_t e) { return {Theorem::T4, 0, 0, 0, e, 0}; }
ConstructionParams t5(std::uint64_t k, std::uint64_t t, std::uint64_t e) { return {Theorem::T5, 0, t, 0, e, k}; }

std::string label(const ConstructionParams& params)
{
    const auto kv = [](const char* key, std::uint64_t value) { return std::string(key) + "=" + std::to_string(value); };
    std::string body;
    switch (params.theorem) {
    case Theorem::T1i:
    case Theorem::T1ii:
    case Theorem::T2: body = kv("m", params.m) + "," + kv("t", params.t); break;
    case Theorem::T3i:
    case Theorem::T3ii: body = kv("m", params.m) + "," + kv("t", params.t) + "," + kv("s", params.s); break;
    case Theorem::T4: body = kv("e", params.e); break;
    case Theorem::T5: body = kv("k", params.k) + "," + kv("t", params.t) + "," + kv("e", params.e); break;
    }
    return std::string(to_string(params.theorem)) + "(" + body + ")";
}

std::uint64_t t1_max_t(std::uint64_t r, std::uint64_t m) { return (r + 1) / std::gcd(r + 1, m); }
std::uint64_t t2_max_t(std::uint64_t r, std::uint64_t m) { return (r + 1) / (2 * std::gcd(r + 1, m)); }
std::uint64_t t3_max_t(std::uint64_t r, std::uint64_t m, std::uint64_t s)
{
    return s * (r - 1) / std::gcd(s * (r - 1), m);
}

namespace {

using boost::multiprecision::gcd;

bool divides(const BigInt& a, const BigInt& b) { return a != 0 && b % a == 0; }
bool is_even(const BigInt& a) { return a % 2 == 0; }

struct Checker {
    std::optional<std::string> failed;
    void require(bool ok, const char* clause)
    {
        if (!failed && !ok) {
            failed = clause;
        }
    }
};

std::optional<std::string> violation_impl(const ConstructionParams& prm, std::uint64_t p, unsigned d, BigInt& n)
{
    Checker c;
    c.require(is_prime(p) && p != 2, "p odd prime");
    c.require(d >= 1, "d >= 1");
    if (c.failed) {
        return c.failed;
    }
    const BigInt q = big_pow(p, d);
    const BigInt m = prm.m;
    const BigInt t = prm.t;
    const BigInt s = prm.s;

    switch (prm.theorem) {
    case Theorem::T1i:
    case Theorem::T1ii:
    case Theorem::T2:
    case Theorem::T3i:
    case Theorem::T3ii: {
        c.require(d % 2 == 0, "q = r^2");
        if (c.failed) {
            return c.failed;
        }
        const BigInt r = big_pow(p, d / 2);
        c.require(divides(m, q - 1), "m | q-1");
        if (c.failed) {
            return c.failed;
        }
        const BigInt tm = t * m;
        if (prm.theorem == Theorem::T1i || prm.theorem == Theorem::T1ii) {
            c.require(t >= 1 && t <= (r + 1) / gcd(r + 1, m), "1 <= t <= (r+1)/gcd(r+1,m)");
            c.require(is_even(tm), "tm even");
            if (prm.theorem == Theorem::T1i) {
                c.require(is_even((q - 1) / m), "(q-1)/m even");
                n = tm;
            } else {
                c.require(!(is_even(t) && is_even(m) && r % 4 == 1), "excluded: t even, m even and r≡1 (mod 4)");
                n = tm + 2;
            }
        } else if (prm.theorem == Theorem::T2) {
            c.require(!is_even(tm), "tm odd");
            c.require(t >= 2 && t <= (r + 1) / (2 * gcd(r + 1, m)), "2 <= t <= (r+1)/(2gcd(r+1,m))");
            n = tm + 1;
        } else {
            c.require(s >= 2 && is_even(s), "s even");
            if (c.failed) {
                return c.failed;
            }
            c.require(divides(s, m), "s | m");
            c.require(divides(s, r + 1), "s | r+1");
            if (prm.theorem == Theorem::T3i) {
                c.require(!c.failed && is_even((r + 1) / s), "(r+1)/s even");
                c.require(is_even((q - 1) / m), "(q-1)/m even");
            }
            const BigInt sr = s * (r - 1);
            c.require(t >= 1 && t <= sr / gcd(sr, m), "1 <= t <= s(r-1)/gcd(s(r-1),m)");
            n = prm.theorem == Theorem::T3i ? tm : tm + 2;
        }
        break;
    }
    case Theorem::T4: {
        c.require(d % 2 == 0, "q = p^(2s)");
        c.require(prm.e >= 1 && prm.e <= d / 2, "1 <= e <= s");
        if (!c.failed) {
            n = big_pow(p, static_cast<unsigned>(2 * prm.e)) + 1;
        }
        break;
    }
    case Theorem::T5: {
        c.require(prm.k >= 1 && d % prm.k == 0, "q = p^(km)");
        if (c.failed) {
            return c.failed;
        }
        const std::uint64_t m_ext = d / prm.k;
        const BigInt pk = big_pow(p, static_cast<unsigned>(prm.k));
        c.require(t >= 1, "t >= 1");
        if (c.failed) {
            return c.failed;
        }
        c.require(divides(2 * t, pk - 1), "2t | p^k-1");
        c.require(prm.e + 1 <= m_ext, "e <= m-1");
        c.require(divides(2 * t, q - 1) && is_even((q - 1) / (2 * t)), "(q-1)/(2t) even");
        if (!c.failed) {
            n = 2 * t * big_pow(p, static_cast<unsigned>(prm.k * prm.e));
        }
        break;
    }
    }
    return c.failed;
}

[[noreturn]] void throw_violation(const ConstructionParams& params, const std::string& clause)
{
    throw Error(ErrorCode::HypothesisViolated, label(params) + ": " + clause);
}

std::uint64_t key_of(std::uint64_t stride, std::uint64_t i, std::uint64_t m, std::uint64_t order)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(stride) * i % order * m % order);
}

void require_valid(const Field& f, const ConstructionParams& params)
{
    const BigInt n = validate(params, f.characteristic(), f.degree());
    if (n > kMaxMaterializedLength) {
        throw Error(ErrorCode::TooLargeToMaterialize, label(params) + ": n = " + n.str());
    }
}

// Points g^{j(q-1)/m + stride z} for z in I (outer), 0 <= j < m (inner).
std::vector<Elem> coset_points(const Field& f, std::uint64_t m, std::uint64_t stride,
                               const std::vector<std::uint64_t>& indices)
{
    const std::uint64_t order = f.group_order();
    std::vector<Elem> out;
    out.reserve(indices.size() * m);
    for (const std::uint64_t z : indices) {
        for (std::uint64_t j = 0; j < m; ++j) {
            const auto e = static_cast<unsigned __int128>(j) * (order / m) + static_cast<unsigned __int128>(stride) * z;
            out.push_back(f.gen_pow(static_cast<std::int64_t>(e % order)));
        }
    }
    return out;
}

// u_z = prod_{l in I, l != z} (g^{stride z m} - g^{stride l m}).
std::vector<Elem> coset_products(const Field& f, std::uint64_t m, std::uint64_t stride,
                                 const std::vector<std::uint64_t>& indices)
{
    const std::uint64_t order = f.group_order();
    std::vector<Elem> powers;
    for (const std::uint64_t z : indices) {
        powers.push_back(f.gen_pow(static_cast<std::int64_t>(key_of(stride, z, m, order))));
    }
    std::vector<Elem> out;
    for (std::size_t a = 0; a < powers.size(); ++a) {
        Elem prod = f.one();
        for (std::size_t b = 0; b < powers.size(); ++b) {
            if (a != b) {
                prod = f.mul(prod, f.sub(powers[a], powers[b]));
            }
        }
        out.push_back(prod);
    }
    return out;
}

Construction finish(const ConstructionParams& params, Assembly assembly, ConstructionTrace trace)
{
    Construction out;
    out.params = params;
    out.artifact = std::move(assembly.artifact);
    out.artifact.label = label(params);
    trace.locators = std::move(assembly.locators);
    out.trace = std::move(trace);
    return out;
}

// Shared body of T1i/T1ii/T2/T3i/T3ii: cosets of T inside <g^stride>.
Construction construct_cyclotomic(const FieldPtr& f, const ConstructionParams& params, std::uint64_t stride,
                                  const CosetSelection& sel, bool with_zero, bool extended,
                                  std::optional<Elem> lambda, std::optional<Elem> xi_s)
{
    std::vector<Elem> points;
    if (with_zero) {
        points.push_back(f->zero());
    }
    const std::vector<Elem> nonzero = coset_points(*f, params.m, stride, sel.indices);
    points.insert(points.end(), nonzero.begin(), nonzero.end());

    ConstructionTrace trace;
    trace.coset_indices = sel.indices;
    trace.coset_index_sum = sel.sum;
    trace.u = coset_products(*f, params.m, stride, sel.indices);
    trace.xi_s = xi_s;

    const EvalVector a(std::move(points), extended);
    Assembly assembly;
    try {
        if (extended) {
            assembly = assemble_self_dual_xgrs(f, a);
        } else {
            trace.lambda = *lambda;
            assembly = assemble_self_dual_grs(f, a, *lambda);
        }
    } catch (const Error& err) {
        if (err.code() == ErrorCode::SquareConditionViolated) {
            throw Error(ErrorCode::SquareConditionViolated,
                        label(params) + ": internal inconsistency, hypotheses hold but " + err.detail());
        }
        throw;
    }
    return finish(params, std::move(assembly), std::move(trace));
}

}  // namespace

std::optional<std::string> hypothesis_violation(const ConstructionParams& params, std::uint64_t p, unsigned d)
{
    BigInt n;
    return violation_impl(params, p, d, n);
}

BigInt validate(const ConstructionParams& params, std::uint64_t p, unsigned d)
{
    BigInt n;
    if (auto clause = violation_impl(params, p, d, n)) {
        throw_violation(params, *clause);
    }
    return n;
}

CosetSelection select_coset_reps(const Field& f, std::uint64_t stride, std::uint64_t m, std::uint64_t t,
                                 CosetParity parity)
{
    const std::uint64_t order = f.group_order();
    const std::uint64_t subgroup = order / std::gcd(stride % order == 0 ? order : stride % order, order);
    const std::uint64_t step = parity == CosetParity::AllEven ? 2 : 1;
    const bool sum_parity = parity == CosetParity::SumEven || parity == CosetParity::SumOdd;
    const std::uint64_t greedy = sum_parity ? (t == 0 ? 0 : t - 1) : t;

    CosetSelection out;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t i = 0;
    for (; i < subgroup && out.indices.size() < greedy; i += step) {
        if (seen.insert(key_of(stride, i, m, order)).second) {
            out.indices.push_back(i);
            out.sum += i;
        }
    }
    if (out.indices.size() < greedy) {
        throw Error(ErrorCode::NotEnoughCosets, "only " + std::to_string(out.indices.size()) + " of " +
                                                    std::to_string(t) + " cosets available");
    }
    if (sum_parity && t > 0) {
        const std::uint64_t want = parity == CosetParity::SumEven ? 0 : 1;
        bool any_fresh = false;
        for (; i < subgroup; ++i) {
            if (seen.count(key_of(stride, i, m, order)) != 0) {
                continue;
            }
            any_fresh = true;
            if ((out.sum + i) % 2 == want) {
                out.indices.push_back(i);
                out.sum += i;
                return out;
            }
        }
        if (!any_fresh) {
            throw Error(ErrorCode::NotEnoughCosets, "only " + std::to_string(out.indices.size()) + " of " +
                                                        std::to_string(t) + " cosets available");
        }
        throw Error(ErrorCode::ParityInfeasible,
                    std::string("no admissible last index gives A ") + (want == 0 ? "even" : "odd"));
    }
    return out;
}

Construction construct_t1i(const FieldPtr& f, std::uint64_t m, std::uint64_t t)
{
    const ConstructionParams params = t1i(m, t);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    const CosetSelection sel = select_coset_reps(*f, r - 1, m, t, CosetParity::Any);
    // lambda = g^{(r+1)(t-1)/2 - mA}
    const auto exponent = static_cast<__int128>((r + 1) / 2) * static_cast<__int128>(t - 1) -
                          static_cast<__int128>(m) * static_cast<__int128>(sel.sum);
    const auto reduced = static_cast<std::int64_t>(exponent % static_cast<__int128>(f->group_order()));
    return construct_cyclotomic(f, params, r - 1, sel, false, false, f->gen_pow(reduced), std::nullopt);
}

Construction construct_t1ii(const FieldPtr& f, std::uint64_t m, std::uint64_t t)
{
    const ConstructionParams params = t1ii(m, t);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    // The parity of A only enters the square condition when m is odd.
    CosetParity parity = CosetParity::Any;
    if (t % 2 == 0 && m % 2 == 1) {
        parity = r % 4 == 3 ? CosetParity::SumEven : CosetParity::SumOdd;
    }
    const CosetSelection sel = select_coset_reps(*f, r - 1, m, t, parity);
    return construct_cyclotomic(f, params, r - 1, sel, true, true, std::nullopt, std::nullopt);
}

Construction construct_t2(const FieldPtr& f, std::uint64_t m, std::uint64_t t)
{
    const ConstructionParams params = t2(m, t);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    const CosetSelection sel = select_coset_reps(*f, r - 1, m, t, CosetParity::AllEven);
    return construct_cyclotomic(f, params, r - 1, sel, false, true, std::nullopt, std::nullopt);
}

Construction construct_t3i(const FieldPtr& f, std::uint64_t m, std::uint64_t t, std::uint64_t s)
{
    const ConstructionParams params = t3i(m, t, s);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    const CosetSelection sel = select_coset_reps(*f, (r + 1) / s, m, t, CosetParity::Any);
    return construct_cyclotomic(f, params, (r + 1) / s, sel, false, false, f->one(), f->root_of_unity(s));
}

Construction construct_t3ii(const FieldPtr& f, std::uint64_t m, std::uint64_t t, std::uint64_t s)
{
    const ConstructionParams params = t3ii(m, t, s);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    const CosetSelection sel = select_coset_reps(*f, (r + 1) / s, m, t, CosetParity::Any);
    return construct_cyclotomic(f, params, (r + 1) / s, sel, true, true, std::nullopt, f->root_of_unity(s));
}

namespace {

// All F_p-combinations of `basis`, the coefficient of basis[0] varying fastest.
std::vector<Elem> span_over_prime_field(const Field& f, const std::vector<Elem>& basis)
{
    std::vector<Elem> out{f.zero()};
    for (const Elem b : basis) {
        std::vector<Elem> next;
        next.reserve(out.size() * f.characteristic());
        for (std::uint64_t c = 0; c < f.characteristic(); ++c) {
            const Elem scaled = f.mul(f.from_int(static_cast<std::int64_t>(c)), b);
            for (const Elem x : out) {
                next.push_back(f.add(x, scaled));
            }
        }
        out = std::move(next);
    }
    return out;
}

// All combinations sum c_i basis[i] with c_i ranging over `coeffs`
// (basis[0] varying fastest).
std::vector<Elem> span_over(const Field& f, const std::vector<Elem>& basis, const std::vector<Elem>& coeffs)
{
    std::vector<Elem> out{f.zero()};
    for (const Elem b : basis) {
        std::vector<Elem> next;
        next.reserve(out.size() * coeffs.size());
        for (const Elem c : coeffs) {
            const Elem scaled = f.mul(c, b);
            for (const Elem x : out) {
                next.push_back(f.add(x, scaled));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Elem> t4_subspace(const Field& f, const ConstructionTrace& trace)
{
    return span_over_prime_field(f, *trace.basis);
}

std::vector<Elem> t5_subspace(const Field& f, std::uint64_t k, const ConstructionTrace& trace)
{
    const std::uint64_t sub_q = *checked_pow(f.characteristic(), static_cast<unsigned>(k));
    return span_over(f, *trace.basis, f.subfield_elements(sub_q));
}

}  // namespace

Construction construct_t4(const FieldPtr& f, std::uint64_t e)
{
    const ConstructionParams params = t4(e);
    require_valid(*f, params);
    const std::uint64_t r = *f->sqrt_order();
    const Elem gamma = f->subfield_generator(r);

    ConstructionTrace trace;
    std::vector<Elem> basis;
    Elem power = f->one();
    for (std::uint64_t i = 0; i < e; ++i) {
        basis.push_back(power);
        power = f->mul(power, gamma);
    }
    trace.basis = basis;
    const Elem beta = f->gen_pow(static_cast<std::int64_t>(r - 1));
    trace.beta = beta;

    const std::vector<Elem> subspace = t4_subspace(*f, trace);
    std::vector<Elem> points;
    points.reserve(subspace.size() * subspace.size());
    for (const Elem ak : subspace) {
        const Elem shifted = f->mul(ak, beta);
        for (const Elem aj : subspace) {
            points.push_back(f->add(shifted, aj));
        }
    }
    const EvalVector a(std::move(points), true);
    return finish(params, assemble_self_dual_xgrs(f, a), std::move(trace));
}

Construction construct_t5(const FieldPtr& f, std::uint64_t k, std::uint64_t t, std::uint64_t e)
{
    const ConstructionParams params = t5(k, t, e);
    require_valid(*f, params);
    const std::uint64_t sub_q = *checked_pow(f->characteristic(), static_cast<unsigned>(k));
    const Elem gamma = f->subfield_generator(sub_q);
    const Elem omega = f->pow_u(gamma, (sub_q - 1) / (2 * t));

    ConstructionTrace trace;
    trace.omega = omega;
    std::vector<Elem> basis;
    for (std::uint64_t i = 1; i <= e; ++i) {
        basis.push_back(f->gen_pow(static_cast<std::int64_t>(i)));
    }
    trace.basis = basis;
    const std::vector<Elem> subspace = t5_subspace(*f, k, trace);

    std::vector<Elem> points;
    points.reserve(2 * t * subspace.size());
    Elem shift = f->one();
    for (std::uint64_t j = 0; j < 2 * t; ++j) {
        for (const Elem v : subspace) {
            points.push_back(f->add(shift, v));
        }
        shift = f->mul(shift, omega);
    }

    // c = (prod_{0 != u in V} u) * prod_{u in V} prod_{h=1}^{2t-1} (1 + u - omega^h)
    Elem c = f->one();
    for (const Elem u : subspace) {
        if (!u.is_zero()) {
            c = f->mul(c, u);
        }
        Elem omega_h = omega;
        for (std::uint64_t h = 1; h < 2 * t; ++h) {
            c = f->mul(c, f->sub(f->add(f->one(), u), omega_h));
            omega_h = f->mul(omega_h, omega);
        }
    }
    trace.c = c;
    trace.lambda = c;

    const EvalVector a(std::move(points), false);
    return finish(params, assemble_self_dual_grs(f, a, c), std::move(trace));
}

Construction construct(const FieldPtr& f, const ConstructionParams& params)
{
    switch (params.theorem) {
    case Theorem::T1i: return construct_t1i(f, params.m, params.t);
    case Theorem::T1ii: return construct_t1ii(f, params.m, params.t);
    case Theorem::T2: return construct_t2(f, params.m, params.t);
    case Theorem::T3i: return construct_t3i(f, params.m, params.t, params.s);
    case Theorem::T3ii: return construct_t3ii(f, params.m, params.t, params.s);
    case Theorem::T4: return construct_t4(f, params.e);
    case Theorem::T5: return construct_t5(f, params.k, params.t, params.e);
    }
    throw Error(ErrorCode::UnsupportedTheorem, label(params));
}

Construction construct(std::uint64_t p, unsigned d, const ConstructionParams& params)
{
    const BigInt n = validate(params, p, d);
    if (n > kMaxMaterializedLength) {
        throw Error(ErrorCode::TooLargeToMaterialize, label(params) + ": n = " + n.str() + " exceeds " +
                                                          std::to_string(kMaxMaterializedLength));
    }
    return construct(make_field(p, d), params);
}

Elem closed_form_locator(const Field& f, const ConstructionParams& params, const ConstructionTrace& trace,
                         std::span<const Elem> points, std::size_t index)
{
    if (index >= points.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(index));
    }
    const Elem alpha = points[index];
    switch (params.theorem) {
    case Theorem::T1i:
    case Theorem::T2:
    case Theorem::T3i: {
        // m * alpha^{m-1} * u_z
        const Elem u = trace.u->at(index / params.m);
        const Elem m = f.from_int(static_cast<std::int64_t>(params.m % f.characteristic()));
        return f.mul(f.mul(m, f.pow_u(alpha, params.m - 1)), u);
    }
    case Theorem::T1ii:
    case Theorem::T3ii: {
        const std::uint64_t r = *f.sqrt_order();
        const std::uint64_t stride = params.theorem == Theorem::T1ii ? r - 1 : (r + 1) / params.s;
        const std::uint64_t order = f.group_order();
        const auto& indices = *trace.coset_indices;
        if (index == 0) {
            // (-1)^{(m+1)t} * prod_{l in I} g^{stride l m}
            Elem prod = f.one();
            for (const std::uint64_t l : indices) {
                prod = f.mul(prod, f.gen_pow(static_cast<std::int64_t>(key_of(stride, l, params.m, order))));
            }
            return ((params.m + 1) * params.t) % 2 == 0 ? prod : f.neg(prod);
        }
        // m * g^{stride z m} * u_z
        const std::size_t zi = (index - 1) / params.m;
        const Elem m = f.from_int(static_cast<std::int64_t>(params.m % f.characteristic()));
        const Elem gz = f.gen_pow(static_cast<std::int64_t>(key_of(stride, indices.at(zi), params.m, order)));
        return f.mul(f.mul(m, gz), trace.u->at(zi));
    }
    case Theorem::T4: {
        const std::vector<Elem> subspace = t4_subspace(f, trace);
        const std::size_t size = subspace.size();
        const std::size_t k0 = index / size;
        const std::size_t j0 = index % size;
        const Elem beta = *trace.beta;
        Elem prod = f.pow_u(beta, size - 1);
        for (std::size_t j = 0; j < size; ++j) {
            if (j != j0) {
                prod = f.mul(prod, f.sub(subspace[j0], subspace[j]));
            }
        }
        for (std::size_t k = 0; k < size; ++k) {
            if (k != k0) {
                prod = f.mul(prod, f.sub(subspace[k0], subspace[k]));
            }
        }
        for (std::size_t j = 0; j < size; ++j) {
            if (j == j0) {
                continue;
            }
            const Elem dj = f.sub(subspace[j0], subspace[j]);
            for (std::size_t k = 0; k < size; ++k) {
                if (k != k0) {
                    prod = f.mul(prod, f.sub(f.mul(f.sub(subspace[k0], subspace[k]), beta), dj));
                }
            }
        }
        return prod;
    }
    case Theorem::T5: {
        // omega^{-i p^{ke}} * c for b in omega^i + V
        const std::uint64_t vsize = *checked_pow(f.characteristic(), static_cast<unsigned>(params.k * params.e));
        const std::uint64_t i = index / vsize;
        const std::uint64_t exponent = i * vsize;
        return f.mul(f.pow(*trace.omega, -static_cast<std::int64_t>(exponent % f.group_order())), *trace.c);
    }
    }
    throw Error(ErrorCode::UnsupportedTheorem, label(params));
}

}  // namespace mdsdual
