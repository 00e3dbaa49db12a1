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

#include "mdsdual/census.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mdsdual/verify.hpp"

namespace mdsdual {

namespace {

enum PriorRow : std::size_t {
    kFullLength,
    kDivPlus1,
    kDivPlus2,
    kPrimePow3,
    kPrimePow1,
    kLrEvenA,
    kLrEvenB,
    kLr1OddA,
    kLr1OddB,
    kUpToR,
    kTwoTr,
    kTr,
    kTr1,
    kDivisor,
    kFourN,
    kPPowPlus1,
    kTwoPe,
    kTm,
    kTm1,
    kTm2,
    kTwoTpe,
    kTwoTrl,
    kOddTrl1,
    kPlPlus1,
    kPriorRowCount,
};

std::vector<CensusRule> build_rules()
{
    std::vector<CensusRule> rules = {
        {"prior:n=q+1", RuleSource::Prior, "q odd; n = q+1"},
        {"prior:(n-1)|(q-1)", RuleSource::Prior, "q odd; (n-1) | (q-1), eta(1-n) = 1"},
        {"prior:(n-2)|(q-1)", RuleSource::Prior, "q odd; (n-2) | (q-1), eta(2-n) = 1"},
        {"prior:n-1=P^mu,P=3(4)", RuleSource::Prior, "q = r^s = 3 (mod 4); n-1 = P^mu | (q-1), prime P = 3 (mod 4), mu odd"},
        {"prior:n-1=P^mu,P=1(4)", RuleSource::Prior,
         "q = r^s, r = 1 (mod 4), s odd; n-1 = P^mu | (q-1), mu odd, prime P = 1 (mod 4)"},
        {"prior:n=lr,2l|(r-1)", RuleSource::Prior, "q = r^s, s >= 2; n = lr, l even, 2l | (r-1)"},
        {"prior:n=lr,(l-1)|(r-1)", RuleSource::Prior,
         "q = r^s, s >= 2; n = lr, l even, (l-1) | (r-1), eta(1-l) = 1"},
        {"prior:n=lr+1,l|(r-1)", RuleSource::Prior, "q = r^s, s >= 2; n = lr+1, l odd, l | (r-1), eta(l) = 1"},
        {"prior:n=lr+1,(l-1)|(r-1)", RuleSource::Prior,
         "q = r^s, s >= 2; n = lr+1, l odd, (l-1) | (r-1), eta(l-1) = eta(-1) = 1"},
        {"prior:n<=r", RuleSource::Prior, "q = r^2; n <= r"},
        {"prior:n=2tr", RuleSource::Prior, "q = r^2, r = 3 (mod 4); n = 2tr, t <= (r-1)/2"},
        {"prior:n=tr", RuleSource::Prior, "q = r^2; n = tr, t even, 1 <= t <= r"},
        {"prior:n=tr+1", RuleSource::Prior, "q = r^2; n = tr+1, t odd, 1 <= t <= r"},
        {"prior:n|(q-1)", RuleSource::Prior, "q = 1 (mod 4); n | (q-1), n < q-1"},
        {"prior:4^n*n^2<=q", RuleSource::Prior, "q = 1 (mod 4); 4^n n^2 <= q (near-vacuous)"},
        {"prior:n=p^r+1", RuleSource::Prior, "q = p^k; n = p^r + 1, r | k"},
        {"prior:n=2p^e", RuleSource::Prior, "q = p^k; n = 2p^e, 1 <= e < k, eta(-1) = 1"},
        {"prior:n=tm", RuleSource::Prior, "q = r^2; n = tm, 1 <= t <= (r-1)/gcd(r-1,m), (q-1)/m even"},
        {"prior:n=tm+1", RuleSource::Prior,
         "q = r^2; n = tm+1, tm odd, 1 <= t <= (r-1)/gcd(r-1,m), m | (q-1)"},
        {"prior:n=tm+2", RuleSource::Prior,
         "q = r^2; n = tm+2, tm even, 1 <= t <= (r-1)/gcd(r-1,m), m | (q-1)"},
        {"prior:n=2tp^e", RuleSource::Prior, "q = p^m; n = 2tp^e, 2t | (p-1), e < m, (q-1)/(2t) even"},
        {"prior:n=2tr^l", RuleSource::Prior,
         "q = p^m, m even; n = 2tr^l, r = p^s, s | m/2, 0 <= l <= m/s, 1 <= t <= (r-1)/2"},
        {"prior:n=(2t+1)r^l+1", RuleSource::Prior,
         "q = p^m, m even; n = (2t+1)r^l + 1, r = p^s, s | m/2, 0 <= l < m/s, 0 <= t <= (r-1)/2, or l = m/s, "
         "t = 0"},
        {"prior:n=p^l+1", RuleSource::Prior, "q = p^m = 1 (mod 4); n = p^l + 1, 0 <= l <= m"},
        {"new:T1i", RuleSource::New, "q = r^2; n = tm, 1 <= t <= (r+1)/gcd(r+1,m), (q-1)/m even"},
        {"new:T1ii", RuleSource::New,
         "q = r^2; n = tm+2, tm even (except t even, m even, r = 1 (mod 4)), 1 <= t <= (r+1)/gcd(r+1,m), "
         "m | (q-1)"},
        {"new:T2", RuleSource::New, "q = r^2; n = tm+1, tm odd, 2 <= t <= (r+1)/(2gcd(r+1,m)), m | (q-1)"},
        {"new:T3i", RuleSource::New,
         "q = r^2; n = tm, 1 <= t <= s(r-1)/gcd(s(r-1),m), s even, s | m, (r+1)/s even, (q-1)/m even"},
        {"new:T3ii", RuleSource::New,
         "q = r^2; n = tm+2, 1 <= t <= s(r-1)/gcd(s(r-1),m), s even, s | m, s | r+1, m | (q-1)"},
        {"new:T4", RuleSource::New, "q = p^(2s); n = p^(2e) + 1, 1 <= e <= s"},
        {"new:T5", RuleSource::New, "q = p^(km); n = 2tp^(ke), 2t | (p^k-1), e <= m-1, (q-1)/(2t) even"},
    };
    return rules;
}

constexpr std::size_t new_rule_index(Theorem theorem)
{
    return kPriorRowCount + static_cast<std::size_t>(theorem);
}

struct CensusField {
    std::uint64_t q;
    std::uint64_t p;
    unsigned d;
};

CensusField check_census_q(std::uint64_t q)
{
    if (q % 2 == 0) {
        throw Error(ErrorCode::EvenQ, "q = " + std::to_string(q));
    }
    if (q > kCensusBudget) {
        throw Error(ErrorCode::BudgetExceeded, "q = " + std::to_string(q) + " > " + std::to_string(kCensusBudget));
    }
    const auto pp = as_prime_power(q);
    if (!pp) {
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    return {q, pp->p, pp->d};
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp)
{
    const auto v = checked_pow(base, static_cast<unsigned>(exp));
    return v ? *v : UINT64_MAX;
}

std::vector<RuleHits> evaluate_prior(const CensusField& cf, const Field& f, const std::vector<CensusRule>& rules)
{
    const std::uint64_t q = cf.q;
    const std::uint64_t p = cf.p;
    const unsigned d = cf.d;
    const std::uint64_t limit = q + 1;

    std::vector<RuleHits> hits(kPriorRowCount);
    for (std::size_t i = 0; i < kPriorRowCount; ++i) {
        hits[i].rule = &rules[i];
    }
    auto add = [&](PriorRow row, std::uint64_t n) {
        if (n % 2 == 0 && n >= 2 && n <= limit) {
            hits[row].lengths.insert(n);
        }
    };
    auto eta = [&](std::int64_t x) { return f.quadratic_character(f.from_int(x)); };
    const auto as_int = [](std::uint64_t x) { return static_cast<std::int64_t>(x); };

    const std::vector<std::uint64_t> div_q1 = divisors(q - 1);
    const std::vector<PrimeFactor> fac_q1 = factorize(q - 1);

    // Representations q = r^s.
    struct Rep {
        std::uint64_t r;
        unsigned s;
    };
    std::vector<Rep> reps;
    for (const std::uint64_t s : divisors(d)) {
        reps.push_back({ipow(p, d / s), static_cast<unsigned>(s)});
    }

    add(kFullLength, q + 1);
    for (const std::uint64_t dv : div_q1) {
        if (eta(1 - as_int(dv + 1)) == 1) {
            add(kDivPlus1, dv + 1);
        }
        if (eta(2 - as_int(dv + 2)) == 1) {
            add(kDivPlus2, dv + 2);
        }
    }

    const bool odd_s_rep = std::any_of(reps.begin(), reps.end(), [](const Rep& rep) {
        return rep.r % 4 == 1 && rep.s % 2 == 1;
    });
    for (const auto& [prime, exponent] : fac_q1) {
        std::uint64_t power = 1;
        for (unsigned mu = 1; mu <= exponent; ++mu) {
            power *= prime;
            if (mu % 2 == 0) {
                continue;
            }
            if (q % 4 == 3 && prime % 4 == 3) {
                add(kPrimePow3, power + 1);
            }
            if (odd_s_rep && prime % 4 == 1) {
                add(kPrimePow1, power + 1);
            }
        }
    }

    for (const Rep& rep : reps) {
        if (rep.s < 2) {
            continue;
        }
        const std::uint64_t r = rep.r;
        for (std::uint64_t l = 1; l * r <= limit; ++l) {
            if (l % 2 == 0) {
                if ((r - 1) % (2 * l) == 0) {
                    add(kLrEvenA, l * r);
                }
                if ((r - 1) % (l - 1) == 0 && eta(1 - as_int(l)) == 1) {
                    add(kLrEvenB, l * r);
                }
            } else {
                if ((r - 1) % l == 0 && eta(as_int(l)) == 1) {
                    add(kLr1OddA, l * r + 1);
                }
                if (l >= 3 && (r - 1) % (l - 1) == 0 && eta(as_int(l) - 1) == 1 && eta(-1) == 1) {
                    add(kLr1OddB, l * r + 1);
                }
            }
        }
    }

    if (d % 2 == 0) {
        const std::uint64_t r = ipow(p, d / 2);
        for (std::uint64_t n = 2; n <= r; n += 2) {
            add(kUpToR, n);
        }
        if (r % 4 == 3) {
            for (std::uint64_t t = 1; t <= (r - 1) / 2; ++t) {
                add(kTwoTr, 2 * t * r);
            }
        }
        for (std::uint64_t t = 1; t <= r; ++t) {
            add(t % 2 == 0 ? kTr : kTr1, t % 2 == 0 ? t * r : t * r + 1);
        }
        for (const std::uint64_t m : div_q1) {
            const std::uint64_t t_max = (r - 1) / std::gcd(r - 1, m);
            for (std::uint64_t t = 1; t <= t_max && t * m <= limit; ++t) {
                const std::uint64_t tm = t * m;
                if (((q - 1) / m) % 2 == 0) {
                    add(kTm, tm);
                }
                add(tm % 2 == 1 ? kTm1 : kTm2, tm % 2 == 1 ? tm + 1 : tm + 2);
            }
        }
    }

    if (q % 4 == 1) {
        for (const std::uint64_t dv : div_q1) {
            if (dv < q - 1) {
                add(kDivisor, dv);
            }
        }
        for (std::uint64_t n = 1; n < 32; ++n) {
            const std::uint64_t lhs = ipow(4, n);
            if (lhs != UINT64_MAX && lhs <= q / (n * n)) {
                add(kFourN, n);
            }
        }
    }

    for (const std::uint64_t r : divisors(d)) {
        add(kPPowPlus1, ipow(p, r) + 1);
    }
    if (eta(-1) == 1) {
        for (unsigned e = 1; e < d; ++e) {
            add(kTwoPe, 2 * ipow(p, e));
        }
    }
    for (const std::uint64_t two_t : divisors(p - 1)) {
        if (two_t % 2 == 0 && (q - 1) % two_t == 0 && ((q - 1) / two_t) % 2 == 0) {
            for (unsigned e = 0; e < d; ++e) {
                add(kTwoTpe, two_t * ipow(p, e));
            }
        }
    }

    if (d % 2 == 0) {
        for (const std::uint64_t s : divisors(d / 2)) {
            const std::uint64_t r = ipow(p, s);
            const std::uint64_t top = d / s;
            for (std::uint64_t l = 0; l <= top; ++l) {
                const std::uint64_t rl = ipow(r, l);
                for (std::uint64_t t = 1; t <= (r - 1) / 2 && 2 * t <= limit / rl; ++t) {
                    add(kTwoTrl, 2 * t * rl);
                }
                if (l < top) {
                    for (std::uint64_t t = 0; t <= (r - 1) / 2 && 2 * t + 1 <= limit / rl; ++t) {
                        add(kOddTrl1, (2 * t + 1) * rl + 1);
                    }
                } else {
                    add(kOddTrl1, rl + 1);
                }
            }
        }
    }
    if (q % 4 == 1) {
        for (unsigned l = 0; l <= d; ++l) {
            add(kPlPlus1, ipow(p, l) + 1);
        }
    }
    return hits;
}

std::vector<RuleHits> evaluate_new(const CensusField& cf, const std::vector<CensusRule>& rules)
{
    std::vector<RuleHits> hits;
    for (std::size_t i = kPriorRowCount; i < rules.size(); ++i) {
        hits.push_back({&rules[i], {}});
    }
    for (const ValidParams& vp : enumerate_valid_params(cf.p, cf.d, cf.q + 1)) {
        hits[new_rule_index(vp.params.theorem) - kPriorRowCount].lengths.insert(vp.length);
    }
    return hits;
}

std::set<std::uint64_t> merged(const std::vector<RuleHits>& hits)
{
    std::set<std::uint64_t> out;
    for (const RuleHits& h : hits) {
        out.insert(h.lengths.begin(), h.lengths.end());
    }
    return out;
}

void push_if_valid(std::vector<ValidParams>& out, const ConstructionParams& params, std::uint64_t p, unsigned d,
                   std::uint64_t max_length)
{
    if (hypothesis_violation(params, p, d)) {
        return;
    }
    const BigInt n = validate(params, p, d);
    if (n <= max_length) {
        out.push_back({params, n.convert_to<std::uint64_t>()});
    }
}

}  // namespace

const std::vector<CensusRule>& census_rules()
{
    static const std::vector<CensusRule> rules = build_rules();
    return rules;
}

std::vector<ValidParams> enumerate_valid_params(std::uint64_t p, unsigned d, std::uint64_t max_length)
{
    const auto q_opt = checked_pow(p, d);
    if (!q_opt) {
        throw Error(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(d));
    }
    const std::uint64_t q = *q_opt;
    std::vector<ValidParams> out;
    if (d % 2 == 0) {
        const std::uint64_t r = ipow(p, d / 2);
        const std::vector<std::uint64_t> div_q1 = divisors(q - 1);
        for (const std::uint64_t m : div_q1) {
            for (std::uint64_t t = 1; t <= t1_max_t(r, m) && t * m <= max_length; ++t) {
                push_if_valid(out, t1i(m, t), p, d, max_length);
            }
        }
        for (const std::uint64_t m : div_q1) {
            for (std::uint64_t t = 1; t <= t1_max_t(r, m) && t * m + 2 <= max_length; ++t) {
                push_if_valid(out, t1ii(m, t), p, d, max_length);
            }
        }
        for (const std::uint64_t m : div_q1) {
            for (std::uint64_t t = 2; t <= t2_max_t(r, m) && t * m + 1 <= max_length; ++t) {
                push_if_valid(out, t2(m, t), p, d, max_length);
            }
        }
        for (const Theorem theorem : {Theorem::T3i, Theorem::T3ii}) {
            const std::uint64_t extra = theorem == Theorem::T3i ? 0 : 2;
            for (const std::uint64_t m : div_q1) {
                for (const std::uint64_t s : divisors(m)) {
                    if (s % 2 != 0 || (r + 1) % s != 0) {
                        continue;
                    }
                    for (std::uint64_t t = 1; t <= t3_max_t(r, m, s) && t * m + extra <= max_length; ++t) {
                        push_if_valid(out, theorem == Theorem::T3i ? t3i(m, t, s) : t3ii(m, t, s), p, d,
                                      max_length);
                    }
                }
            }
        }
        for (std::uint64_t e = 1; e <= d / 2; ++e) {
            push_if_valid(out, t4(e), p, d, max_length);
        }
    }
    for (const std::uint64_t k : divisors(d)) {
        const std::uint64_t pk = ipow(p, k);
        for (const std::uint64_t two_t : divisors(pk - 1)) {
            if (two_t % 2 != 0) {
                continue;
            }
            for (std::uint64_t e = 0; e + 1 <= d / k; ++e) {
                push_if_valid(out, t5(k, two_t / 2, e), p, d, max_length);
            }
        }
    }
    return out;
}

std::vector<RuleHits> evaluate_rules(std::uint64_t q, RuleSource source)
{
    const CensusField cf = check_census_q(q);
    const auto& rules = census_rules();
    if (source == RuleSource::New) {
        return evaluate_new(cf, rules);
    }
    const FieldPtr f = make_field(cf.p, cf.d);
    return evaluate_prior(cf, *f, rules);
}

std::set<std::uint64_t> prior_lengths(std::uint64_t q) { return merged(evaluate_rules(q, RuleSource::Prior)); }

std::set<std::uint64_t> new_lengths(std::uint64_t q) { return merged(evaluate_rules(q, RuleSource::New)); }

CensusReport census_report(std::uint64_t q, std::uint64_t spot_check_bound)
{
    const CensusField cf = check_census_q(q);
    const FieldPtr f = make_field(cf.p, cf.d);
    const auto& rules = census_rules();

    CensusReport report;
    report.q = q;
    report.spot_check_bound = spot_check_bound;
    const std::vector<RuleHits> prior = evaluate_prior(cf, *f, rules);
    const std::vector<RuleHits> fresh = evaluate_new(cf, rules);
    for (const auto* group : {&prior, &fresh}) {
        for (const RuleHits& h : *group) {
            report.per_rule[h.rule->id] = h.lengths;
        }
    }
    report.lengths_prior = merged(prior);
    report.lengths_new = merged(fresh);
    report.lengths_union = report.lengths_prior;
    report.lengths_union.insert(report.lengths_new.begin(), report.lengths_new.end());

    if (q % 4 == 3) {
        for (const auto& [id, lengths] : report.per_rule) {
            for (const std::uint64_t n : lengths) {
                if (n % 4 == 2) {
                    throw std::logic_error("rule " + id + " claims n = " + std::to_string(n) +
                                           " = 2 (mod 4) although q = 3 (mod 4)");
                }
            }
        }
    }

    if (spot_check_bound == 0) {
        return report;
    }
    const std::vector<ValidParams> witnesses = enumerate_valid_params(cf.p, cf.d, spot_check_bound);
    for (const std::uint64_t n : report.lengths_new) {
        if (n > spot_check_bound) {
            break;
        }
        std::string last_failure = "no witness";
        for (const ValidParams& w : witnesses) {
            if (w.length != n) {
                continue;
            }
            try {
                const Construction c = construct(f, w.params);
                if (check_self_dual(c.artifact)) {
                    report.spot_checks[n] = c.artifact.label;
                    break;
                }
                last_failure = label(w.params) + " is not self-dual";
            } catch (const Error& err) {
                last_failure = err.what();
            }
        }
        if (report.spot_checks.count(n) == 0) {
            throw Error(ErrorCode::SpotCheckFailed, "n = " + std::to_string(n) + ": " + last_failure);
        }
    }
    return report;
}

}  // namespace mdsdual
