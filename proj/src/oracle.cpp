#include "dioph/oracle.hpp"

#include <algorithm>
#include <set>

namespace dioph {

namespace {

constexpr long kTrialDivisionCap = 1000000;

Factorization factor_by_trial_division(Integer d) {
    Factorization factors;
    for (Integer f = 2; f * f <= d && f <= kTrialDivisionCap; f += (f == 2) ? 1 : 2) {
        unsigned e = 0;
        while (mpz_divisible_p(d.get_mpz_t(), f.get_mpz_t())) {
            d /= f;
            ++e;
        }
        if (e > 0) factors.emplace_back(f, e);
    }
    if (d > 1) {
        if (d > kTrialDivisionCap) throw FactorizationOutOfRange{};
        factors.emplace_back(d, 1);
    }
    return factors;
}

std::vector<Integer> signed_divisors_of_square(const Factorization& factors_of_d) {
    std::vector<Integer> divisors{1};
    for (const auto& [prime, exponent] : factors_of_d) {
        std::vector<Integer> next;
        Integer power = 1;
        for (unsigned e = 0; e <= 2 * exponent; ++e) {  // exponents doubled for d^2
            for (const Integer& base : divisors) next.push_back(base * power);
            power *= prime;
        }
        divisors = std::move(next);
    }
    std::size_t positive_count = divisors.size();
    for (std::size_t i = 0; i < positive_count; ++i) divisors.push_back(-divisors[i]);
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace

OracleInstance build_instance(const Integer& n, const Integer& d,
                              const std::optional<Factorization>& known_factors) {
    if (n <= 0 || d <= 0) throw std::invalid_argument("n and d must be positive");
    Factorization factors = known_factors ? *known_factors : factor_by_trial_division(d);
    return {Fraction(n, d), signed_divisors_of_square(factors)};
}

SolutionSet enumerate_all(const OracleInstance& inst) {
    const Integer& n = inst.target.num();
    const Integer& d = inst.target.den();
    const Integer d2 = d * d;
    std::vector<Solution> found;
    for (const Integer& e : inst.d_squared_divisors) {
        // (na - d)(nb - d) = d^2 with na - d = e. Both divisibility checks
        // are made explicitly; no implication between them is assumed.
        auto a = divide_exact(d + e, n);
        if (!a) continue;
        auto b = divide_exact(d + d2 / e, n);
        if (!b) continue;
        if (*a == 0 || *b == 0) continue;
        found.push_back({*a, *b, OracleTag{e}, std::nullopt});
    }
    canonicalize(found);
    return {std::nullopt, std::move(found)};
}

CertificationReport certify(const PrimePair& pair, const SolutionSet& closed_form) {
    Factorization factors{{pair.p, 1}, {pair.q, 1}};
    if (pair.p > pair.q) std::swap(factors[0], factors[1]);
    OracleInstance inst = build_instance(pair.q_plus_1, pair.pq, factors);
    SolutionSet oracle_set = enumerate_all(inst);

    auto as_pairs = [](const SolutionSet& set) {
        std::set<std::pair<Integer, Integer>> pairs;
        for (const Solution& s : set.solutions) pairs.insert({s.a, s.b});
        return pairs;
    };
    auto lhs = as_pairs(closed_form);
    auto rhs = as_pairs(oracle_set);

    CertificationReport report;
    report.closed_form_count = lhs.size();
    report.oracle_count = rhs.size();
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                        std::back_inserter(report.missing));
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(report.extra));
    report.match = report.missing.empty() && report.extra.empty();
    return report;
}

}  // namespace dioph
