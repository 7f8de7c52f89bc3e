#include "dioph/solver.hpp"

#include <algorithm>

namespace dioph {

std::string to_string(PairError e) {
    switch (e) {
        case PairError::NotPrimeP: return "p is not prime";
        case PairError::NotPrimeQ: return "q is not prime";
        case PairError::NotDistinct: return "p and q must be distinct";
        case PairError::DivisibilityFails: return "q+1 does not divide p-1";
        case PairError::UnsupportedMagnitude: return "input exceeds the 2^64 primality bound";
    }
    return "unknown error";
}

std::variant<PrimePair, PairError> validate_pair(const Integer& p, const Integer& q) {
    try {
        if (!is_prime(p)) return PairError::NotPrimeP;
        if (!is_prime(q)) return PairError::NotPrimeQ;
    } catch (const UnsupportedMagnitude&) {
        return PairError::UnsupportedMagnitude;
    }
    if (p == q) return PairError::NotDistinct;
    PrimePair pair{p, q, q + 1, p * q, p - 1};
    if (!divide_exact(pair.p_minus_1, pair.q_plus_1)) return PairError::DivisibilityFails;
    return pair;
}

std::vector<ZetaParam> enumerate_zeta(const PrimePair& pair) {
    std::vector<ZetaParam> result;
    for (const Integer& zeta : signed_divisors_of_prime_square(pair.q)) {
        if (auto alpha = divide_exact(zeta - 1, pair.q_plus_1)) {
            result.push_back({zeta, *alpha});
        }
    }
    return result;
}

std::vector<Solution> trivial_solutions(const PrimePair& pair) {
    return {
        {pair.p, pair.pq, TrivialTag{}, Integer(1)},
        {pair.pq, pair.p, TrivialTag{}, pair.q},
    };
}

std::optional<Solution> solution_from_zeta(const PrimePair& pair, const ZetaParam& z) {
    const Integer& p = pair.p;
    const Integer& q = pair.q;
    auto a = divide_exact(z.zeta * p * p + pair.pq, pair.q_plus_1);
    if (!a) return std::nullopt;
    auto b = divide_exact(z.zeta * pair.pq + q * q, z.zeta * pair.q_plus_1);
    if (!b) return std::nullopt;
    if (*a == 0 || *b == 0) return std::nullopt;
    auto k = divide_exact(z.zeta * p + q, pair.q_plus_1);
    if (!k) return std::nullopt;
    return Solution{*a, *b, ZetaTag{z.zeta}, *k};
}

bool solution_less(const Solution& lhs, const Solution& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    return lhs.b < rhs.b;
}

void canonicalize(std::vector<Solution>& solutions) {
    std::sort(solutions.begin(), solutions.end(), solution_less);
    solutions.erase(std::unique(solutions.begin(), solutions.end(),
                                [](const Solution& x, const Solution& y) {
                                    return x.a == y.a && x.b == y.b;
                                }),
                    solutions.end());
}

SolutionSet solve(const PrimePair& pair, bool positive_only) {
    std::vector<Solution> all = trivial_solutions(pair);
    for (const ZetaParam& z : enumerate_zeta(pair)) {
        if (auto sol = solution_from_zeta(pair, z)) {
            all.push_back(*sol);
            // The second formula family is the swap of the first; p does not
            // divide the swapped a, so no k multiplier applies.
            all.push_back({sol->b, sol->a, ZetaTag{z.zeta}, std::nullopt});
        }
    }
    canonicalize(all);
    if (positive_only) {
        std::erase_if(all, [](const Solution& s) { return s.a <= 0 || s.b <= 0; });
    }
    return {pair, std::move(all)};
}

bool verify_solution(const PrimePair& pair, const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return false;
    return pair.pq * (a + b) == pair.q_plus_1 * a * b;
}

}  // namespace dioph
