#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dioph/exact_arith.hpp"

namespace dioph {

// Validated theorem instance: distinct primes p, q with q+1 | p-1.
struct PrimePair {
    Integer p;
    Integer q;
    Integer q_plus_1;
    Integer pq;
    Integer p_minus_1;
};

enum class PairError {
    NotPrimeP,
    NotPrimeQ,
    NotDistinct,
    DivisibilityFails,
    UnsupportedMagnitude,
};

std::string to_string(PairError e);

// Admissible zeta with its congruence witness alpha = (zeta - 1)/(q+1).
struct ZetaParam {
    Integer zeta;
    Integer alpha;
};

struct TrivialTag {};
struct ZetaTag {
    Integer zeta;
};
struct OracleTag {
    Integer divisor;
};
using Provenance = std::variant<TrivialTag, ZetaTag, OracleTag>;

struct Solution {
    Integer a;
    Integer b;
    Provenance provenance;
    std::optional<Integer> k;  // multiplier with a = p*k, when p | a
};

struct SolutionSet {
    std::optional<PrimePair> pair;  // absent for oracle runs outside the (q+1)/pq family
    std::vector<Solution> solutions;  // sorted by (a, b), deduplicated
};

std::variant<PrimePair, PairError> validate_pair(const Integer& p, const Integer& q);

/// All zeta with zeta | q^2 and zeta == 1 (mod q+1), by filtering the signed
/// divisors of q^2. Always {1, -q, q^2} for a valid pair.
std::vector<ZetaParam> enumerate_zeta(const PrimePair& pair);

/// The pairs (p, pq) and (pq, p).
std::vector<Solution> trivial_solutions(const PrimePair& pair);

/// a = (zeta*p^2 + pq)/(q+1), b = (zeta*pq + q^2)/(zeta*(q+1)).
/// nullopt if any division is inexact or a component is zero.
std::optional<Solution> solution_from_zeta(const PrimePair& pair, const ZetaParam& z);

/// Complete solution set: trivial, zeta-derived, and their swaps.
SolutionSet solve(const PrimePair& pair, bool positive_only);

/// Exact identity pq*(a+b) = (q+1)*a*b; false for a = 0 or b = 0.
bool verify_solution(const PrimePair& pair, const Integer& a, const Integer& b);

// Ordering and equality on the (a, b) component, used for canonical sets.
bool solution_less(const Solution& lhs, const Solution& rhs);

/// Canonical-sorts and removes duplicate (a, b) pairs in place.
void canonicalize(std::vector<Solution>& solutions);

}  // namespace dioph
