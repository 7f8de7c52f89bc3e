#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dioph/exact_arith.hpp"
#include "dioph/solver.hpp"

namespace dioph {

struct FactorizationOutOfRange : std::domain_error {
    FactorizationOutOfRange()
        : std::domain_error("d has a prime factor above 10^6 and no factorization was supplied") {}
};

// Brute-force instance for 1/a + 1/b = n/d, carrying all signed divisors
// of d^2. Complete enumeration rests on (na - d)(nb - d) = d^2.
struct OracleInstance {
    Fraction target;
    std::vector<Integer> d_squared_divisors;
};

using Factorization = std::vector<std::pair<Integer, unsigned>>;

/// Builds the instance; factors d by trial division up to 10^6 unless
/// known_factors is given. Throws FactorizationOutOfRange past the cap.
OracleInstance build_instance(const Integer& n, const Integer& d,
                              const std::optional<Factorization>& known_factors = std::nullopt);

/// All integer solutions (a, b) with a, b nonzero, via the divisor walk.
SolutionSet enumerate_all(const OracleInstance& inst);

struct CertificationReport {
    bool match;
    std::size_t closed_form_count;
    std::size_t oracle_count;
    std::vector<std::pair<Integer, Integer>> missing;  // in oracle, not in closed form
    std::vector<std::pair<Integer, Integer>> extra;    // in closed form, not in oracle
};

/// Set-equality check of the closed-form output against an independent
/// enumeration of the instance n = q+1, d = pq.
CertificationReport certify(const PrimePair& pair, const SolutionSet& closed_form);

}  // namespace dioph
