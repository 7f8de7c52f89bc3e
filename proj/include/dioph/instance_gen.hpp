#pragma once

#include <cstddef>
#include <vector>

#include "dioph/exact_arith.hpp"
#include "dioph/solver.hpp"

namespace dioph {

struct SearchQuery {
    Integer q;      // prime
    Integer p_min;  // >= 2
    Integer p_max;
    std::size_t limit = 1;
};

/// Primes p in [p_min, p_max] with p == 1 (mod q+1) and p != q, ascending,
/// at most query.limit of them. Scans the arithmetic progression only.
/// Throws NotPrime when q is not prime.
std::vector<PrimePair> find_pairs(const SearchQuery& query);

/// Fixed deterministic pair corpus for certification, ordered from small
/// (pq < 100) through large (pq near 10^9) instances. Prefix-stable:
/// corpus(n) is always the first n entries of corpus(m) for n <= m.
/// Throws std::invalid_argument when seed_count = 0.
std::vector<PrimePair> corpus(std::size_t seed_count);

}  // namespace dioph
