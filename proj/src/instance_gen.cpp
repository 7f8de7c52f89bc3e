#include "dioph/instance_gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace dioph {

std::vector<PrimePair> find_pairs(const SearchQuery& query) {
    if (!is_prime(query.q)) throw NotPrime("q is not prime");
    if (query.p_min < 2 || query.p_min > query.p_max || query.limit < 1) {
        throw std::invalid_argument("invalid search range");
    }
    const Integer step = query.q + 1;
    // First progression member 1 + m*(q+1) at or above p_min.
    Integer m = (query.p_min - 2) / step + 1;
    if (m < 1) m = 1;
    std::vector<PrimePair> pairs;
    for (Integer p = 1 + m * step; p <= query.p_max && pairs.size() < query.limit; p += step) {
        if (p == query.q || !is_prime(p)) continue;
        auto result = validate_pair(p, query.q);
        pairs.push_back(std::get<PrimePair>(result));
    }
    return pairs;
}

namespace {

// Fixed certification corpus. Three hand-picked seeds, then for each decade
// band of p and each small q, the first few pairs in the band, keeping
// pq <= 10^9. Fully deterministic, so failures reproduce across runs.
std::vector<PrimePair> build_full_corpus() {
    const Integer kPqCap = 1000000000;
    std::vector<PrimePair> list;
    std::set<std::pair<Integer, Integer>> seen;
    auto add = [&](const PrimePair& pair) {
        if (seen.insert({pair.p, pair.q}).second) list.push_back(pair);
    };
    for (auto [p, q] : {std::pair<int, int>{7, 2}, {5, 3}, {1009, 2}}) {
        add(std::get<PrimePair>(validate_pair(p, q)));
    }
    const Integer qs[] = {2, 3, 5, 7, 11, 13};
    std::vector<std::vector<PrimePair>> groups;
    for (Integer band = 10; band <= 100000000; band *= 10) {
        for (const Integer& q : qs) {
            Integer p_max = std::min(Integer(band * 10 - 1), Integer(kPqCap / q));
            if (p_max < band) continue;
            groups.push_back(find_pairs({q, band, p_max, 5}));
        }
    }
    // Emit round-robin across the (band, q) groups so every prefix of the
    // corpus already spans small through large pq.
    for (std::size_t round = 0; round < 5; ++round) {
        for (const auto& group : groups) {
            if (round < group.size()) add(group[round]);
        }
    }
    return list;
}

}  // namespace

std::vector<PrimePair> corpus(std::size_t seed_count) {
    if (seed_count < 1) throw std::invalid_argument("seed_count must be at least 1");
    static const std::vector<PrimePair> full = build_full_corpus();
    if (seed_count > full.size()) {
        throw std::out_of_range("corpus holds " + std::to_string(full.size()) + " pairs");
    }
    return {full.begin(), full.begin() + static_cast<std::ptrdiff_t>(seed_count)};
}

}  // namespace dioph
