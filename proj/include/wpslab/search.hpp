#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "wpslab/quasismooth.hpp"
#include "wpslab/weight_system.hpp"

namespace wpslab {

enum class SearchObjective { MinVolume, MaxBottomWeight };

const char* to_string(SearchObjective o);

struct SearchConfig {
    unsigned dimension = 2;            // 2 or 3
    unsigned max_weight = 10;          // B: every weight lies in 1..B
    int canonical_degree_target = 1;   // +1 or -1; d = sum(weights) + target
    SearchObjective objective = SearchObjective::MinVolume;
    MembershipGuard membership_guard;
    unsigned shard_index = 0;          // this run handles candidates whose
    unsigned shard_count = 1;          // tuple hash lands in its shard
    std::size_t top_k = 10;            // distinct objective values to keep
};

struct SearchHit {
    Hypersurface hypersurface;           // weights descending
    mpq_class volume;                    // d / prod(a_i), the |O(1)| volume
    mpz_class bottom_weight;             // min weight
    QuasiSmoothCertificate certificate;  // general method
};

struct SearchCounters {
    std::uint64_t candidates = 0;
    std::uint64_t not_space_well_formed = 0;
    std::uint64_t not_hypersurface_well_formed = 0;
    std::uint64_t not_quasi_smooth = 0;
    std::uint64_t undecided = 0;
    std::uint64_t accepted = 0;
};

struct SearchResult {
    std::vector<SearchHit> hits;  // ranked best-first; ties by ascending
                                  // lexicographic descending-weight tuple
    SearchCounters counters;
};

/// Feeds every candidate in this shard to the callback: each multiset of
/// dimension+2 weights with entries in 1..max_weight, visited as descending
/// tuples in descending lexicographic order, degree = sum + target (kept
/// only when >= 1). Sharding hashes the weight tuple.
void enumerate_candidates(const SearchConfig& config,
                          const std::function<void(const Hypersurface&)>& yield);

/// Filters candidates through both well-formedness checks and the general
/// quasi-smoothness criterion, then ranks by the objective (min volume
/// ascending / bottom weight descending) and returns every hit whose
/// objective value is among the best top_k distinct values.
/// Budget guard: max_weight <= 200 for dimension 2, <= 60 for dimension 3.
SearchResult run_search(const SearchConfig& config);

/// Runs shard_count shards of the config on worker threads and merges them;
/// equivalent to the single run_search with shard_count = 1.
SearchResult run_search_parallel(const SearchConfig& config, unsigned shard_count);

}  // namespace wpslab
