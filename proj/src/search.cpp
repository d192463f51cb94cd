#include "wpslab/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace wpslab {

const char* to_string(SearchObjective o) {
    switch (o) {
        case SearchObjective::MinVolume: return "min_volume";
        case SearchObjective::MaxBottomWeight: return "max_bottom_weight";
    }
    return "unknown";
}

namespace {

void validate(const SearchConfig& c, bool enforce_budget) {
    if (c.dimension != 2 && c.dimension != 3) {
        throw std::invalid_argument("dimension must be 2 or 3");
    }
    if (c.max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    if (c.canonical_degree_target != 1 && c.canonical_degree_target != -1) {
        throw std::invalid_argument("canonical degree target must be +1 or -1");
    }
    if (c.shard_count < 1 || c.shard_index >= c.shard_count) {
        throw std::invalid_argument("bad shard partition");
    }
    if (c.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
    if (enforce_budget) {
        unsigned cap = c.dimension == 2 ? 200 : 60;
        if (c.max_weight > cap) {
            throw std::invalid_argument("max_weight beyond the search budget");
        }
    }
}

std::uint64_t tuple_hash(const std::vector<unsigned>& w) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned v : w) {
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (v >> (8 * byte)) & 0xffU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

}  // namespace

void enumerate_candidates(const SearchConfig& config,
                          const std::function<void(const Hypersurface&)>& yield) {
    validate(config, false);
    const std::size_t count = config.dimension + 2;
    std::vector<unsigned> tuple(count);

    auto emit = [&]() {
        if (config.shard_count > 1 &&
            tuple_hash(tuple) % config.shard_count != config.shard_index) {
            return;
        }
        long sum = 0;
        for (unsigned v : tuple) sum += v;
        long degree = sum + config.canonical_degree_target;
        if (degree < 1) return;
        std::vector<mpz_class> weights(tuple.begin(), tuple.end());
        yield(Hypersurface(WeightSystem(std::move(weights)), mpz_class(degree)));
    };

    // descending tuples, visited in descending lexicographic order
    auto recurse = [&](auto&& self, std::size_t pos, unsigned limit) -> void {
        if (pos == count) {
            emit();
            return;
        }
        for (unsigned v = limit; v >= 1; --v) {
            tuple[pos] = v;
            self(self, pos + 1, v);
        }
    };
    recurse(recurse, 0, config.max_weight);
}

namespace {

// rank key: strictly increasing as the hit gets worse
mpq_class rank_key(const SearchConfig& config, const SearchHit& hit) {
    if (config.objective == SearchObjective::MinVolume) return hit.volume;
    return mpq_class(-hit.bottom_weight);
}

class TopBuckets {
public:
    TopBuckets(const SearchConfig& config) : config_(config) {}

    void add(SearchHit hit) {
        mpq_class key = rank_key(config_, hit);
        if (buckets_.size() >= config_.top_k) {
            auto worst = std::prev(buckets_.end());
            if (key > worst->first) return;
            if (key < worst->first &&
                buckets_.find(key) == buckets_.end()) {
                buckets_.erase(worst);
            }
        }
        buckets_[std::move(key)].push_back(std::move(hit));
    }

    std::vector<SearchHit> ranked() && {
        std::vector<SearchHit> out;
        for (auto& [key, hits] : buckets_) {
            std::sort(hits.begin(), hits.end(),
                      [](const SearchHit& a, const SearchHit& b) {
                          return a.hypersurface.ambient.weights() <
                                 b.hypersurface.ambient.weights();
                      });
            for (SearchHit& h : hits) out.push_back(std::move(h));
        }
        return out;
    }

private:
    const SearchConfig& config_;
    std::map<mpq_class, std::vector<SearchHit>> buckets_;
};

void scan(const SearchConfig& config, TopBuckets& top, SearchCounters& counters) {
    enumerate_candidates(config, [&](const Hypersurface& h) {
        ++counters.candidates;
        if (!wps_well_formed(h.ambient)) {
            ++counters.not_space_well_formed;
            return;
        }
        if (!hypersurface_well_formed(h)) {
            ++counters.not_hypersurface_well_formed;
            return;
        }
        QuasiSmoothCertificate cert =
            quasi_smooth_general(h, config.membership_guard);
        if (cert.verdict == QsVerdict::NotQuasiSmooth) {
            ++counters.not_quasi_smooth;
            return;
        }
        if (cert.verdict == QsVerdict::Undecided) {
            ++counters.undecided;
            return;
        }
        ++counters.accepted;
        SearchHit hit{h, volume_of_twist(h, 1), h.ambient.min_weight(),
                      std::move(cert)};
        top.add(std::move(hit));
    });
}

}  // namespace

SearchResult run_search(const SearchConfig& config) {
    validate(config, true);
    TopBuckets top(config);
    SearchResult result;
    scan(config, top, result.counters);
    result.hits = std::move(top).ranked();
    return result;
}

SearchResult run_search_parallel(const SearchConfig& config,
                                 unsigned shard_count) {
    if (shard_count < 1) throw std::invalid_argument("need at least one shard");
    validate(config, true);
    if (config.shard_count != 1) {
        throw std::invalid_argument("parallel run expects an unsharded config");
    }

    std::vector<SearchResult> partials(shard_count);
    std::vector<std::thread> workers;
    workers.reserve(shard_count);
    for (unsigned s = 0; s < shard_count; ++s) {
        workers.emplace_back([&, s]() {
            SearchConfig shard = config;
            shard.shard_index = s;
            shard.shard_count = shard_count;
            partials[s] = run_search(shard);
        });
    }
    for (std::thread& t : workers) t.join();

    TopBuckets top(config);
    SearchResult merged;
    for (SearchResult& part : partials) {
        merged.counters.candidates += part.counters.candidates;
        merged.counters.not_space_well_formed += part.counters.not_space_well_formed;
        merged.counters.not_hypersurface_well_formed +=
            part.counters.not_hypersurface_well_formed;
        merged.counters.not_quasi_smooth += part.counters.not_quasi_smooth;
        merged.counters.undecided += part.counters.undecided;
        merged.counters.accepted += part.counters.accepted;
        for (SearchHit& hit : part.hits) top.add(std::move(hit));
    }
    merged.hits = std::move(top).ranked();
    return merged;
}

}  // namespace wpslab
