#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "wpslab/search.hpp"

using wpslab::enumerate_candidates;
using wpslab::Hypersurface;
using wpslab::QsVerdict;
using wpslab::run_search;
using wpslab::run_search_parallel;
using wpslab::SearchConfig;
using wpslab::SearchObjective;
using wpslab::SearchResult;

namespace {

std::vector<std::vector<mpz_class>> collect_tuples(const SearchConfig& c) {
    std::vector<std::vector<mpz_class>> out;
    enumerate_candidates(c, [&](const Hypersurface& h) {
        out.push_back(h.ambient.weights());
    });
    return out;
}

// rank every accepted candidate without any top-k machinery
std::vector<std::pair<mpq_class, std::vector<mpz_class>>> oracle_ranking(
    const SearchConfig& c) {
    std::vector<std::pair<mpq_class, std::vector<mpz_class>>> all;
    enumerate_candidates(c, [&](const Hypersurface& h) {
        if (!wpslab::wps_well_formed(h.ambient)) return;
        if (!wpslab::hypersurface_well_formed(h)) return;
        if (wpslab::quasi_smooth_general(h).verdict != QsVerdict::QuasiSmooth) {
            return;
        }
        mpq_class key = c.objective == SearchObjective::MinVolume
                            ? wpslab::volume_of_twist(h, 1)
                            : mpq_class(-h.ambient.min_weight());
        all.emplace_back(key, h.ambient.weights());
    });
    std::sort(all.begin(), all.end());
    std::set<mpq_class> keys;
    std::vector<std::pair<mpq_class, std::vector<mpz_class>>> kept;
    for (auto& entry : all) {
        keys.insert(entry.first);
        if (keys.size() > c.top_k) break;
        kept.push_back(std::move(entry));
    }
    return kept;
}

}  // namespace

TEST_CASE("single candidate searches") {
    SearchConfig c;
    c.dimension = 2;
    c.max_weight = 1;
    c.canonical_degree_target = -1;
    SearchResult res = run_search(c);
    CHECK(res.counters.candidates == 1);
    CHECK(res.counters.accepted == 1);
    REQUIRE(res.hits.size() == 1);
    CHECK(res.hits[0].hypersurface.ambient.weights() ==
          std::vector<mpz_class>{1, 1, 1, 1});
    CHECK(res.hits[0].hypersurface.degree == 3);
    CHECK(res.hits[0].volume == 3);
    CHECK(res.hits[0].bottom_weight == 1);

    c.canonical_degree_target = 1;
    SearchResult quintic = run_search(c);
    REQUIRE(quintic.hits.size() == 1);
    CHECK(quintic.hits[0].hypersurface.degree == 5);
    CHECK(quintic.hits[0].volume == 5);
}

TEST_CASE("enumeration order and contents at max weight 2") {
    SearchConfig c;
    c.max_weight = 2;
    c.canonical_degree_target = -1;
    auto tuples = collect_tuples(c);
    std::vector<std::vector<mpz_class>> expect = {
        {2, 2, 2, 2}, {2, 2, 2, 1}, {2, 2, 1, 1}, {2, 1, 1, 1}, {1, 1, 1, 1}};
    CHECK(tuples == expect);
}

TEST_CASE("rejection counters account for every candidate") {
    SearchConfig c;
    c.max_weight = 2;
    c.canonical_degree_target = -1;
    SearchResult res = run_search(c);
    CHECK(res.counters.candidates == 5);
    // (2,2,2,2) and (2,2,2,1) lose a coordinate to a common factor
    CHECK(res.counters.not_space_well_formed == 2);
    CHECK(res.counters.not_hypersurface_well_formed == 1); // (2,2,1,1), d = 5
    CHECK(res.counters.not_quasi_smooth == 0);
    CHECK(res.counters.undecided == 0);
    CHECK(res.counters.accepted == 2);
    REQUIRE(res.hits.size() == 2);
    // minimal volume first: 4/2 beats 3/1
    CHECK(res.hits[0].hypersurface.ambient.weights() ==
          std::vector<mpz_class>{2, 1, 1, 1});
    CHECK(res.hits[0].volume == 2);
    CHECK(res.hits[1].volume == 3);
}

TEST_CASE("ranking agrees with the exhaustive oracle") {
    for (SearchObjective objective :
         {SearchObjective::MinVolume, SearchObjective::MaxBottomWeight}) {
        for (int target : {1, -1}) {
            SearchConfig c;
            c.dimension = 2;
            c.max_weight = 4;
            c.canonical_degree_target = target;
            c.objective = objective;
            c.top_k = 3;
            auto expect = oracle_ranking(c);
            SearchResult res = run_search(c);
            REQUIRE(res.hits.size() == expect.size());
            for (std::size_t i = 0; i < expect.size(); ++i) {
                CAPTURE(i);
                CHECK(res.hits[i].hypersurface.ambient.weights() ==
                      expect[i].second);
            }
        }
    }
}

TEST_CASE("hits revalidate from scratch") {
    SearchConfig c;
    c.max_weight = 6;
    c.canonical_degree_target = -1;
    c.objective = SearchObjective::MaxBottomWeight;
    SearchResult res = run_search(c);
    REQUIRE(!res.hits.empty());
    for (const auto& hit : res.hits) {
        const Hypersurface& h = hit.hypersurface;
        CHECK(wpslab::wps_well_formed(h.ambient));
        CHECK(wpslab::hypersurface_well_formed(h));
        CHECK(wpslab::quasi_smooth_general(h).verdict ==
              QsVerdict::QuasiSmooth);
        CHECK(wpslab::canonical_degree(h) == -1);
        CHECK(hit.volume == wpslab::volume_of_twist(h, 1));
        CHECK(hit.bottom_weight == h.ambient.min_weight());
        CHECK(hit.certificate.verdict == QsVerdict::QuasiSmooth);
    }
    // descending bottom weights across the ranked list
    for (std::size_t i = 1; i < res.hits.size(); ++i) {
        CHECK(res.hits[i - 1].bottom_weight >= res.hits[i].bottom_weight);
    }
}

TEST_CASE("shards partition the candidate set") {
    SearchConfig base;
    base.max_weight = 10;
    auto full = collect_tuples(base);
    CHECK(full.size() == 715);  // multisets of size 4 from 10 values

    std::vector<std::vector<mpz_class>> merged;
    for (unsigned s = 0; s < 4; ++s) {
        SearchConfig shard = base;
        shard.shard_index = s;
        shard.shard_count = 4;
        auto part = collect_tuples(shard);
        merged.insert(merged.end(), part.begin(), part.end());
    }
    CHECK(merged.size() == full.size());
    auto sorter = [](auto a) {
        std::sort(a.begin(), a.end());
        return a;
    };
    CHECK(sorter(merged) == sorter(full));
}

TEST_CASE("parallel run equals the serial run") {
    SearchConfig c;
    c.max_weight = 10;
    c.canonical_degree_target = -1;
    c.top_k = 4;
    SearchResult serial = run_search(c);
    SearchResult parallel = run_search_parallel(c, 4);
    CHECK(parallel.counters.candidates == serial.counters.candidates);
    CHECK(parallel.counters.accepted == serial.counters.accepted);
    CHECK(parallel.counters.not_quasi_smooth == serial.counters.not_quasi_smooth);
    REQUIRE(parallel.hits.size() == serial.hits.size());
    for (std::size_t i = 0; i < serial.hits.size(); ++i) {
        CHECK(parallel.hits[i].hypersurface.ambient.weights() ==
              serial.hits[i].hypersurface.ambient.weights());
        CHECK(parallel.hits[i].volume == serial.hits[i].volume);
    }
}

TEST_CASE("repeat runs are deterministic") {
    SearchConfig c;
    c.max_weight = 7;
    c.top_k = 2;
    SearchResult a = run_search(c);
    SearchResult b = run_search(c);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
        CHECK(a.hits[i].hypersurface.ambient.weights() ==
              b.hits[i].hypersurface.ambient.weights());
    }
}

TEST_CASE("configuration validation") {
    SearchConfig c;
    c.dimension = 4;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.dimension = 2;
    c.max_weight = 201;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.dimension = 3;
    c.max_weight = 61;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.max_weight = 10;
    c.canonical_degree_target = 0;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.canonical_degree_target = 1;
    c.top_k = 0;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.top_k = 1;
    c.shard_index = 3;
    c.shard_count = 2;
    CHECK_THROWS_AS(run_search(c), std::invalid_argument);
    c.shard_index = 0;
    c.shard_count = 2;
    CHECK_THROWS_AS(run_search_parallel(c, 2), std::invalid_argument);
}
