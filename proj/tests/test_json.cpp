#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "wpslab/certificate_json.hpp"

using nlohmann::json;
using wpslab::construct;
using wpslab::FamilyKind;
using wpslab::Hypersurface;
using wpslab::json_of;
using wpslab::make_document;
using wpslab::parse_document;
using wpslab::WeightSystem;

namespace {

Hypersurface hs(std::vector<long> v, long d) {
    return {WeightSystem(std::vector<mpz_class>(v.begin(), v.end())),
            mpz_class(d)};
}

void check_no_floats(const json& j) {
    if (j.is_object() || j.is_array()) {
        for (const auto& child : j) check_no_floats(child);
        return;
    }
    CHECK_FALSE(j.is_number_float());
}

}  // namespace

TEST_CASE("integers serialize as decimal strings") {
    CHECK(json_of(mpz_class(0)) == "0");
    CHECK(json_of(mpz_class(-316)) == "-316");
    CHECK(json_of(mpz_class("147565206676")) == "147565206676");
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
    CHECK(json_of(big).get<std::string>() == big.get_str());
}

TEST_CASE("rationals serialize as num/den pairs in lowest terms") {
    mpq_class q(4, 6);
    q.canonicalize();
    json j = json_of(q);
    CHECK(j["num"] == "2");
    CHECK(j["den"] == "3");

    mpq_class neg(1, -2);
    neg.canonicalize();
    json jn = json_of(neg);
    CHECK(jn["num"] == "-1");
    CHECK(jn["den"] == "2");
}

TEST_CASE("weight systems and hypersurfaces") {
    json j = json_of(hs({11, 158, 61, 85}, 316));
    CHECK(j["weights"] == json::array({"11", "158", "61", "85"}));
    CHECK(j["weights_desc"] == json::array({"158", "85", "61", "11"}));
    CHECK(j["degree"] == "316");
    CHECK(j["canonical_degree"] == "1");
}

TEST_CASE("quasi-smoothness certificates carry their method fields") {
    json gen = json_of(wpslab::quasi_smooth_general(hs({158, 85, 61, 11}, 316)));
    CHECK(gen["verdict"] == "quasi-smooth");
    CHECK(gen["method"] == "general");
    CHECK(gen["subsets_checked"] == 15);
    CHECK(gen["subsets"].is_array());
    CHECK(!gen.contains("steps"));

    json cyc = json_of(wpslab::quasi_smooth_cycle(hs({85, 61, 11, 158}, 316), 3));
    CHECK(cyc["verdict"] == "quasi-smooth");
    CHECK(cyc["method"] == "cycle");
    CHECK(cyc["cycle_length"] == 3);
    REQUIRE(cyc["steps"].size() == 4);
    CHECK(cyc["steps"][0]["kind"] == "divides");
    CHECK(cyc["steps"][0]["quotient"] == "2");
    CHECK(cyc["steps"][1]["kind"] == "congruence");
    CHECK(!cyc.contains("subsets"));

    json bad = json_of(wpslab::quasi_smooth_general(hs({1, 1, 3}, 5)));
    CHECK(bad["verdict"] == "not-quasi-smooth");
    REQUIRE(bad["failures"].size() == 1);
}

TEST_CASE("family certificates") {
    json gen = json_of(wpslab::verify_member(construct(FamilyKind::GeneralType, 3, 2)));
    CHECK(gen["member"]["kind"] == "general_type");
    CHECK(gen["member"]["y"] == "2");
    CHECK(gen["member"]["degree"] == "316");
    CHECK(gen["valid"] == true);
    CHECK(gen["volume"]["num"] == "2");
    CHECK(gen["volume"]["den"] == "57035");
    CHECK(gen["volume_closed_form"] == gen["volume"]);
    CHECK(!gen.contains("bottom_weight"));
    check_no_floats(gen);

    json fano = json_of(wpslab::verify_member(construct(FamilyKind::Fano, 3, 2)));
    CHECK(fano["member"]["kind"] == "fano");
    CHECK(fano["bottom_weight"] == "11");
    CHECK(fano["canonical_degree"] == "-1");
    CHECK(fano["valid"] == true);
    CHECK(!fano.contains("volume"));
    check_no_floats(fano);
}

TEST_CASE("search hits carry the objective value") {
    wpslab::SearchConfig c;
    c.max_weight = 2;
    c.canonical_degree_target = -1;
    auto res = wpslab::run_search(c);
    REQUIRE(!res.hits.empty());
    json mv = json_of(res.hits[0], wpslab::SearchObjective::MinVolume);
    CHECK(mv["objective_value"] == mv["volume"]);
    json bw = json_of(res.hits[0], wpslab::SearchObjective::MaxBottomWeight);
    CHECK(bw["objective_value"] == bw["bottom_weight"]);
    check_no_floats(mv);
    json counters = json_of(res.counters);
    CHECK(counters["candidates"] == 5);
}

TEST_CASE("identity checks") {
    auto checks = wpslab::verify_identities(2);
    json j = json_of(checks[0]);
    CHECK(j["name"] == "f_alternating_prefix_sum");
    CHECK(j["index"] == 0);
    CHECK(j["holds"] == true);
}

TEST_CASE("document envelope round trip") {
    json doc = make_document("construct", json{{"r", 3}, {"n", 2}},
                             json{{"degree", "316"}}, 12);
    CHECK(doc["schema_version"] == "wpslab/1");
    json back = parse_document(doc.dump());
    CHECK(back == doc);
    json pretty = parse_document(doc.dump(2));
    CHECK(pretty == doc);
}

TEST_CASE("strict envelope parsing") {
    json doc = make_document("verify", json::object(), json::object(), 1);

    json extra = doc;
    extra["note"] = "hello";
    CHECK_THROWS_AS(parse_document(extra.dump()), std::runtime_error);

    json missing = doc;
    missing.erase("timing");
    CHECK_THROWS_AS(parse_document(missing.dump()), std::runtime_error);

    json wrong = doc;
    wrong["schema_version"] = "wpslab/2";
    CHECK_THROWS_AS(parse_document(wrong.dump()), std::runtime_error);

    CHECK_THROWS_AS(parse_document("[1,2,3]"), std::runtime_error);
    CHECK_THROWS(parse_document("not json at all"));
}
