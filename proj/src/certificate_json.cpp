#include "wpslab/certificate_json.hpp"

#include <stdexcept>

namespace wpslab {

using nlohmann::json;

json json_of(const mpz_class& v) { return v.get_str(); }

json json_of(const mpq_class& v) {
    return json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

namespace {

json json_of_weights(const std::vector<mpz_class>& w) {
    json arr = json::array();
    for (const mpz_class& a : w) arr.push_back(a.get_str());
    return arr;
}

json json_of_indices(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (std::size_t i : v) arr.push_back(i);
    return arr;
}

}  // namespace

json json_of(const WeightSystem& w) {
    return json{{"weights", json_of_weights(w.weights())},
                {"weights_desc", json_of_weights(w.sorted_desc())}};
}

json json_of(const Hypersurface& h) {
    json j = json_of(h.ambient);
    j["degree"] = h.degree.get_str();
    j["canonical_degree"] = canonical_degree(h).get_str();
    return j;
}

json json_of(const SubsetRecord& rec) {
    return json{{"indices", json_of_indices(rec.indices)},
                {"degree_representable", to_string(rec.degree_representable)},
                {"witness_indices", json_of_indices(rec.witness_indices)},
                {"any_witness_infeasible", rec.any_witness_infeasible},
                {"passed", rec.passed},
                {"undecided", rec.undecided}};
}

json json_of(const CycleStep& step) {
    json j{{"kind", step.is_congruence ? "congruence" : "divides"},
           {"dividend_index", step.dividend_index},
           {"divisor_index", step.divisor_index},
           {"holds", step.holds}};
    if (step.holds) j["quotient"] = step.quotient.get_str();
    return j;
}

json json_of(const QuasiSmoothCertificate& cert) {
    json j{{"verdict", to_string(cert.verdict)},
           {"method", to_string(cert.method)},
           {"failures", cert.failures}};
    if (cert.method == QsMethod::General) {
        j["degree_equals_weight"] = cert.degree_equals_weight;
        if (cert.degree_equals_weight) {
            j["degree_weight_index"] = cert.degree_weight_index;
        }
        j["subsets_checked"] = cert.subsets_checked;
        json arr = json::array();
        for (const SubsetRecord& rec : cert.subsets) arr.push_back(json_of(rec));
        j["subsets"] = arr;
    } else {
        j["cycle_length"] = cert.cycle_length;
        json arr = json::array();
        for (const CycleStep& step : cert.steps) arr.push_back(json_of(step));
        j["steps"] = arr;
    }
    return j;
}

json json_of(const FamilyMember& member) {
    return json{{"kind", to_string(member.kind)},
                {"r", member.r},
                {"n", member.n},
                {"y", member.y.get_str()},
                {"head_weights", json_of_weights(member.head_weights)},
                {"x", member.x.get_str()},
                {"tail_weights", json_of_weights(member.tail_weights)},
                {"degree", member.degree.get_str()},
                {"weights_desc",
                 json_of_weights(WeightSystem(member.all_weights()).sorted_desc())}};
}

namespace {

json json_of_checks(const std::vector<NamedCheck>& checks) {
    json arr = json::array();
    for (const NamedCheck& c : checks) {
        arr.push_back(json{{"name", c.name}, {"holds", c.holds}});
    }
    return arr;
}

}  // namespace

json json_of(const FamilyCertificate& cert) {
    json j{{"member", json_of(cert.member)},
           {"identity_checks", json_of_checks(cert.identity_checks)},
           {"space_well_formed", cert.space_well_formed},
           {"hypersurface_well_formed", cert.surface_well_formed},
           {"quasi_smooth", json_of(cert.quasi_smooth)},
           {"canonical_degree", cert.canonical_degree.get_str()},
           {"canonical_degree_ok", cert.canonical_degree_ok},
           {"bound_checks", json_of_checks(cert.bound_checks)},
           {"valid", cert.valid()}};
    if (cert.volume) j["volume"] = json_of(*cert.volume);
    if (cert.volume_closed_form) {
        j["volume_closed_form"] = json_of(*cert.volume_closed_form);
    }
    if (cert.bottom_weight) j["bottom_weight"] = cert.bottom_weight->get_str();
    return j;
}

json json_of(const SearchHit& hit, SearchObjective objective) {
    json j{{"weights_desc", json_of_weights(hit.hypersurface.ambient.weights())},
           {"degree", hit.hypersurface.degree.get_str()},
           {"volume", json_of(hit.volume)},
           {"bottom_weight", hit.bottom_weight.get_str()},
           {"certificate", json_of(hit.certificate)}};
    j["objective_value"] = objective == SearchObjective::MinVolume
                               ? json_of(hit.volume)
                               : json(hit.bottom_weight.get_str());
    return j;
}

json json_of(const SearchCounters& counters) {
    return json{{"candidates", counters.candidates},
                {"not_space_well_formed", counters.not_space_well_formed},
                {"not_hypersurface_well_formed",
                 counters.not_hypersurface_well_formed},
                {"not_quasi_smooth", counters.not_quasi_smooth},
                {"undecided", counters.undecided},
                {"accepted", counters.accepted}};
}

json json_of(const IdentityCheck& check) {
    return json{{"name", check.name},
                {"index", check.index},
                {"holds", check.holds}};
}

json make_document(std::string command, json inputs, json results,
                   long long wall_ms) {
    return json{{"schema_version", "wpslab/1"},
                {"command", std::move(command)},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"timing", json{{"wall_ms", wall_ms}}}};
}

json parse_document(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.is_object()) throw std::runtime_error("document must be an object");
    static const char* const required[] = {"schema_version", "command", "inputs",
                                           "results", "timing"};
    for (const char* key : required) {
        if (!doc.contains(key)) {
            throw std::runtime_error(std::string("missing field ") + key);
        }
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const char* key : required) {
            if (it.key() == key) known = true;
        }
        if (!known) throw std::runtime_error("unknown field " + it.key());
    }
    if (doc["schema_version"] != "wpslab/1") {
        throw std::runtime_error("unsupported schema version");
    }
    return doc;
}

}  // namespace wpslab
