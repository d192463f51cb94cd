#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpslab/certificate_json.hpp"
#include "wpslab/families.hpp"
#include "wpslab/polyseq.hpp"
#include "wpslab/search.hpp"
#include "wpslab/sections.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kUndecided = 3;

class Stopwatch {
public:
    long long ms() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

struct Output {
    bool json_mode = false;
    std::string out_path;

    void deliver(const json& doc, const std::string& human) const {
        if (!out_path.empty()) {
            std::ofstream file(out_path);
            file << doc.dump(2) << "\n";
        }
        if (json_mode) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << human;
        }
    }
};

std::vector<mpz_class> parse_weights(const std::string& csv) {
    std::vector<mpz_class> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty weight entry");
        out.emplace_back(token);
    }
    if (out.empty()) throw std::invalid_argument("no weights given");
    return out;
}

std::string display_hypersurface(const wpslab::Hypersurface& h) {
    std::vector<mpz_class> desc = h.ambient.sorted_desc();
    std::string s = "X_" + h.degree.get_str() + " ⊂ P^" +
                    std::to_string(desc.size() - 1) + "(";
    for (std::size_t i = 0; i < desc.size(); ++i) {
        if (i) s += ",";
        s += desc[i].get_str();
    }
    return s + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_sylvester(unsigned count, const Output& out) {
    Stopwatch timer;
    json values = json::array();
    std::string human;
    for (unsigned i = 0; i < count; ++i) {
        mpz_class c = wpslab::sylvester(i);
        values.push_back(c.get_str());
        if (i) human += ", ";
        human += c.get_str();
    }
    json doc = wpslab::make_document("sylvester", json{{"count", count}},
                                     json{{"values", values}}, timer.ms());
    out.deliver(doc, human + "\n");
    return kOk;
}

int cmd_poly(const std::string& kind_name, unsigned index, bool has_eval,
             const std::string& eval_at, const Output& out) {
    static const std::map<std::string, wpslab::PolySequenceKind> kinds{
        {"f", wpslab::PolySequenceKind::F}, {"e", wpslab::PolySequenceKind::E},
        {"b", wpslab::PolySequenceKind::B}, {"z", wpslab::PolySequenceKind::Z},
        {"d", wpslab::PolySequenceKind::D},
        {"dtilde", wpslab::PolySequenceKind::DTilde}};
    auto it = kinds.find(kind_name);
    if (it == kinds.end()) {
        throw std::invalid_argument("unknown sequence kind " + kind_name);
    }
    Stopwatch timer;
    wpslab::IntPoly p = wpslab::poly_sequence(it->second, index);
    json coeffs = json::array();
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(c.get_str());
    json inputs{{"kind", kind_name}, {"index", index}};
    json results{{"display", p.to_string()},
                 {"degree", p.degree()},
                 {"coefficients_ascending", coeffs}};
    std::string human =
        kind_name + "_" + std::to_string(index) + " = " + p.to_string() + "\n";
    if (has_eval) {
        mpz_class y0(eval_at);
        mpz_class value = wpslab::poly_eval(p, y0);
        inputs["eval_at"] = y0.get_str();
        results["value"] = value.get_str();
        human += "value at y=" + y0.get_str() + ": " + value.get_str() + "\n";
    }
    json doc = wpslab::make_document("poly", inputs, results, timer.ms());
    out.deliver(doc, human);
    return kOk;
}

wpslab::FamilyKind parse_family(const std::string& name) {
    if (name == "general" || name == "general_type" || name == "general-type") {
        return wpslab::FamilyKind::GeneralType;
    }
    if (name == "general_r3" || name == "general-r3" ||
        name == "general_type_r3") {
        return wpslab::FamilyKind::GeneralTypeR3;
    }
    if (name == "fano") return wpslab::FamilyKind::Fano;
    throw std::invalid_argument("unknown family " + name);
}

int cmd_construct(const std::string& family, unsigned r, unsigned n,
                  const Output& out) {
    Stopwatch timer;
    wpslab::FamilyKind kind = parse_family(family);
    wpslab::FamilyMember member = wpslab::construct(kind, r, n);
    wpslab::FamilyCertificate cert = wpslab::verify_member(member);

    json doc = wpslab::make_document(
        "construct",
        json{{"family", to_string(kind)}, {"r", r}, {"n", n}},
        json{{"certificate", wpslab::json_of(cert)}}, timer.ms());

    std::size_t checks = cert.identity_checks.size() + cert.bound_checks.size();
    std::size_t held = 0;
    for (const auto& c : cert.identity_checks) held += c.holds;
    for (const auto& c : cert.bound_checks) held += c.holds;

    std::string human = display_hypersurface(member.hypersurface()) + "\n";
    human += "kind " + std::string(to_string(kind)) + "  r=" +
             std::to_string(r) + " n=" + std::to_string(n) +
             "  y=" + member.y.get_str() + " x=" + member.x.get_str() + "\n";
    human += "canonical degree: " + cert.canonical_degree.get_str() + "\n";
    if (cert.volume) {
        human += "volume: " + cert.volume->get_str() + "\n";
    }
    if (cert.bottom_weight) {
        human += "bottom weight: " + cert.bottom_weight->get_str() + "\n";
    }
    human += "well-formed: space " + yesno(cert.space_well_formed) +
             ", hypersurface " + yesno(cert.surface_well_formed) + "\n";
    human += "quasi-smooth (cycle): " +
             std::string(to_string(cert.quasi_smooth.verdict)) + "\n";
    human += "checks: " + std::to_string(held) + "/" + std::to_string(checks) +
             " passed\n";
    human += "valid: " + yesno(cert.valid()) + "\n";
    out.deliver(doc, human);
    return cert.valid() ? kOk : kFailed;
}

int cmd_verify(const std::string& weights_csv, const std::string& degree_str,
               const std::string& method, unsigned r, bool r_given,
               const Output& out) {
    Stopwatch timer;
    wpslab::Hypersurface h(wpslab::WeightSystem(parse_weights(weights_csv)),
                           mpz_class(degree_str));

    wpslab::QuasiSmoothCertificate cert;
    if (method == "general") {
        cert = wpslab::quasi_smooth_general(h);
    } else if (method == "cycle") {
        if (!r_given) {
            throw std::invalid_argument("cycle method needs --r");
        }
        cert = wpslab::quasi_smooth_cycle(h, r);
    } else {
        throw std::invalid_argument("method must be general or cycle");
    }

    bool space_wf = wpslab::wps_well_formed(h.ambient);
    bool hyp_wf = wpslab::hypersurface_well_formed(h);
    mpz_class canon = wpslab::canonical_degree(h);

    json results{{"space_well_formed", space_wf},
                 {"hypersurface_well_formed", hyp_wf},
                 {"canonical_degree", canon.get_str()},
                 {"quasi_smooth", wpslab::json_of(cert)}};
    std::string human = display_hypersurface(h) + "\n";
    human += "space well-formed: " + yesno(space_wf) + "\n";
    human += "hypersurface well-formed: " + yesno(hyp_wf) + "\n";
    human += "canonical degree: " + canon.get_str() + "\n";
    if (canon == 1 || canon == -1) {
        mpq_class vol = wpslab::volume_of_twist(h, 1);
        results["volume"] = wpslab::json_of(vol);
        human += "volume: " + vol.get_str() + "\n";
    }
    human += "quasi-smooth (" + method + "): " +
             std::string(to_string(cert.verdict)) + "\n";
    for (const std::string& f : cert.failures) human += "  " + f + "\n";

    json inputs{{"weights", weights_csv}, {"degree", degree_str},
                {"method", method}};
    if (r_given) inputs["r"] = r;
    json doc =
        wpslab::make_document("verify", inputs, results, timer.ms());
    out.deliver(doc, human);
    switch (cert.verdict) {
        case wpslab::QsVerdict::QuasiSmooth: return kOk;
        case wpslab::QsVerdict::NotQuasiSmooth: return kFailed;
        case wpslab::QsVerdict::Undecided: return kUndecided;
    }
    return kUsage;
}

int cmd_hilbert(const std::string& weights_csv, const std::string& degree_str,
                unsigned long max_m, const Output& out) {
    Stopwatch timer;
    wpslab::Hypersurface h(wpslab::WeightSystem(parse_weights(weights_csv)),
                           mpz_class(degree_str));
    std::vector<mpz_class> counts = wpslab::section_counts(h, max_m);

    json arr = json::array();
    for (const mpz_class& c : counts) arr.push_back(c.get_str());
    json results{{"counts", arr}};

    std::string human = display_hypersurface(h) + "\n";
    human += "h^0(m) for m = 0.." + std::to_string(max_m) + ":";
    for (const mpz_class& c : counts) human += " " + c.get_str();
    human += "\n";

    if (wpslab::canonical_degree(h) == 1 && max_m >= 1) {
        mpq_class est = wpslab::volume_limit_estimate(h, max_m);
        results["estimate"] = wpslab::json_of(est);
        results["estimate_decimal"] = est.get_d();
        results["estimate_decimal_precision"] = 17;
        human += "volume estimate at m=" + std::to_string(max_m) + ": " +
                 est.get_str() + "\n";
    }

    json doc = wpslab::make_document(
        "hilbert",
        json{{"weights", weights_csv}, {"degree", degree_str},
             {"max_m", max_m}},
        results, timer.ms());
    out.deliver(doc, human);
    return kOk;
}

int cmd_search(unsigned dimension, unsigned max_weight, int target,
               const std::string& objective_name, std::size_t top_k,
               unsigned shard_index, unsigned shard_count, unsigned shards,
               const Output& out) {
    Stopwatch timer;
    wpslab::SearchConfig config;
    config.dimension = dimension;
    config.max_weight = max_weight;
    config.canonical_degree_target = target;
    if (objective_name == "min-volume" || objective_name == "min_volume") {
        config.objective = wpslab::SearchObjective::MinVolume;
    } else if (objective_name == "max-bottom-weight" ||
               objective_name == "max_bottom_weight") {
        config.objective = wpslab::SearchObjective::MaxBottomWeight;
    } else {
        throw std::invalid_argument("unknown objective " + objective_name);
    }
    config.top_k = top_k;
    config.shard_index = shard_index;
    config.shard_count = shard_count;

    wpslab::SearchResult result = shards > 1
                                      ? wpslab::run_search_parallel(config, shards)
                                      : wpslab::run_search(config);

    json hits = json::array();
    for (const wpslab::SearchHit& hit : result.hits) {
        hits.push_back(wpslab::json_of(hit, config.objective));
    }
    json results{{"hits", hits}, {"counters", wpslab::json_of(result.counters)}};
    std::string human;
    if (!result.hits.empty()) {
        const wpslab::SearchHit& best = result.hits.front();
        if (config.objective == wpslab::SearchObjective::MinVolume) {
            results["top_objective_value"] = wpslab::json_of(best.volume);
            human += "top objective (volume): " + best.volume.get_str() + "\n";
        } else {
            results["top_objective_value"] = best.bottom_weight.get_str();
            human += "top objective (bottom weight): " +
                     best.bottom_weight.get_str() + "\n";
        }
    } else {
        human += "no hits\n";
    }
    for (const wpslab::SearchHit& hit : result.hits) {
        human += display_hypersurface(hit.hypersurface) + "  volume " +
                 hit.volume.get_str() + "  bottom " +
                 hit.bottom_weight.get_str() + "\n";
    }
    human += "examined " + std::to_string(result.counters.candidates) +
             " candidates, accepted " +
             std::to_string(result.counters.accepted) + "\n";

    json doc = wpslab::make_document(
        "search",
        json{{"dimension", dimension},
             {"max_weight", max_weight},
             {"canonical_degree_target", target},
             {"objective", to_string(config.objective)},
             {"top_k", top_k},
             {"shard_index", shard_index},
             {"shard_count", shard_count},
             {"shards", shards}},
        results, timer.ms());
    out.deliver(doc, human);
    return kOk;
}

int cmd_ratio(unsigned r, unsigned n, const Output& out) {
    Stopwatch timer;
    wpslab::RatioResult ratio = wpslab::log_volume_ratio(r, n);
    json doc = wpslab::make_document(
        "ratio", json{{"r", r}, {"n", n}},
        json{{"ratio", ratio.decimal},
             {"significant_digits", ratio.significant_digits},
             {"ratio_decimal", ratio.approx},
             {"ratio_decimal_precision", 17}},
        timer.ms());
    out.deliver(doc, "log-volume ratio (r=" + std::to_string(r) +
                         ", n=" + std::to_string(n) + "): " + ratio.decimal +
                         "\n");
    return kOk;
}

int cmd_identities(unsigned i_max, const Output& out) {
    Stopwatch timer;
    std::vector<wpslab::IdentityCheck> checks = wpslab::verify_identities(i_max);
    bool all_hold = true;
    json arr = json::array();
    std::string human;
    for (const wpslab::IdentityCheck& c : checks) {
        all_hold = all_hold && c.holds;
        arr.push_back(wpslab::json_of(c));
        human += c.name + " at i=" + std::to_string(c.index) + ": " +
                 (c.holds ? "holds" : "FAILS") + "\n";
    }
    human += all_hold ? "all identities hold\n" : "identity failure\n";
    json doc = wpslab::make_document(
        "identities", json{{"i_max", i_max}},
        json{{"checks", arr}, {"all_hold", all_hold}}, timer.ms());
    out.deliver(doc, human);
    return all_hold ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for weighted projective hypersurfaces"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.json_mode, "print the JSON document");
    app.add_option("--out", out.out_path, "write the JSON document to a file");

    auto* sylvester_cmd =
        app.add_subcommand("sylvester", "list the doubly exponential sequence");
    unsigned count = 5;
    sylvester_cmd->add_option("count", count, "how many terms")
        ->required()
        ->check(CLI::Range(1u, 20u));

    auto* poly_cmd = app.add_subcommand("poly", "print a sequence polynomial");
    std::string poly_kind;
    unsigned poly_index = 0;
    std::string poly_eval_at;
    poly_cmd->add_option("kind", poly_kind, "f|e|b|z|d|dtilde")->required();
    poly_cmd->add_option("index", poly_index, "sequence index")
        ->required()
        ->check(CLI::Range(0u, 16u));
    auto* eval_opt =
        poly_cmd->add_option("--eval", poly_eval_at, "evaluate at this integer");

    auto* construct_cmd =
        app.add_subcommand("construct", "build and certify a family member");
    std::string family;
    unsigned con_r = 3, con_n = 2;
    construct_cmd->add_option("family", family, "general|general_r3|fano")
        ->required();
    construct_cmd->add_option("r", con_r, "head length (odd, >= 3)")->required();
    construct_cmd->add_option("n", con_n, "dimension (>= r-1)")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "check one hypersurface");
    std::string ver_weights, ver_degree, ver_method = "general";
    unsigned ver_r = 0;
    verify_cmd->add_option("--weights", ver_weights, "comma-separated weights")
        ->required();
    verify_cmd->add_option("--degree", ver_degree, "hypersurface degree")
        ->required();
    verify_cmd->add_option("--method", ver_method, "general|cycle");
    auto* r_opt = verify_cmd->add_option("--r", ver_r, "cycle length");

    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "section counts and volume estimate");
    std::string hil_weights, hil_degree;
    unsigned long hil_max_m = 0;
    hilbert_cmd->add_option("--weights", hil_weights, "comma-separated weights")
        ->required();
    hilbert_cmd->add_option("--degree", hil_degree, "hypersurface degree")
        ->required();
    hilbert_cmd->add_option("--max-m", hil_max_m, "largest twist to count")
        ->required();

    auto* search_cmd =
        app.add_subcommand("search", "scan small weight systems");
    unsigned sea_dim = 2, sea_max_weight = 10;
    int sea_target = 1;
    std::string sea_objective = "min-volume";
    std::size_t sea_top_k = 10;
    unsigned sea_shard_index = 0, sea_shard_count = 1, sea_shards = 1;
    search_cmd->add_option("--dimension", sea_dim, "2 or 3");
    search_cmd->add_option("--max-weight", sea_max_weight, "weight bound B")
        ->required();
    search_cmd->add_option("--target", sea_target, "canonical degree, +1 or -1");
    search_cmd->add_option("--objective", sea_objective,
                           "min-volume|max-bottom-weight");
    search_cmd->add_option("--top-k", sea_top_k, "objective values to keep");
    search_cmd->add_option("--shard-index", sea_shard_index, "this shard");
    search_cmd->add_option("--shard-count", sea_shard_count, "total shards");
    search_cmd->add_option("--shards", sea_shards,
                           "run this many shards on worker threads");

    auto* ratio_cmd =
        app.add_subcommand("ratio", "log-volume ratio against the reference pair");
    unsigned rat_r = 3, rat_n = 2;
    ratio_cmd->add_option("r", rat_r, "head length (odd, >= 3)")->required();
    ratio_cmd->add_option("n", rat_n, "dimension (>= r-1)")->required();

    auto* identities_cmd =
        app.add_subcommand("identities", "verify the polynomial identities");
    unsigned id_max = 10;
    identities_cmd->add_option("i_max", id_max, "largest index")
        ->required()
        ->check(CLI::Range(0u, 12u));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (sylvester_cmd->parsed()) return cmd_sylvester(count, out);
        if (poly_cmd->parsed()) {
            return cmd_poly(poly_kind, poly_index, eval_opt->count() > 0,
                            poly_eval_at, out);
        }
        if (construct_cmd->parsed()) {
            return cmd_construct(family, con_r, con_n, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(ver_weights, ver_degree, ver_method, ver_r,
                              r_opt->count() > 0, out);
        }
        if (hilbert_cmd->parsed()) {
            return cmd_hilbert(hil_weights, hil_degree, hil_max_m, out);
        }
        if (search_cmd->parsed()) {
            return cmd_search(sea_dim, sea_max_weight, sea_target, sea_objective,
                              sea_top_k, sea_shard_index, sea_shard_count,
                              sea_shards, out);
        }
        if (ratio_cmd->parsed()) return cmd_ratio(rat_r, rat_n, out);
        if (identities_cmd->parsed()) return cmd_identities(id_max, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
