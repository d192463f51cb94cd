#include "wpslab/quasismooth.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace wpslab {

const char* to_string(QsVerdict v) {
    switch (v) {
        case QsVerdict::QuasiSmooth: return "quasi-smooth";
        case QsVerdict::NotQuasiSmooth: return "not-quasi-smooth";
        case QsVerdict::Undecided: return "undecided";
    }
    return "unknown";
}

const char* to_string(QsMethod m) {
    switch (m) {
        case QsMethod::General: return "general";
        case QsMethod::Cycle: return "cycle";
    }
    return "unknown";
}

namespace {

std::string subset_label(const std::vector<std::size_t>& indices) {
    std::string s = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
    }
    return s + "}";
}

// next bitmask with the same popcount (Gosper)
std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

QuasiSmoothCertificate quasi_smooth_general(const Hypersurface& h,
                                            const MembershipGuard& guard) {
    const std::vector<mpz_class>& w = h.ambient.weights();
    const std::size_t k = w.size();
    if (k > 24) {
        throw std::invalid_argument(
            "general quasi-smoothness check limited to 24 weights");
    }

    QuasiSmoothCertificate cert;
    cert.method = QsMethod::General;
    const mpz_class& d = h.degree;

    for (std::size_t i = 0; i < k; ++i) {
        if (w[i] == d) {
            cert.degree_equals_weight = true;
            cert.degree_weight_index = i;
            cert.verdict = QsVerdict::QuasiSmooth;
            return cert;
        }
    }

    // Retaining every passing record is fine for small systems but would
    // be 2^k entries in general; beyond this many weights only decisive
    // (failing or undecided) subsets are kept. subsets_checked stays exact.
    const bool keep_passing = k <= 12;

    std::vector<mpz_class> gens;
    std::vector<std::size_t> indices;
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::size_t size = 1; size <= k; ++size) {
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        while (mask < limit) {
            gens.clear();
            indices.clear();
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::uint32_t{1} << i)) {
                    gens.push_back(w[i]);
                    indices.push_back(i);
                }
            }

            SubsetRecord rec;
            rec.indices = indices;
            rec.degree_representable = semigroup_contains(gens, d, guard);
            if (rec.degree_representable == Membership::Yes) {
                rec.passed = true;
            } else {
                std::size_t infeasible = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    if (mask & (std::uint32_t{1} << j)) continue;
                    Membership got = semigroup_contains(gens, d - w[j], guard);
                    if (got == Membership::Yes) {
                        rec.witness_indices.push_back(j);
                        if (rec.witness_indices.size() >= size) break;
                    } else if (got == Membership::Infeasible) {
                        rec.any_witness_infeasible = true;
                        ++infeasible;
                    }
                }
                if (rec.witness_indices.size() >= size) {
                    rec.passed = true;
                } else if (rec.degree_representable == Membership::Infeasible ||
                           rec.witness_indices.size() + infeasible >= size) {
                    // enough blocked queries that the subset might still pass
                    rec.undecided = true;
                }
            }

            ++cert.subsets_checked;
            if (!rec.passed) {
                std::string label = subset_label(rec.indices);
                if (rec.undecided) {
                    cert.failures.push_back(
                        "membership infeasible on subset " + label);
                    cert.verdict = QsVerdict::Undecided;
                } else {
                    cert.failures.push_back(
                        "subset " + label + " has " +
                        std::to_string(rec.witness_indices.size()) + " of " +
                        std::to_string(size) + " required witnesses");
                    cert.verdict = QsVerdict::NotQuasiSmooth;
                }
                cert.subsets.push_back(std::move(rec));
                return cert;
            }
            if (keep_passing) cert.subsets.push_back(std::move(rec));

            if (mask == limit - (std::uint32_t{1} << (k - size))) break;
            mask = next_same_popcount(mask);
        }
    }
    cert.verdict = QsVerdict::QuasiSmooth;
    return cert;
}

QuasiSmoothCertificate quasi_smooth_cycle(const Hypersurface& h, std::size_t r) {
    const std::vector<mpz_class>& w = h.ambient.weights();
    const std::size_t k = w.size();
    if (r < 1 || r > k) {
        throw std::invalid_argument("cycle length out of range");
    }

    QuasiSmoothCertificate cert;
    cert.method = QsMethod::Cycle;
    cert.cycle_length = r;
    const mpz_class& d = h.degree;
    bool all_ok = true;

    for (std::size_t i = 0; i < k; ++i) {
        if (d < w[i]) {
            cert.failures.push_back("degree below weight a_" + std::to_string(i));
            all_ok = false;
        }
    }

    for (std::size_t i = r; i < k; ++i) {
        CycleStep st;
        st.dividend_index = i;
        st.divisor_index = i;
        st.is_congruence = false;
        st.holds = mpz_divisible_p(d.get_mpz_t(), w[i].get_mpz_t()) != 0;
        if (st.holds) {
            st.quotient = d / w[i];
        } else {
            cert.failures.push_back("a_" + std::to_string(i) +
                                    " does not divide the degree");
            all_ok = false;
        }
        cert.steps.push_back(std::move(st));
    }

    auto congruence = [&](std::size_t j, std::size_t mod_idx) {
        CycleStep st;
        st.dividend_index = j;
        st.divisor_index = mod_idx;
        st.is_congruence = true;
        mpz_class diff = d - w[j];
        st.holds = diff >= 0 &&
                   mpz_divisible_p(diff.get_mpz_t(), w[mod_idx].get_mpz_t()) != 0;
        if (st.holds) {
            st.quotient = diff / w[mod_idx];
        } else {
            cert.failures.push_back("d - a_" + std::to_string(j) +
                                    " not divisible by a_" +
                                    std::to_string(mod_idx));
            all_ok = false;
        }
        cert.steps.push_back(std::move(st));
    };
    for (std::size_t j = r; j-- > 1;) congruence(j, j - 1);
    congruence(0, r - 1);

    cert.verdict = all_ok ? QsVerdict::QuasiSmooth : QsVerdict::Undecided;
    return cert;
}

}  // namespace wpslab
