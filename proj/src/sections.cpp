#include "wpslab/sections.hpp"

#include <stdexcept>

namespace wpslab {

std::vector<mpz_class> section_counts(const Hypersurface& h, unsigned long max_m) {
    const std::vector<mpz_class>& w = h.ambient.weights();
    if (max_m > 100000000UL / w.size()) {
        throw std::invalid_argument("section count budget exceeded");
    }

    // monomial[t] = number of weighted-degree-t monomials in the coordinates
    std::vector<mpz_class> monomial(max_m + 1, mpz_class(0));
    monomial[0] = 1;
    for (const mpz_class& a : w) {
        if (a > max_m) continue;
        unsigned long step = a.get_ui();
        for (unsigned long t = step; t <= max_m; ++t) {
            monomial[t] += monomial[t - step];
        }
    }

    std::vector<mpz_class> counts(max_m + 1);
    for (unsigned long m = 0; m <= max_m; ++m) {
        counts[m] = monomial[m];
        if (h.degree <= m) {
            counts[m] -= monomial[m - h.degree.get_ui()];
        }
    }
    return counts;
}

mpz_class section_count(const Hypersurface& h, unsigned long m) {
    return section_counts(h, m).back();
}

mpq_class volume_limit_estimate(const Hypersurface& h, unsigned long m) {
    if (canonical_degree(h) != 1) {
        throw std::invalid_argument(
            "volume limit estimate requires canonical degree 1");
    }
    if (m == 0) throw std::invalid_argument("m must be positive");

    unsigned long n = static_cast<unsigned long>(h.dimension());
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), n);
    mpz_class m_pow;
    mpz_pow_ui(m_pow.get_mpz_t(), mpz_class(m).get_mpz_t(), n);

    mpq_class est(section_count(h, m) * factorial, m_pow);
    est.canonicalize();
    return est;
}

}  // namespace wpslab
