#include "wpslab/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace wpslab {

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

// Two coprime generators p, q: the least multiple of q congruent to t mod p
// is beta*q with beta = (t * q^{-1}) mod p; t is representable iff it
// reaches that multiple.
bool coprime_pair_contains(const mpz_class& p, const mpz_class& q,
                           const mpz_class& t) {
    mpz_class qinv;
    mpz_invert(qinv.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_class beta;
    mpz_mod(beta.get_mpz_t(), mpz_class(t * qinv).get_mpz_t(), p.get_mpz_t());
    return t >= beta * q;
}

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

// Apery table over residues mod m (= gens[0]): table[s] is the least
// semigroup element congruent to s. Round-robin relaxation: each generator in
// turn, each +g cycle walked once starting at its current minimum.
std::vector<std::uint64_t> apery_table_u64(const std::vector<unsigned long>& gens) {
    unsigned long m = gens[0];
    std::vector<std::uint64_t> table(m, kUnreached);
    table[0] = 0;
    for (std::size_t gi = 1; gi < gens.size(); ++gi) {
        unsigned long g = gens[gi];
        unsigned long step = g % m;
        if (step == 0) continue;
        unsigned long d = std::gcd(g, m);
        unsigned long cycle_len = m / d;
        for (unsigned long rho = 0; rho < d; ++rho) {
            unsigned long pos = rho;
            unsigned long best_pos = rho;
            std::uint64_t best = table[pos];
            for (unsigned long k = 1; k < cycle_len; ++k) {
                pos = (pos + step) % m;
                if (table[pos] < best) {
                    best = table[pos];
                    best_pos = pos;
                }
            }
            if (best == kUnreached) continue;
            pos = best_pos;
            std::uint64_t val = best;
            for (unsigned long k = 1; k < cycle_len; ++k) {
                pos = (pos + step) % m;
                val += g;
                if (table[pos] < val) val = table[pos];
                table[pos] = val;
            }
        }
    }
    return table;
}

std::vector<mpz_class> apery_table_mpz(const std::vector<mpz_class>& gens,
                                       unsigned long m) {
    const mpz_class unreached(-1);
    std::vector<mpz_class> table(m, unreached);
    table[0] = 0;
    for (std::size_t gi = 1; gi < gens.size(); ++gi) {
        const mpz_class& g = gens[gi];
        unsigned long step = mpz_fdiv_ui(g.get_mpz_t(), m);
        if (step == 0) continue;
        unsigned long d = std::gcd(step, m);
        unsigned long cycle_len = m / d;
        for (unsigned long rho = 0; rho < d; ++rho) {
            unsigned long pos = rho;
            unsigned long best_pos = rho;
            for (unsigned long k = 1; k < cycle_len; ++k) {
                pos = (pos + step) % m;
                const mpz_class& cur = table[pos];
                const mpz_class& best = table[best_pos];
                if (cur >= 0 && (best < 0 || cur < best)) best_pos = pos;
            }
            if (table[best_pos] < 0) continue;
            pos = best_pos;
            mpz_class val = table[best_pos];
            for (unsigned long k = 1; k < cycle_len; ++k) {
                pos = (pos + step) % m;
                val += g;
                if (table[pos] >= 0 && table[pos] < val) val = table[pos];
                table[pos] = val;
            }
        }
    }
    return table;
}

}  // namespace

Membership semigroup_contains(const std::vector<mpz_class>& generators,
                              const mpz_class& target,
                              const MembershipGuard& guard) {
    if (generators.empty()) {
        throw std::invalid_argument("semigroup needs at least one generator");
    }
    for (const mpz_class& g : generators) {
        if (g < 1) throw std::invalid_argument("generators must be positive");
    }

    if (target < 0) return Membership::No;
    if (target == 0) return Membership::Yes;

    std::vector<mpz_class> gens = generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    if (gens.size() == 1) {
        return mpz_divisible_p(target.get_mpz_t(), gens[0].get_mpz_t())
                   ? Membership::Yes
                   : Membership::No;
    }

    mpz_class g = gens[0];
    for (std::size_t i = 1; i < gens.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gens[i].get_mpz_t());
    }
    if (!mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t())) return Membership::No;
    mpz_class t = target / g;
    if (g != 1) {
        for (mpz_class& a : gens) a /= g;
    }

    if (gens[0] == 1) return Membership::Yes;
    if (t < gens[0]) return Membership::No;
    for (const mpz_class& a : gens) {
        if (mpz_divisible_p(t.get_mpz_t(), a.get_mpz_t())) return Membership::Yes;
    }

    if (gens.size() == 2) {
        return coprime_pair_contains(gens[0], gens[1], t) ? Membership::Yes
                                                          : Membership::No;
    }

    if (gens[0] > guard.max_min_generator || !gens[0].fits_ulong_p()) {
        return Membership::Infeasible;
    }
    unsigned long m = gens[0].get_ui();

    bool small = true;
    for (const mpz_class& a : gens) {
        if (!a.fits_ulong_p() || a.get_ui() >= (1UL << 31)) {
            small = false;
            break;
        }
    }

    unsigned long residue = mpz_fdiv_ui(t.get_mpz_t(), m);
    if (small) {
        std::vector<unsigned long> ul(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) ul[i] = gens[i].get_ui();
        std::vector<std::uint64_t> table = apery_table_u64(ul);
        std::uint64_t least = table[residue];
        if (least == kUnreached) return Membership::No;
        return t >= mpz_class(static_cast<unsigned long>(least))
                   ? Membership::Yes
                   : Membership::No;
    }
    std::vector<mpz_class> table = apery_table_mpz(gens, m);
    const mpz_class& least = table[residue];
    if (least < 0) return Membership::No;
    return t >= least ? Membership::Yes : Membership::No;
}

}  // namespace wpslab
