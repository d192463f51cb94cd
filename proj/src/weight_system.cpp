#include "wpslab/weight_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpslab {

namespace {

// gcds of all weights except index j, for every j, via prefix/suffix scans.
std::vector<mpz_class> leave_one_out_gcds(const std::vector<mpz_class>& w) {
    std::size_t n = w.size();
    std::vector<mpz_class> prefix(n + 1, mpz_class(0));
    std::vector<mpz_class> suffix(n + 1, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_gcd(prefix[i + 1].get_mpz_t(), prefix[i].get_mpz_t(), w[i].get_mpz_t());
    }
    for (std::size_t i = n; i-- > 0;) {
        mpz_gcd(suffix[i].get_mpz_t(), suffix[i + 1].get_mpz_t(), w[i].get_mpz_t());
    }
    std::vector<mpz_class> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpz_gcd(out[j].get_mpz_t(), prefix[j].get_mpz_t(), suffix[j + 1].get_mpz_t());
    }
    return out;
}

}  // namespace

WeightSystem::WeightSystem(std::vector<mpz_class> weights)
    : weights_(std::move(weights)) {
    if (weights_.size() < 2) {
        throw std::invalid_argument("weight system needs at least two weights");
    }
    for (const mpz_class& a : weights_) {
        if (a < 1) {
            throw std::invalid_argument("weights must be positive");
        }
    }
}

mpz_class WeightSystem::sum() const {
    mpz_class s = 0;
    for (const mpz_class& a : weights_) s += a;
    return s;
}

mpz_class WeightSystem::product() const {
    mpz_class p = 1;
    for (const mpz_class& a : weights_) p *= a;
    return p;
}

const mpz_class& WeightSystem::min_weight() const {
    return *std::min_element(weights_.begin(), weights_.end());
}

std::vector<mpz_class> WeightSystem::sorted_desc() const {
    std::vector<mpz_class> out = weights_;
    std::sort(out.begin(), out.end(), std::greater<mpz_class>());
    return out;
}

Hypersurface::Hypersurface(WeightSystem ambient_in, mpz_class degree_in)
    : ambient(std::move(ambient_in)), degree(std::move(degree_in)) {
    if (degree < 1) {
        throw std::invalid_argument("hypersurface degree must be positive");
    }
}

mpz_class canonical_degree(const Hypersurface& h) {
    return h.degree - h.ambient.sum();
}

bool wps_well_formed(const WeightSystem& w) {
    for (const mpz_class& g : leave_one_out_gcds(w.weights())) {
        if (g != 1) return false;
    }
    return true;
}

bool hypersurface_well_formed(const Hypersurface& h) {
    if (!wps_well_formed(h.ambient)) return false;
    const auto& w = h.ambient.weights();
    std::size_t n = w.size();
    if (n == 2) return true;  // no pair leaves a nonempty complement
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpz_class> rest;
        rest.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
            if (k != i) rest.push_back(w[k]);
        }
        // leave-one-out over `rest` = leave-two-out over `w`
        std::vector<mpz_class> gcds = leave_one_out_gcds(rest);
        for (std::size_t t = 0; t < rest.size(); ++t) {
            // avoid double-checking each unordered pair
            std::size_t j = (t < i) ? t : t + 1;
            if (j < i) continue;
            if (!mpz_divisible_p(h.degree.get_mpz_t(), gcds[t].get_mpz_t())) {
                return false;
            }
        }
    }
    return true;
}

namespace {

mpq_class reduced(mpz_class num, mpz_class den) {
    mpq_class q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

mpz_class power(const mpz_class& base, unsigned long exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace

mpq_class volume_of_twist(const WeightSystem& w, const mpz_class& k) {
    if (k < 1) throw std::invalid_argument("twist must be positive");
    unsigned long dim = static_cast<unsigned long>(w.size() - 1);
    return reduced(power(k, dim), w.product());
}

mpq_class volume_of_twist(const Hypersurface& h, const mpz_class& k) {
    if (k < 1) throw std::invalid_argument("twist must be positive");
    unsigned long dim = static_cast<unsigned long>(h.dimension());
    return reduced(power(k, dim) * h.degree, h.ambient.product());
}

}  // namespace wpslab
