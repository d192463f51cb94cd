#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace wpslab {

/// The weights a_0,...,a_n of a weighted projective space P(a_0,...,a_n).
/// Order is meaningful (the cycle criterion and the family constructors
/// read weights positionally); a descending-sorted view is derived on demand.
class WeightSystem {
public:
    /// Requires at least two weights, all >= 1; throws std::invalid_argument.
    explicit WeightSystem(std::vector<mpz_class> weights);

    const std::vector<mpz_class>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    const mpz_class& operator[](std::size_t i) const { return weights_[i]; }

    mpz_class sum() const;
    mpz_class product() const;
    const mpz_class& min_weight() const;
    std::vector<mpz_class> sorted_desc() const;

    friend bool operator==(const WeightSystem& a, const WeightSystem& b) = default;

private:
    std::vector<mpz_class> weights_;
};

/// A hypersurface of degree d inside P(a_0,...,a_n).
struct Hypersurface {
    /// Requires degree >= 1; throws std::invalid_argument.
    Hypersurface(WeightSystem ambient, mpz_class degree);

    WeightSystem ambient;
    mpz_class degree;

    /// Dimension of the hypersurface: (number of weights) - 2.
    std::size_t dimension() const { return ambient.size() - 2; }

    friend bool operator==(const Hypersurface& a, const Hypersurface& b) = default;
};

/// Adjunction degree d - sum(a_i); K_X = O_X(of this value). Any sign.
mpz_class canonical_degree(const Hypersurface& h);

/// True iff for every index j, gcd of all weights except a_j is 1.
bool wps_well_formed(const WeightSystem& w);

/// True iff the ambient space is well-formed and, for every pair i < j,
/// the gcd of the weights with both a_i and a_j removed divides d.
/// A non-well-formed ambient yields false (the hypersurface cannot be
/// well-formed inside it). With only two weights the pair condition is
/// vacuous.
bool hypersurface_well_formed(const Hypersurface& h);

/// Self-intersection of O(k) on the ambient space: k^(size-1) / prod(a_i),
/// as an exact reduced rational.
mpq_class volume_of_twist(const WeightSystem& w, const mpz_class& k);

/// Volume of O_X(k) on the hypersurface, assuming the twist class is
/// O_X(k): k^dim * d / prod(a_i) with dim = size - 2. Exact reduced
/// rational; equals vol(K_X) when canonical_degree(h) = k.
mpq_class volume_of_twist(const Hypersurface& h, const mpz_class& k);

}  // namespace wpslab
