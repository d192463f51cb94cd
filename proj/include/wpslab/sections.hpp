#pragma once

#include <vector>

#include <gmpxx.h>

#include "wpslab/weight_system.hpp"

namespace wpslab {

/// Section counts h^0(X, O_X(m)) for m = 0..max_m, from the Hilbert series
/// (1 - t^d) / prod(1 - t^{a_i}): the count at m is the number of
/// weighted-degree-m monomials in the ambient coordinates minus the number of
/// weighted-degree-(m - d) monomials. Computed by one dense DP table over
/// degrees 0..max_m. Budget: max_m <= 10^8 / (number of weights), else
/// std::invalid_argument.
std::vector<mpz_class> section_counts(const Hypersurface& h, unsigned long max_m);

/// The m-th coefficient alone (same DP, same budget).
mpz_class section_count(const Hypersurface& h, unsigned long m);

/// section_count(h, m) * n! / m^n as an exact rational, n = dimension of h.
/// Converges to vol(K_X) as m grows when K_X = O_X(1); hence requires
/// canonical_degree(h) = 1 and m >= 1 (std::invalid_argument otherwise).
mpq_class volume_limit_estimate(const Hypersurface& h, unsigned long m);

}  // namespace wpslab
