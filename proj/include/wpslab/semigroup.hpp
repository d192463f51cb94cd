#pragma once

#include <vector>

#include <gmpxx.h>

namespace wpslab {

/// Feasibility control for the Apery-set membership algorithm, which
/// allocates a table indexed by residues modulo the smallest generator.
struct MembershipGuard {
    mpz_class max_min_generator = 10000000;  // 10^7
};

enum class Membership { Yes, No, Infeasible };

const char* to_string(Membership m);

/// Decides whether target is a nonnegative integer combination of the
/// generators (all >= 1; the set must be nonempty, else std::invalid_argument).
///
/// Ladder: negative target -> No, zero -> Yes; a single generator by
/// divisibility; otherwise reduce by the common gcd, answer two coprime
/// generators p < q by the closed form (representable iff
/// target >= q * ((target * q^{-1}) mod p)), and fall back to the Apery set
/// of the semigroup modulo its smallest generator m, computed by round-robin
/// cycle relaxation. The fallback runs only when m fits the guard; otherwise
/// Infeasible.
Membership semigroup_contains(const std::vector<mpz_class>& generators,
                              const mpz_class& target,
                              const MembershipGuard& guard = {});

}  // namespace wpslab
