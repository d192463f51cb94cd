#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wpslab/semigroup.hpp"
#include "wpslab/weight_system.hpp"

namespace wpslab {

enum class QsVerdict { QuasiSmooth, NotQuasiSmooth, Undecided };
enum class QsMethod { General, Cycle };

const char* to_string(QsVerdict v);
const char* to_string(QsMethod m);

/// Outcome for one subset I under the general criterion. A subset passes if
/// the degree is representable over {a_i : i in I}, or at least |I| outside
/// indices j have d - a_j representable.
struct SubsetRecord {
    std::vector<std::size_t> indices;                 // the subset I
    Membership degree_representable = Membership::No;
    std::vector<std::size_t> witness_indices;         // j with d - a_j representable
    bool any_witness_infeasible = false;
    bool passed = false;
    bool undecided = false;
};

/// One entry of the cycle certificate: divisor * quotient = dividend, where
/// the dividend is d (divisibility part) or d - a_j (congruence part).
struct CycleStep {
    std::size_t dividend_index;  // j, or the divided weight itself
    std::size_t divisor_index;   // the modulus weight
    bool is_congruence = false;  // false: a_i | d; true: d - a_j = q * a_i
    bool holds = false;
    mpz_class quotient;          // meaningful only when holds
};

struct QuasiSmoothCertificate {
    QsVerdict verdict = QsVerdict::Undecided;
    QsMethod method = QsMethod::General;

    // general method
    bool degree_equals_weight = false;   // some a_i = d (immediate acceptance)
    std::size_t degree_weight_index = 0; // that i, when degree_equals_weight
    std::vector<SubsetRecord> subsets;   // checked subsets, in evaluation order
    std::size_t subsets_checked = 0;

    // cycle method
    std::size_t cycle_length = 0;        // r
    std::vector<CycleStep> steps;

    std::vector<std::string> failures;   // human-readable reasons
};

/// Full iff criterion: quasi-smooth iff some a_i = d, or every nonempty
/// subset I of the weight indices passes (degree representable over I, or
/// >= |I| outside witnesses). Subsets are enumerated in increasing size,
/// stopping at the first failing or infeasible subset. Infeasible membership
/// queries that block a decision give verdict Undecided. Systems with more
/// than 24 weights are rejected (std::invalid_argument).
QuasiSmoothCertificate quasi_smooth_general(const Hypersurface& h,
                                            const MembershipGuard& guard = {});

/// Sufficient cycle-of-congruences criterion with cycle length r
/// (1 <= r <= number of weights, else std::invalid_argument): requires
/// d >= a_i for all i, a_i | d for i >= r, and the congruences
/// d - a_{r-1} = 0 mod a_{r-2}, ..., d - a_1 = 0 mod a_0,
/// d - a_0 = 0 mod a_{r-1}. All hold -> QuasiSmooth with quotient
/// witnesses; any failure -> Undecided (the criterion is only sufficient).
QuasiSmoothCertificate quasi_smooth_cycle(const Hypersurface& h, std::size_t r);

}  // namespace wpslab
