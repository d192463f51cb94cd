#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wpslab/quasismooth.hpp"
#include "wpslab/weight_system.hpp"

namespace wpslab {

/// general_type_r3 is the r=3 specialization built from its own closed
/// weight formulas; it must agree with general_type at r=3.
enum class FamilyKind { GeneralTypeR3, GeneralType, Fano };

const char* to_string(FamilyKind kind);

/// A constructed member X_d in P(a_0,...,a_{n+1}): head weights a_0..a_{r-1}
/// from the polynomial system at y = c_{n-r+2} - 1, tail weights
/// a_{r+i} = c_0...(skip c_i)...c_{n-r+1} * x, degree d = y*x with
/// x = (+1 for general type | -1 for Fano) + sum of head weights.
struct FamilyMember {
    FamilyKind kind = FamilyKind::GeneralType;
    unsigned r = 3;
    unsigned n = 2;
    mpz_class y;
    std::vector<mpz_class> head_weights;  // a_0..a_{r-1}
    mpz_class x;
    std::vector<mpz_class> tail_weights;  // a_r..a_{n+1}
    mpz_class degree;

    std::vector<mpz_class> all_weights() const;  // head then tail
    Hypersurface hypersurface() const;
};

struct NamedCheck {
    std::string name;
    bool holds;
};

struct FamilyCertificate {
    FamilyMember member;
    std::vector<NamedCheck> identity_checks;  // weight equations, d = y*x, gcd laws
    bool space_well_formed = false;
    bool surface_well_formed = false;
    QuasiSmoothCertificate quasi_smooth;      // cycle method, cycle length r
    mpz_class canonical_degree;
    bool canonical_degree_ok = false;         // +1 general type, -1 Fano
    std::optional<mpq_class> volume;              // general type: d / prod(a_i)
    std::optional<mpq_class> volume_closed_form;  // 1/(y^(n-r) x^(n-r+1) a_0...a_{r-1})
    std::optional<mpz_class> bottom_weight;       // Fano: the minimum weight
    std::vector<NamedCheck> bound_checks;

    /// Every named check holds, both spaces well-formed, quasi-smooth
    /// verdict reached, canonical degree as required.
    bool valid() const;
};

/// Builds the family member for odd r >= 3 and n >= r-1
/// (general_type_r3 requires r = 3). Throws std::invalid_argument on
/// parameter violations and std::logic_error if an internal construction
/// invariant fails (never expected).
FamilyMember construct(FamilyKind kind, unsigned r, unsigned n);

/// Recomputes every certifiable claim about the member with exact
/// arithmetic. Failures are recorded in the certificate, never thrown.
FamilyCertificate verify_member(const FamilyMember& member,
                                const MembershipGuard& guard = {});

/// 1/(c_{n+2} - 1)^n, the reference minimal-volume klt pair value.
mpq_class kollar_pair_volume(unsigned n);

struct RatioResult {
    std::string decimal;      // >= 50 significant digits
    int significant_digits;
    double approx;
};

/// log(vol(K_X)) / log(reference pair volume) for the general-type member
/// at (r, n), computed from the factored forms at 512-bit precision. The
/// sequence over n approaches (2^r - 1)/2^r.
RatioResult log_volume_ratio(unsigned r, unsigned n);

}  // namespace wpslab
