#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "wpslab/intpoly.hpp"

namespace wpslab {

/// Sylvester's sequence: c_0 = 2, c_{m+1} = c_m(c_m - 1) + 1.
/// Memoized; repeated calls are O(1).
mpz_class sylvester(unsigned i);

/// The six recurrence-defined polynomial families in Z[y]:
///   f: f_0 = y+1, f_1 = y^2+1, f_i = f_{i-1}f_{i-2} + (f_{i-1}-1)(f_{i-1}-2)
///   e: e_i = y f_0 ... f_{i-1}
///   b: b_0 = 1, b_i = (-1)^i + f_{i-1} b_{i-1}
///   z: z_0 = y-1, z_1 = y^2-y+1, z_i = e_{i-1} z_{i-1} + z_{i-2}
///   d: d_i = e_i + b_i (f_i - 1)
///   dtilde: -e_i + b_i (f_i - 1)
enum class PolySequenceKind { F, E, B, Z, D, DTilde };

const char* to_string(PolySequenceKind kind);

/// i-th member of the requested family, by exact polynomial arithmetic.
/// Memoized per kind.
IntPoly poly_sequence(PolySequenceKind kind, unsigned i);

struct IdentityCheck {
    std::string name;
    unsigned index;
    bool holds;
};

/// Expands both sides of each cross-family identity as polynomials and
/// compares coefficient-wise, for every admissible index up to i_max:
///   f_i = 1 + y (f_0...f_{i-1} - f_0...f_{i-2} + ... + (-1)^i)      (i >= 0)
///   e_i = f_i + f_{i-1} - 2                                          (i >= 1)
///   e_i = f_{i-1} e_{i-1}                                            (i >= 1)
///   f_0...f_{i-1} z_i = (-1)^{i+1} + b_i (f_i - 1)                   (i >= 0)
///   d_i = (-1)^i + f_0...f_{i-1} (z_i + y)                           (i >= 0)
///   dtilde_i = (-1)^i + f_0...f_{i-1} (z_i - y)                      (i >= 0)
std::vector<IdentityCheck> verify_identities(unsigned i_max);

}  // namespace wpslab
