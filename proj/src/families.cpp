#include "wpslab/families.hpp"

#include <algorithm>
#include <stdexcept>

#include <mpfr.h>

#include "wpslab/polyseq.hpp"
#include "wpslab/sections.hpp"

namespace wpslab {

const char* to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::GeneralTypeR3: return "general_type_r3";
        case FamilyKind::GeneralType: return "general_type";
        case FamilyKind::Fano: return "fano";
    }
    throw std::invalid_argument("unknown family kind");
}

std::vector<mpz_class> FamilyMember::all_weights() const {
    std::vector<mpz_class> w = head_weights;
    w.insert(w.end(), tail_weights.begin(), tail_weights.end());
    return w;
}

Hypersurface FamilyMember::hypersurface() const {
    return Hypersurface(WeightSystem(all_weights()), degree);
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

mpz_class eval_seq(PolySequenceKind kind, unsigned i, const mpz_class& y) {
    return poly_sequence(kind, i).eval(y);
}

mpz_class power(const mpz_class& base, unsigned long exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace

FamilyMember construct(FamilyKind kind, unsigned r, unsigned n) {
    if (kind == FamilyKind::GeneralTypeR3 && r != 3) {
        throw std::invalid_argument("this family kind fixes r = 3");
    }
    if (r < 3 || r % 2 == 0) {
        throw std::invalid_argument("r must be odd and at least 3");
    }
    if (n < r - 1) {
        throw std::invalid_argument("n must be at least r - 1");
    }

    FamilyMember m;
    m.kind = kind;
    m.r = r;
    m.n = n;
    m.y = sylvester(n - r + 2) - 1;
    const bool fano = kind == FamilyKind::Fano;
    const int sign = fano ? -1 : 1;
    const mpz_class& y = m.y;

    std::vector<mpz_class>& a = m.head_weights;
    if (kind == FamilyKind::GeneralTypeR3) {
        mpz_class a2 = y * y * y + y + 1;
        mpz_class a1 = y * (y + 1) * (1 + a2) - a2;
        mpz_class a0 = y * (1 + a2 + a1) - a1;
        a = {a0, a1, a2};
        m.x = 1 + a0 + a1 + a2;
        m.degree = y * m.x;
        // same degree as the expanded septic in y
        mpz_class septic =
            IntPoly({0, 2, 2, 2, 4, 1, 1, 1}).eval(y);
        require(m.degree == septic, "degree mismatch against septic form");
    } else {
        mpz_class big_d =
            eval_seq(fano ? PolySequenceKind::DTilde : PolySequenceKind::D,
                     r - 1, y);
        a.assign(r, 0);
        a[r - 1] = eval_seq(PolySequenceKind::B, r - 1, y);
        mpz_class z_top = eval_seq(PolySequenceKind::Z, r - 1, y);
        a[0] = big_d - (z_top + sign * y) * a[r - 1];
        for (unsigned i = 1; i <= r - 2; ++i) {
            a[i] = big_d - eval_seq(PolySequenceKind::F, i - 1, y) * a[i - 1];
        }
        mpz_class head_sum = 0;
        for (const mpz_class& ai : a) head_sum += ai;
        m.x = sign + head_sum;
        m.degree = big_d;
        require(m.degree == y * m.x, "degree is not y*x");
    }

    for (const mpz_class& ai : a) require(ai > 0, "nonpositive head weight");
    require(m.x > 0, "nonpositive x");

    // tail weights: products of Sylvester numbers c_0..c_{n-r+1} with one
    // factor removed, times x
    unsigned top = n - r + 1;
    mpz_class total = 1;
    for (unsigned i = 0; i <= top; ++i) total *= sylvester(i);
    require(total == y, "Sylvester product does not telescope to y");
    m.tail_weights.resize(top + 1);
    for (unsigned i = 0; i <= top; ++i) {
        m.tail_weights[i] = (total / sylvester(i)) * m.x;
    }

    return m;
}

FamilyCertificate verify_member(const FamilyMember& m,
                                const MembershipGuard& guard) {
    FamilyCertificate cert;
    cert.member = m;
    const bool fano = m.kind == FamilyKind::Fano;
    const int sign = fano ? -1 : 1;
    const mpz_class& y = m.y;
    const unsigned r = m.r;
    const unsigned n = m.n;

    auto check = [&cert](std::string name, bool holds) {
        cert.identity_checks.push_back({std::move(name), holds});
    };
    auto bound = [&cert](std::string name, bool holds) {
        cert.bound_checks.push_back({std::move(name), holds});
    };

    bool shape_ok = r >= 3 && r % 2 == 1 && n >= r - 1 &&
                    m.head_weights.size() == r &&
                    m.tail_weights.size() == n - r + 2;
    check("member_shape", shape_ok);
    if (!shape_ok) return cert;

    check("y_from_sylvester_gap", y == sylvester(n - r + 2) - 1);

    const std::vector<mpz_class>& a = m.head_weights;

    // the r-equation system: a_{r-1} = b_{r-1}(y) and, descending,
    // a_i = e_i(y) * (sign + a_{r-1} + ... + a_{i+1}) - a_{i+1}
    check("weight_equation_" + std::to_string(r - 1),
          a[r - 1] == eval_seq(PolySequenceKind::B, r - 1, y));
    mpz_class partial = sign + a[r - 1];
    for (unsigned i = r - 1; i-- > 0;) {
        bool ok = a[i] ==
                  eval_seq(PolySequenceKind::E, i, y) * partial - a[i + 1];
        check("weight_equation_" + std::to_string(i), ok);
        partial += a[i];
    }

    // the defining recursion regenerates the same head weights
    {
        mpz_class z_top = eval_seq(PolySequenceKind::Z, r - 1, y);
        bool ok = a[0] == m.degree - (z_top + sign * y) * a[r - 1];
        for (unsigned i = 1; ok && i <= r - 2; ++i) {
            ok = a[i] ==
                 m.degree - eval_seq(PolySequenceKind::F, i - 1, y) * a[i - 1];
        }
        check("defining_recursion", ok);
    }
    check("top_weight_recursion",
          a[r - 1] ==
              m.degree - eval_seq(PolySequenceKind::F, r - 2, y) * a[r - 2]);

    mpz_class head_sum = 0;
    for (const mpz_class& ai : a) head_sum += ai;
    check("x_from_head_sum", m.x == sign + head_sum);
    check("degree_equals_y_times_x", m.degree == y * m.x);

    {
        unsigned top = n - r + 1;
        mpz_class total = 1;
        for (unsigned i = 0; i <= top; ++i) total *= sylvester(i);
        bool ok = total == y;
        for (unsigned i = 0; ok && i <= top; ++i) {
            ok = m.tail_weights[i] == (total / sylvester(i)) * m.x;
        }
        check("tail_formula", ok);
    }

    {
        bool ok = true;
        for (unsigned skip = 0; skip < r && ok; ++skip) {
            mpz_class g = 0;
            for (unsigned i = 0; i < r; ++i) {
                if (i != skip) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
            }
            ok = g == 1;
        }
        check("head_gcd_law", ok);
    }

    Hypersurface h = m.hypersurface();
    cert.space_well_formed = wps_well_formed(h.ambient);
    cert.surface_well_formed = hypersurface_well_formed(h);
    cert.quasi_smooth = quasi_smooth_cycle(h, r);
    cert.canonical_degree = canonical_degree(h);
    cert.canonical_degree_ok = cert.canonical_degree == sign;

    if (!fano) {
        cert.volume = volume_of_twist(h, 1);

        // 1 / (y^(n-r) x^(n-r+1) a_0...a_{r-1}); at n = r-1 the y-exponent
        // is -1 and the factor moves to the numerator
        mpz_class num = 1;
        mpz_class den = power(m.x, n - r + 1);
        if (n >= r) {
            den *= power(y, n - r);
        } else {
            num = y;
        }
        for (const mpz_class& ai : a) den *= ai;
        mpq_class closed(num, den);
        closed.canonicalize();
        cert.volume_closed_form = closed;
        check("volume_closed_form_agrees", *cert.volume == closed);

        unsigned long exp_y =
            ((1UL << r) - 1) * static_cast<unsigned long>(n) - 1;
        mpq_class y_bound(1, power(y, exp_y));
        y_bound.canonicalize();
        bound("volume_below_y_power", *cert.volume < y_bound);

        mpq_class crude(1, power(mpz_class(2), 1UL << n));
        crude.canonicalize();
        bound("volume_below_doubly_exponential", *cert.volume < crude);
    } else {
        const mpz_class& bottom = a[r - 1];
        cert.bottom_weight = bottom;
        bound("bottom_weight_is_min_weight", bottom == h.ambient.min_weight());

        unsigned long floor_exp = (1UL << (r - 1)) - 1;
        bound("bottom_weight_floor", bottom >= power(y, floor_exp));

        // H^0(X, O_X(m)) = 0 for 0 < m < bottom: run the section DP on
        // sampled m where that is cheap, fall back to the min-weight rule
        const unsigned long dp_cap = 2000000UL / h.ambient.size();
        std::vector<mpz_class> samples{1, 2, bottom - 1};
        bool ok = true;
        for (const mpz_class& sm : samples) {
            if (sm < 1 || sm >= bottom) continue;
            if (sm <= dp_cap) {
                ok = ok && section_count(h, sm.get_ui()) == 0;
            } else {
                ok = ok && sm < h.ambient.min_weight();
            }
        }
        bound("sections_vanish_below_bottom_weight", ok);
    }

    (void)guard;
    return cert;
}

bool FamilyCertificate::valid() const {
    for (const NamedCheck& c : identity_checks) {
        if (!c.holds) return false;
    }
    for (const NamedCheck& c : bound_checks) {
        if (!c.holds) return false;
    }
    return space_well_formed && surface_well_formed &&
           quasi_smooth.verdict == QsVerdict::QuasiSmooth &&
           canonical_degree_ok;
}

mpq_class kollar_pair_volume(unsigned n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    mpq_class v(1, power(sylvester(n + 2) - 1, n));
    v.canonicalize();
    return v;
}

RatioResult log_volume_ratio(unsigned r, unsigned n) {
    FamilyMember m = construct(FamilyKind::GeneralType, r, n);

    constexpr mpfr_prec_t kPrec = 512;
    mpfr_t term, acc_num, acc_den;
    mpfr_inits2(kPrec, term, acc_num, acc_den, (mpfr_ptr) nullptr);

    // log vol(K_X) = -[(n-r) log y + (n-r+1) log x + sum log a_i]
    mpfr_set_z(term, m.y.get_mpz_t(), MPFR_RNDN);
    mpfr_log(term, term, MPFR_RNDN);
    mpfr_mul_si(acc_num, term, static_cast<long>(n) - static_cast<long>(r),
                MPFR_RNDN);
    mpfr_set_z(term, m.x.get_mpz_t(), MPFR_RNDN);
    mpfr_log(term, term, MPFR_RNDN);
    mpfr_mul_si(term, term, static_cast<long>(n - r + 1), MPFR_RNDN);
    mpfr_add(acc_num, acc_num, term, MPFR_RNDN);
    for (const mpz_class& ai : m.head_weights) {
        mpfr_set_z(term, ai.get_mpz_t(), MPFR_RNDN);
        mpfr_log(term, term, MPFR_RNDN);
        mpfr_add(acc_num, acc_num, term, MPFR_RNDN);
    }
    mpfr_neg(acc_num, acc_num, MPFR_RNDN);

    // log of the reference pair volume 1/(c_{n+2}-1)^n
    mpz_class base = sylvester(n + 2) - 1;
    mpfr_set_z(term, base.get_mpz_t(), MPFR_RNDN);
    mpfr_log(term, term, MPFR_RNDN);
    mpfr_mul_si(acc_den, term, -static_cast<long>(n), MPFR_RNDN);

    mpfr_div(acc_num, acc_num, acc_den, MPFR_RNDN);

    RatioResult out;
    out.significant_digits = 50;
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "%.50Rg", acc_num);
    out.decimal = buf;
    out.approx = mpfr_get_d(acc_num, MPFR_RNDN);

    mpfr_clears(term, acc_num, acc_den, (mpfr_ptr) nullptr);
    return out;
}

}  // namespace wpslab
