#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wpslab {

/// Dense univariate polynomial in y over arbitrary-precision integers.
/// Coefficient k is the coefficient of y^k. The zero polynomial stores no
/// coefficients and reports degree -1 (the "minus infinity" marker); any
/// other polynomial keeps its top coefficient nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly constant(mpz_class c);
    static IntPoly monomial(mpz_class c, std::size_t k);
    static IntPoly variable();  // y

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of y^k; zero beyond the degree.
    const mpz_class& coeff(std::size_t k) const;
    std::span<const mpz_class> coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const IntPoly& other) { return *this = *this * other; }
    IntPoly& operator+=(const mpz_class& c);
    IntPoly& operator-=(const mpz_class& c);
    IntPoly& operator*=(const mpz_class& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator+(IntPoly a, const mpz_class& c) { return a += c; }
    friend IntPoly operator-(IntPoly a, const mpz_class& c) { return a -= c; }
    friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
    friend IntPoly operator*(const mpz_class& c, IntPoly a) { return a *= c; }
    friend IntPoly operator-(IntPoly a);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Exact value at y = y0, by Horner's rule.
    mpz_class eval(const mpz_class& y0) const;

    // "y^4+y^3+y+1" style, descending powers.
    std::string to_string() const;

private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

inline mpz_class poly_eval(const IntPoly& p, const mpz_class& y0) { return p.eval(y0); }

}  // namespace wpslab
