#include "wpslab/intpoly.hpp"

#include <sstream>
#include <utility>

namespace wpslab {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0)
        p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.resize(k + 1);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

const mpz_class& IntPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator+=(const mpz_class& c) {
    if (coeffs_.empty())
        coeffs_.push_back(c);
    else
        coeffs_[0] += c;
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const mpz_class& c) {
    if (coeffs_.empty())
        coeffs_.push_back(-c);
    else
        coeffs_[0] -= c;
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_)
        a *= c;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    IntPoly out;
    out.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
    // Leading coefficients are nonzero over Z, no trimming needed.
    return out;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

mpz_class IntPoly::eval(const mpz_class& y0) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= y0;
        acc += *it;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (mag != 1 || k == 0)
            out << mag.get_str();
        if (k >= 1) {
            out << 'y';
            if (k >= 2)
                out << '^' << k;
        }
    }
    return out.str();
}

}  // namespace wpslab
