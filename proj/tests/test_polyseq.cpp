#include <doctest.h>

#include <map>
#include <vector>

#include "wpslab/polyseq.hpp"

using wpslab::IntPoly;
using wpslab::PolySequenceKind;
using wpslab::poly_sequence;
using wpslab::sylvester;

TEST_CASE("sylvester values") {
    mpz_class expected[] = {2, 3, 7, 43, 1807, 3263443};
    for (unsigned i = 0; i < 6; ++i) CHECK(sylvester(i) == expected[i]);
    CHECK(sylvester(5) == mpz_class(1807) * 1806 + 1);
}

TEST_CASE("sylvester product identity and coprimality") {
    for (unsigned m = 1; m <= 12; ++m) {
        mpz_class prod = 1;
        for (unsigned i = 0; i < m; ++i) prod *= sylvester(i);
        CHECK(sylvester(m) == prod + 1);
    }
    for (unsigned i = 0; i <= 12; ++i) {
        for (unsigned j = i + 1; j <= 12; ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), sylvester(i).get_mpz_t(),
                    sylvester(j).get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("unit fraction identity") {
    for (unsigned m = 0; m <= 10; ++m) {
        mpq_class sum = 0;
        for (unsigned i = 0; i <= m; ++i) {
            mpq_class term(1, sylvester(i));
            term.canonicalize();
            sum += term;
        }
        mpq_class rhs(sylvester(m + 1) - 2, sylvester(m + 1) - 1);
        rhs.canonicalize();
        CHECK(sum == rhs);
    }
}

TEST_CASE("known polynomials") {
    CHECK(poly_sequence(PolySequenceKind::F, 0) == IntPoly({1, 1}));
    CHECK(poly_sequence(PolySequenceKind::F, 1) == IntPoly({1, 0, 1}));
    CHECK(poly_sequence(PolySequenceKind::F, 2) == IntPoly({1, 1, 0, 1, 1}));
    CHECK(poly_sequence(PolySequenceKind::Z, 0) == IntPoly({-1, 1}));
    CHECK(poly_sequence(PolySequenceKind::Z, 1) == IntPoly({1, -1, 1}));
    CHECK(poly_sequence(PolySequenceKind::Z, 2) == IntPoly({-1, 2, 0, 0, 1}));
    CHECK(poly_sequence(PolySequenceKind::E, 0) == IntPoly({0, 1}));
    CHECK(poly_sequence(PolySequenceKind::E, 1) == IntPoly({0, 1, 1}));
    CHECK(poly_sequence(PolySequenceKind::B, 0) == IntPoly({1}));
    CHECK(poly_sequence(PolySequenceKind::B, 1) == IntPoly({0, 1}));
    CHECK(poly_sequence(PolySequenceKind::B, 2) == IntPoly({1, 1, 0, 1}));
    CHECK(poly_sequence(PolySequenceKind::D, 0) == IntPoly({0, 2}));
    CHECK(poly_sequence(PolySequenceKind::D, 1) == IntPoly({0, 1, 1, 1}));
    CHECK(poly_sequence(PolySequenceKind::D, 2) ==
          IntPoly({0, 2, 2, 2, 4, 1, 1, 1}));
    CHECK(poly_sequence(PolySequenceKind::DTilde, 0).is_zero());
    CHECK(poly_sequence(PolySequenceKind::DTilde, 1) == IntPoly({0, -1, -1, 1}));
    CHECK(poly_sequence(PolySequenceKind::DTilde, 2) ==
          IntPoly({0, 0, 0, 0, 2, 1, 1, 1}));
}

TEST_CASE("display of known polynomials") {
    CHECK(poly_sequence(PolySequenceKind::F, 2).to_string() == "y^4+y^3+y+1");
    CHECK(poly_sequence(PolySequenceKind::Z, 2).to_string() == "y^4+2y-1");
    CHECK(poly_sequence(PolySequenceKind::D, 1).to_string() == "y^3+y^2+y");
    CHECK(poly_sequence(PolySequenceKind::DTilde, 2).to_string() ==
          "y^7+y^6+y^5+2y^4");
}

TEST_CASE("anchor evaluations") {
    CHECK(poly_sequence(PolySequenceKind::B, 2).eval(2) == 11);
    CHECK(poly_sequence(PolySequenceKind::B, 2).eval(6) == 223);
    CHECK(poly_sequence(PolySequenceKind::DTilde, 2).eval(2) == 256);
    CHECK(poly_sequence(PolySequenceKind::DTilde, 2).eval(6) == 336960);
    CHECK(poly_sequence(PolySequenceKind::D, 2).eval(2) == 316);
    CHECK(poly_sequence(PolySequenceKind::D, 2).eval(6) == 340068);
    CHECK(poly_sequence(PolySequenceKind::D, 4).eval(2) == 147565206676);
}

TEST_CASE("degree laws") {
    for (unsigned i = 0; i <= 10; ++i) {
        int two_i = 1 << i;
        CHECK(poly_sequence(PolySequenceKind::F, i).degree() == two_i);
        CHECK(poly_sequence(PolySequenceKind::E, i).degree() == two_i);
        CHECK(poly_sequence(PolySequenceKind::Z, i).degree() == two_i);
        CHECK(poly_sequence(PolySequenceKind::B, i).degree() == two_i - 1);
        if (i >= 1) {
            CHECK(poly_sequence(PolySequenceKind::D, i).degree() == 2 * two_i - 1);
            CHECK(poly_sequence(PolySequenceKind::DTilde, i).degree() ==
                  2 * two_i - 1);
        }
    }
    CHECK(poly_sequence(PolySequenceKind::D, 0).degree() == 1);
    CHECK(poly_sequence(PolySequenceKind::DTilde, 0).degree() == -1);
}

namespace {

// independent oracle: run each defining recurrence directly over integers
std::map<char, std::vector<mpz_class>> recurrence_values(const mpz_class& y,
                                                         unsigned i_max) {
    std::map<char, std::vector<mpz_class>> v;
    auto& f = v['f'];
    auto& e = v['e'];
    auto& b = v['b'];
    auto& z = v['z'];
    auto& d = v['d'];
    auto& t = v['t'];  // dtilde
    f = {y + 1, y * y + 1};
    for (unsigned i = 2; i <= i_max; ++i) {
        f.push_back(f[i - 1] * f[i - 2] + (f[i - 1] - 1) * (f[i - 1] - 2));
    }
    mpz_class prefix = 1;
    for (unsigned i = 0; i <= i_max; ++i) {
        e.push_back(y * prefix);
        prefix *= f[i];
    }
    b = {mpz_class(1)};
    for (unsigned i = 1; i <= i_max; ++i) {
        mpz_class sign = (i % 2 == 0) ? 1 : -1;
        b.push_back(sign + f[i - 1] * b[i - 1]);
    }
    z = {y - 1, y * y - y + 1};
    for (unsigned i = 2; i <= i_max; ++i) {
        z.push_back(e[i - 1] * z[i - 1] + z[i - 2]);
    }
    for (unsigned i = 0; i <= i_max; ++i) {
        d.push_back(e[i] + b[i] * (f[i] - 1));
        t.push_back(-e[i] + b[i] * (f[i] - 1));
    }
    return v;
}

}  // namespace

TEST_CASE("evaluation commutes with the recurrences") {
    const std::pair<PolySequenceKind, char> kinds[] = {
        {PolySequenceKind::F, 'f'}, {PolySequenceKind::E, 'e'},
        {PolySequenceKind::B, 'b'}, {PolySequenceKind::Z, 'z'},
        {PolySequenceKind::D, 'd'}, {PolySequenceKind::DTilde, 't'}};
    for (int y0 = -3; y0 <= 10; ++y0) {
        mpz_class y(y0);
        auto oracle = recurrence_values(y, 10);
        for (auto [kind, tag] : kinds) {
            for (unsigned i = 0; i <= 10; ++i) {
                CHECK(poly_sequence(kind, i).eval(y) == oracle[tag][i]);
            }
        }
    }
}

TEST_CASE("reduction laws at y = 0 and y = -1") {
    for (unsigned i = 0; i <= 10; ++i) {
        const IntPoly f = poly_sequence(PolySequenceKind::F, i);
        const IntPoly b = poly_sequence(PolySequenceKind::B, i);
        CHECK(f.eval(0) == 1);                       // f_i = 1 mod y
        CHECK(b.eval(0) == (i % 2 == 0 ? 1 : 0));    // b_i mod y alternates
        CHECK(f.eval(-1) == (i % 2 == 0 ? 0 : 2));   // f_i mod y+1 alternates
        if (i > 0) CHECK(b.eval(-1) == -1);          // b_i = -1 mod y+1
    }
}

TEST_CASE("identity suite") {
    auto checks = wpslab::verify_identities(10);
    // six identity families; two start at index 1
    CHECK(checks.size() == 4 * 11 + 2 * 10);
    for (const auto& c : checks) {
        INFO(c.name, " at ", c.index);
        CHECK(c.holds);
    }
}

TEST_CASE("single identity instances match hand expansion") {
    auto checks = wpslab::verify_identities(1);
    for (const auto& c : checks) CHECK(c.holds);
    // index-0 instance of the prefix-z product: y - 1 = -1 + 1*(y)
    IntPoly lhs = poly_sequence(PolySequenceKind::Z, 0);
    CHECK(lhs == IntPoly({-1, 1}));
    // index-1 instance: (y+1)(y^2-y+1) = 1 + y*y^2
    CHECK(poly_sequence(PolySequenceKind::F, 0) *
              poly_sequence(PolySequenceKind::Z, 1) ==
          IntPoly({1, 0, 0, 1}));
}
