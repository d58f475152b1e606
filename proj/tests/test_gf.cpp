#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixnet/gf.hpp"

using namespace mixnet;
using namespace mixnet::gf;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS(require_prime(10));
}

TEST_CASE("field arithmetic in F_7") {
    FieldElem a(3, 7), c(5, 7);
    CHECK(ff_add(a, c).v == 1);
    CHECK(ff_sub(a, c).v == 5);
    CHECK(ff_mul(a, c).v == 1);
    CHECK(ff_inv(a).v == 5);
    CHECK(ff_div(FieldElem(1, 7), a).v == 5);
    CHECK_THROWS(ff_inv(FieldElem(0, 7)));
    CHECK_THROWS(ff_add(FieldElem(1, 7), FieldElem(1, 5)));
}

TEST_CASE("polynomial arithmetic") {
    FieldPoly f({1, 2, 1}, 5);  // 1 + 2z + z^2
    FieldPoly g({4, 3}, 5);     // 4 + 3z
    auto s = poly_add(f, g);
    CHECK(s.coeffs == std::vector<long long>{0, 0, 1});
    auto p = poly_mul(f, g);
    // (1+2z+z^2)(4+3z) = 4 + 11z + 10z^2 + 3z^3 = 4 + z + 0 + 3z^3 mod 5
    CHECK(p.coeffs == std::vector<long long>{4, 1, 0, 3});
    CHECK(poly_eval(f, 2) == (1 + 4 + 4) % 5);
    FieldPoly z({}, 5);
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
    CHECK(poly_add(f, z).coeffs == f.coeffs);
}

TEST_CASE("binomials mod b") {
    auto B = binomials_mod(6, 5);
    CHECK(B[4][2] == 6 % 5);
    CHECK(B[5][1] == 0);  // 5 mod 5
    CHECK(B[6][3] == 20 % 5);
}

TEST_CASE("Hasse derivative basics") {
    // first derivative of z^2 in F_5 is 2z
    FieldPoly f({0, 0, 1}, 5);
    auto d1 = hasse_derivative(f, 1);
    CHECK(d1.coeffs == std::vector<long long>{0, 2});
    // order-2 derivative of z^3 in F_7 is C(3,2) z = 3z
    FieldPoly g({0, 0, 0, 1}, 7);
    auto d2 = hasse_derivative(g, 2);
    CHECK(d2.coeffs == std::vector<long long>{0, 3});
    // order 0 is the polynomial itself
    CHECK(hasse_derivative(g, 0).coeffs == g.coeffs);
    // beyond the degree: zero
    CHECK(hasse_derivative(g, 4).is_zero());
}

TEST_CASE("Hasse derivative shift expansion on monomials") {
    // f(z + a) = sum_lambda (d^lambda f)(a) z^lambda
    for (long long b : {2LL, 3LL, 5LL, 11LL}) {
        for (int deg = 0; deg <= 8; ++deg) {
            std::vector<long long> cs(deg + 1, 0);
            cs[deg] = 1;
            FieldPoly f(cs, b);
            for (long long a = 0; a < b; ++a) {
                for (long long z = 0; z < b; ++z) {
                    long long lhs = poly_eval(f, (z + a) % b);
                    long long rhs = 0, zp = 1;
                    for (int lam = 0; lam <= deg; ++lam) {
                        rhs = (rhs + poly_eval(hasse_derivative(f, lam), a) * zp) % b;
                        zp = zp * z % b;
                    }
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("Hasse derivative product rule") {
    // d^lam(fg) = sum_{i+j=lam} d^i f d^j g
    for (long long b : {5LL, 11LL}) {
        FieldPoly f({1, 2, 0, 3}, b);
        FieldPoly g({2, 1, 4}, b);
        auto fg = poly_mul(f, g);
        for (int lam = 0; lam <= 5; ++lam) {
            FieldPoly lhs = hasse_derivative(fg, lam);
            FieldPoly rhs({}, b);
            for (int i = 0; i <= lam; ++i)
                rhs = poly_add(rhs, poly_mul(hasse_derivative(f, i), hasse_derivative(g, lam - i)));
            for (long long z = 0; z < b; ++z) REQUIRE(poly_eval(lhs, z) == poly_eval(rhs, z));
        }
    }
}
