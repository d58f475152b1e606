#pragma once

#include <vector>

#include "mixnet/common.hpp"

namespace mixnet::gf {

// Trial division; intended range b <= 10^6.
bool is_prime(long long b);

void require_prime(long long b);

// Element of the prime field F_b.
struct FieldElem {
    long long v;
    long long b;

    FieldElem(long long value, long long modulus);
};

FieldElem ff_add(const FieldElem& a, const FieldElem& c);
FieldElem ff_sub(const FieldElem& a, const FieldElem& c);
FieldElem ff_mul(const FieldElem& a, const FieldElem& c);
FieldElem ff_inv(const FieldElem& a);
FieldElem ff_div(const FieldElem& a, const FieldElem& c);

// Polynomial over F_b, coeffs[i] multiplies z^i. The zero polynomial has an
// empty coefficient vector and degree 0 by convention.
struct FieldPoly {
    std::vector<long long> coeffs;
    long long b;

    FieldPoly(std::vector<long long> cs, long long modulus);

    bool is_zero() const { return coeffs.empty(); }
    long long degree() const { return coeffs.empty() ? 0 : (long long)coeffs.size() - 1; }
};

FieldPoly poly_add(const FieldPoly& f, const FieldPoly& g);
FieldPoly poly_mul(const FieldPoly& f, const FieldPoly& g);

long long poly_eval(const FieldPoly& f, long long z);

// Binomial coefficients mod b by Pascal recurrence, rows 0..maxn.
std::vector<std::vector<long long>> binomials_mod(int maxn, long long b);

// lambda-th Hasse hyper-derivative: coefficient of z^(i-lambda) is C(i,lambda)*f_i mod b.
FieldPoly hasse_derivative(const FieldPoly& f, int lambda);

}  // namespace mixnet::gf
