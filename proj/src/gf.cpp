#include "mixnet/gf.hpp"

namespace mixnet::gf {

bool is_prime(long long b) {
    if (b < 2) return false;
    if (b % 2 == 0) return b == 2;
    for (long long p = 3; p * p <= b; p += 2)
        if (b % p == 0) return false;
    return true;
}

void require_prime(long long b) {
    if (!is_prime(b)) throw std::invalid_argument("modulus " + std::to_string(b) + " is not prime");
}

FieldElem::FieldElem(long long value, long long modulus) : v(value), b(modulus) {
    require_prime(b);
    v %= b;
    if (v < 0) v += b;
}

static void check_same(const FieldElem& a, const FieldElem& c) {
    if (a.b != c.b) throw std::invalid_argument("modulus mismatch");
}

FieldElem ff_add(const FieldElem& a, const FieldElem& c) {
    check_same(a, c);
    return {(a.v + c.v) % a.b, a.b};
}

FieldElem ff_sub(const FieldElem& a, const FieldElem& c) {
    check_same(a, c);
    return {(a.v - c.v) % a.b, a.b};
}

FieldElem ff_mul(const FieldElem& a, const FieldElem& c) {
    check_same(a, c);
    return {(a.v * c.v) % a.b, a.b};
}

FieldElem ff_inv(const FieldElem& a) {
    if (a.v == 0) throw std::domain_error("division by zero in F_b");
    // Fermat: a^(b-2) mod b
    long long r = 1, base = a.v, e = a.b - 2;
    while (e > 0) {
        if (e & 1) r = r * base % a.b;
        base = base * base % a.b;
        e >>= 1;
    }
    return {r, a.b};
}

FieldElem ff_div(const FieldElem& a, const FieldElem& c) {
    check_same(a, c);
    return ff_mul(a, ff_inv(c));
}

FieldPoly::FieldPoly(std::vector<long long> cs, long long modulus) : coeffs(std::move(cs)), b(modulus) {
    require_prime(b);
    for (auto& c : coeffs) {
        c %= b;
        if (c < 0) c += b;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

FieldPoly poly_add(const FieldPoly& f, const FieldPoly& g) {
    if (f.b != g.b) throw std::invalid_argument("modulus mismatch");
    std::vector<long long> cs(std::max(f.coeffs.size(), g.coeffs.size()), 0);
    for (size_t i = 0; i < f.coeffs.size(); ++i) cs[i] += f.coeffs[i];
    for (size_t i = 0; i < g.coeffs.size(); ++i) cs[i] += g.coeffs[i];
    return {cs, f.b};
}

FieldPoly poly_mul(const FieldPoly& f, const FieldPoly& g) {
    if (f.b != g.b) throw std::invalid_argument("modulus mismatch");
    if (f.is_zero() || g.is_zero()) return {{}, f.b};
    std::vector<long long> cs(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        for (size_t j = 0; j < g.coeffs.size(); ++j)
            cs[i + j] = (cs[i + j] + f.coeffs[i] * g.coeffs[j]) % f.b;
    return {cs, f.b};
}

long long poly_eval(const FieldPoly& f, long long z) {
    z %= f.b;
    if (z < 0) z += f.b;
    long long acc = 0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = (acc * z + *it) % f.b;
    return acc;
}

std::vector<std::vector<long long>> binomials_mod(int maxn, long long b) {
    std::vector<std::vector<long long>> C(maxn + 1);
    for (int i = 0; i <= maxn; ++i) {
        C[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k) C[i][k] = (C[i - 1][k - 1] + C[i - 1][k]) % b;
    }
    return C;
}

FieldPoly hasse_derivative(const FieldPoly& f, int lambda) {
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
    if (lambda == 0) return f;
    if ((size_t)lambda >= f.coeffs.size()) return {{}, f.b};
    auto C = binomials_mod((int)f.coeffs.size() - 1, f.b);
    std::vector<long long> cs(f.coeffs.size() - lambda, 0);
    for (size_t i = lambda; i < f.coeffs.size(); ++i)
        cs[i - lambda] = C[i][lambda] * f.coeffs[i] % f.b;
    return {cs, f.b};
}

}  // namespace mixnet::gf
