#include "mixnet/badic.hpp"

namespace mixnet::badic {

DigitVector digits_of(long long k, long long b, int n) {
    if (k < 0 || k >= ipow(b, n)) throw std::out_of_range("digits_of: k out of range");
    DigitVector dv{std::vector<int>(n, 0), b};
    for (int i = 0; i < n; ++i) {
        dv.digits[i] = (int)(k % b);
        k /= b;
    }
    return dv;
}

long long value_of(const DigitVector& dv) {
    long long v = 0;
    for (size_t i = dv.digits.size(); i-- > 0;) v = v * dv.b + dv.digits[i];
    return v;
}

Rat bit_reversal(long long i, long long b) {
    Rat r = 0;
    BigInt den = b;
    while (i > 0) {
        r += Rat(BigInt(i % b), den);
        den *= b;
        i /= b;
    }
    return r;
}

int nrt_weight(long long alpha, long long b) {
    int h = 0;
    while (alpha > 0) {
        ++h;
        alpha /= b;
    }
    return h;
}

int nrt_weight(const std::vector<long long>& alpha, long long b) {
    int s = 0;
    for (long long a : alpha) s += nrt_weight(a, b);
    return s;
}

int hamming_weight(long long alpha, long long b) {
    int h = 0;
    while (alpha > 0) {
        if (alpha % b != 0) ++h;
        alpha /= b;
    }
    return h;
}

int hamming_weight(const std::vector<long long>& alpha, long long b) {
    int s = 0;
    for (long long a : alpha) s += hamming_weight(a, b);
    return s;
}

int vn_weight(const DigitVector& a) {
    for (size_t i = a.digits.size(); i-- > 0;)
        if (a.digits[i] != 0) return (int)i + 1;
    return 0;
}

int vn_weight(const std::vector<DigitVector>& a) {
    int s = 0;
    for (const auto& c : a) s += vn_weight(c);
    return s;
}

long long phi_map_1d(const DigitVector& a) {
    long long num = 0;
    for (int d : a.digits) num = num * a.b + d;
    // digits entry k is a_{k+1}, so reading front-to-back builds
    // a_1 b^{n-1} + ... + a_n over b^n.
    return num;
}

std::vector<long long> phi_map(const std::vector<DigitVector>& a) {
    std::vector<long long> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(phi_map_1d(c));
    return out;
}

Rat BadicInterval::volume() const {
    return Rat(1, BigInt(ipow(b, order())));
}

int BadicInterval::order() const {
    int s = 0;
    for (int ji : j)
        if (ji >= 0) s += ji;
    return s;
}

int HaarIndex::s() const {
    int c = 0;
    for (int ji : j)
        if (ji != -1) ++c;
    return c;
}

int HaarIndex::abs_j() const {
    int c = 0;
    for (int ji : j)
        if (ji >= 0) c += ji;
    return c;
}

Location locate(const std::vector<long long>& num, long long denom, const std::vector<int>& j, long long b) {
    Location loc;
    loc.m.resize(j.size());
    loc.k.resize(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i] < 0) {
            loc.m[i] = 0;
            loc.k[i] = -1;
            continue;
        }
        // m = floor(b^j * x), k = floor(b^(j+1) * x) - b*m, exact in integers
        BigInt scaled = BigInt(num[i]) * ipow(b, j[i]);
        long long m = (long long)(scaled / denom);
        BigInt scaled2 = scaled * b;
        long long c = (long long)(scaled2 / denom);
        loc.m[i] = m;
        loc.k[i] = (int)(c - b * m);
    }
    return loc;
}

}  // namespace mixnet::badic
