#pragma once

#include <vector>

#include "mixnet/common.hpp"

namespace mixnet::badic {

// A vector of base-b digits. The meaning of the ordering depends on use:
// digits_of/value_of use least-significant-first (index digits r_0, r_1, ...),
// phi_map and vn_weight treat entry k (0-based) as the coefficient of b^-(k+1)
// (coordinate digits a_1, ..., a_n).
struct DigitVector {
    std::vector<int> digits;
    long long b;
};

DigitVector digits_of(long long k, long long b, int n);
long long value_of(const DigitVector& dv);

// r_b(i) = i_0/b + i_1/b^2 + ..., exact.
Rat bit_reversal(long long i, long long b);

// NRT weight: number of base-b digits of alpha (0 for alpha = 0).
int nrt_weight(long long alpha, long long b);
int nrt_weight(const std::vector<long long>& alpha, long long b);
// Hamming weight: count of nonzero base-b digits.
int hamming_weight(long long alpha, long long b);
int hamming_weight(const std::vector<long long>& alpha, long long b);

// v_n(a): largest 1-based index of a nonzero digit (phi convention), 0 for zero.
int vn_weight(const DigitVector& a);
int vn_weight(const std::vector<DigitVector>& a);

// Phi_n(a) = a_1/b + ... + a_n/b^n for each component, returned as numerators
// over b^n.
long long phi_map_1d(const DigitVector& a);
std::vector<long long> phi_map(const std::vector<DigitVector>& a);

// b-adic interval I_{jm} in [0,1)^d: levels j_i in {-1,0,1,...}, positions m.
struct BadicInterval {
    std::vector<int> j;
    std::vector<long long> m;
    long long b;

    // volume = b^-|j| (|j| sums only the non-(-1) levels)
    Rat volume() const;
    int order() const;  // |j|
};

// Haar index (j, m, l) with derived data.
struct HaarIndex {
    std::vector<int> j;        // levels, -1 allowed
    std::vector<long long> m;  // positions, m_i in D_{j_i}
    std::vector<int> l;        // l_i in {1..b-1} for j_i >= 0, l_i = 1 for j_i = -1

    int s() const;      // number of coordinates with j_i != -1
    int abs_j() const;  // |j|
};

// Locate the interval containing the exact point x (numerators over denom) at
// level vector j. Returns (m, k); k_i = -1 for j_i = -1. A point on a child's
// left boundary belongs to that child (half-open convention).
struct Location {
    std::vector<long long> m;
    std::vector<int> k;
};
Location locate(const std::vector<long long>& num, long long denom, const std::vector<int>& j, long long b);

}  // namespace mixnet::badic
