#pragma once

#include <string>
#include <vector>

#include "mixnet/badic.hpp"
#include "mixnet/pointset.hpp"

namespace mixnet::haar {

using badic::HaarIndex;

// h_{jml}(x): product over coordinates of the level-j_i Haar factor; the
// all-(-1) index gives the constant 1.
cplx haar_eval(const HaarIndex& idx, const std::vector<double>& x, long long b);

// Haar coefficient of the volume term x_1 * ... * x_d.
cplx coeff_volume(const HaarIndex& idx, long long b);

// Haar coefficient of the corner indicator x -> chi_{[0,x)}(z) as a function
// of x, for exact z = num/denom. Zero when z lies outside the interior of
// I_{jm} (the bracket formula degenerates to 0 on the left edge by itself).
cplx coeff_indicator(const std::vector<long long>& znum, long long denom, const HaarIndex& idx, long long b);

struct HaarSpectrum {
    long long b = 0;
    int d = 0;
    int J = -1;
    std::string source;
    std::vector<std::pair<HaarIndex, cplx>> entries;  // complete over levels <= J
};

// mu_{jml}(D_P) for every index with all j_i <= J (budget: total index count
// <= 2*10^6). Weighted sets use their stored a_z.
HaarSpectrum disc_spectrum(const PointSet& P, int J);

// All coefficients of one level vector j (every m in D_j, every l).
std::vector<std::pair<HaarIndex, cplx>> level_spectrum(const PointSet& P, const std::vector<int>& j);

void write_spectrum_csv(const HaarSpectrum& S, const std::string& path);

// sum_{m,l} |mu_{jml}(D_P)|^p for one level vector j. Occupied boxes are
// enumerated; the empty ones contribute the closed-form volume coefficient.
double level_power_sum(const PointSet& P, const std::vector<int>& j, double p);

// sup_{m,l} |mu_{jml}(D_P)| for one level vector.
double level_sup(const PointSet& P, const std::vector<int>& j);

struct ParsevalResult {
    double sum;
    double reference;
    double gap;  // reference - sum
};

// Truncated Parseval sum sum_{j <= J} b^{|j|} sum_{m,l} |mu|^2 against a
// squared-L2 reference.
ParsevalResult parseval_check(const PointSet& P, int J, double l2_squared_reference);

}  // namespace mixnet::haar
