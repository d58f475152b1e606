#pragma once

#include <string>
#include <vector>

#include "mixnet/digitalnet.hpp"
#include "mixnet/pointset.hpp"

namespace mixnet::generators {

// {1/(2N) + k/N : k = 0..N-1}, exact over denominator 2N.
PointSet equidistant(long long N);

// u_j = {theta * j}, j = 1..N, quantized to denominator 2^40.
std::vector<Rat> kronecker(double theta, long long N);

// (1/N) sum_j e^(2 pi i k u_j) with u_j = {theta j}.
cplx weyl_sum(double theta, long long k, long long N);

// P = {(k/N mod 1, u_k)}, k = 1..N (k = N wraps to 0).
PointSet lift_sequence(const std::vector<Rat>& u, long long N);

// (i/N, r_{b_1}(i), ..., r_{b_{d-1}}(i)), i = 0..N-1.
PointSet halton(long long N, const std::vector<long long>& bases);

// Same as halton with bases = {2}, d = 2 (van der Corput lifted by i/N).
PointSet van_der_corput(long long N);

struct HammersleyPattern {
    // sigma[i-1] true: s_i = t_i ("same"); false: s_i = b-1-t_i ("complement")
    std::vector<bool> sigma;

    int a_n() const;
    std::string tag() const;  // e.g. "ssc"
    static HammersleyPattern parse(const std::string& s);   // from "ssc" style
    static HammersleyPattern canonical(int n, int an);      // first an same, rest complement
};

// x = t_n/b + ... + t_1/b^n, y = s_1/b + ... + s_n/b^n over all digit strings t.
PointSet hammersley(long long b, int n, const HammersleyPattern& pat);

// Generating matrices of the digital Chen-Skriganov net, n = 2dw.
digitalnet::GeneratingMatrices chen_skriganov_matrices(int d, long long b, int w);

PointSet chen_skriganov(int d, long long b, int w, long long budget = 200000);

// Keep points with first coordinate < N/b^n, scale it by b^n/N.
// Coordinates end up over the common denominator N * b^n.
PointSet rescale_first_coordinate(const PointSet& P, long long N);

}  // namespace mixnet::generators
