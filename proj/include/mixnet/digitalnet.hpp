#pragma once

#include <utility>
#include <vector>

#include "mixnet/pointset.hpp"

namespace mixnet::digitalnet {

// d generating matrices of size n x n over F_b. C[i][r][c]: matrix i, row r,
// column c (0-based). Row r produces coordinate digit a_{r+1} (coefficient of
// b^-(r+1)); column c acts on index digit r_c (least significant first).
struct GeneratingMatrices {
    long long b;
    int n;
    int d;
    std::vector<std::vector<std::vector<int>>> C;
};

// All b^n points of the digital net: point r has coordinate i = Phi_n(C_i rbar).
PointSet digital_points(const GeneratingMatrices& G);

// Smallest v such that every b-adic interval of order n-v contains exactly b^v
// points (strict quality parameter). Brute-force fairness scan.
int net_quality(const PointSet& P, long long b, int n);

// Largest rho such that for every (gamma_1..gamma_d) >= 0 with sum rho the
// first gamma_i rows of C_i taken together are linearly independent.
int lin_indep_param(const GeneratingMatrices& G);

// Kernel of t -> C_1^T tbar_1 + ... + C_d^T tbar_d, enumerated as integer
// tuples t in {0..b^n-1}^d. Contains 0.
std::vector<std::vector<long long>> dual_net(const GeneratingMatrices& G);

// Sum over points of wal_t; b^n iff t in dual net, else 0 (for digital nets).
cplx character_sum(const PointSet& P, const std::vector<long long>& t);

// F_b-linear subspace of F_b^(dn), row-reduced basis. Vector layout: block i
// (0-based) occupies entries [i*n, (i+1)*n), entry i*n + (nu-1) is digit
// a_{i,nu} in the phi convention.
struct LinearSubspace {
    long long b;
    int n;
    int d;
    std::vector<std::vector<int>> basis;

    int dim() const { return (int)basis.size(); }
};

// Row-reduce arbitrary spanning vectors into a LinearSubspace.
LinearSubspace make_subspace(long long b, int n, int d, std::vector<std::vector<int>> vecs);

LinearSubspace dual_space(const LinearSubspace& V);

// Enumerate all b^dim elements (budget 10^6).
std::vector<std::vector<int>> enumerate_subspace(const LinearSubspace& V);

// (delta_n, kappa_n): minimum nonzero NRT / Hamming weight; (dn+1, dn+1) for
// the zero space. Throws BudgetError if b^dim > 10^6.
std::pair<int, int> min_distance(const LinearSubspace& V);

// Phi_n^d applied to every element of V.
PointSet subspace_points(const LinearSubspace& V);

// Subspace {(C_1 rbar, ..., C_d rbar)} of the digital net.
LinearSubspace row_space(const GeneratingMatrices& G);

struct DualityReport {
    int v_geometric;   // via net_quality(Phi_n^d(V))
    int v_from_dual;   // n + 1 - delta_n(V_perp), clamped to >= 0
    bool agree;
};

DualityReport duality_theorem_check(const LinearSubspace& V);

}  // namespace mixnet::digitalnet
