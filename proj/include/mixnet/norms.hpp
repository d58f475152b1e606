#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mixnet/pointset.hpp"

namespace mixnet::norms {

// D_P(x) = sum_z a_z chi_{[0,x)}(z) - x_1...x_d, a_z = 1/N by default.
double disc_eval(const PointSet& P, const std::vector<double>& x);
Rat disc_eval_rat(const PointSet& P, const std::vector<Rat>& x);

// Exact squared L2 norm of D_P by the pair-sum closed form.
Rat l2_disc_squared(const PointSet& P);
double l2_disc(const PointSet& P);

// Exact sup norm over the closed cube via the critical grid of point
// coordinates and 1, with open/closed corrections. Budget (N+1)^d <= 10^7.
Rat star_disc_rat(const PointSet& P);
double star_disc(const PointSet& P);

struct LpMethod {
    enum Kind { grid, mc } kind = grid;
    long long samples = 100000;
    std::uint64_t seed = 1;
};

struct LpResult {
    double value;
    double error_estimate;  // 0 for exact paths
    bool exact;
};

// L_p norm of D_P. The grid path is exact for d = 1 (any integer p >= 1) and
// d = 2 (even p); otherwise Monte Carlo with the given samples/seed.
LpResult lp_disc(const PointSet& P, int p, const LpMethod& method = {});

// sup_x |(1/n) sum_{j<=n} chi_{[0,x)}(u_j) - x|.
Rat seq_disc(const std::vector<Rat>& u, long long n);

struct BesovParams {
    double p = 2;  // use INFINITY for the sup modification
    double q = 2;
    double r = 0;
    double eps_tail = 1e-12;
};

struct NormReport {
    std::string kind;
    double value = 0;
    double p = 0, q = 0, r = 0;
    long long b = 0;
    int n = 0, d = 0;
    long long N = 0;
    double head = 0, tail = 0, tail_bound = 0;
    std::string family;

    std::string to_json() const;
};

// Haar quasi-norm of D_P with smoothness r and integrabilities p, q:
// (sum_j b^(|j|(r-1/p+1)q) (sum_{m,l} |mu_jml|^p)^(q/p))^(1/q).
// Head: levels with every j_i < n, exact coefficients. Tail: levels with some
// j_i >= n, where the coefficient is the negated volume coefficient, summed
// shell by shell until the relative increment drops below eps_tail.
NormReport besov_quasinorm(const PointSet& P, const BesovParams& params);

NormReport make_report(const std::string& kind, double value, const PointSet& P);

}  // namespace mixnet::norms
