#pragma once

#include <string>
#include <vector>

#include "mixnet/norms.hpp"
#include "mixnet/pointset.hpp"

namespace mixnet::bounds {

// Exact rational gamma_b(d): B / (b(b+1)(b^3-1)) with
// B = ((b^2-1)/(12 b^2))^d b^3 / (d-1)!.
Rat gamma_rat(long long b, int d);

// g(y) = B (y^2/(b(b^2-1)) - y^3/(b^3-1)); gamma_b is its minimum over
// y in [1/b, 1], attained at both endpoints.
Rat gamma_candidate(long long b, int d, const Rat& y);

// c(b, d) = sqrt(gamma_b / (log b)^(d-1)); nonincreasing in b.
double c_const(long long b, int d);

// Roth L2 lower-bound constant c_d = c(2, d);
// c_2 = 1/(8 sqrt(21) sqrt(log 2)) = 0.032763...
double roth_constant(int d);

// Exact rational gammabar_b(d) = B (4/27)(b^2+b+1)^2 / ((b-1)(b+1)^3 b^3),
// from the maximizer y = (2/3)(b^2+b+1)/(b(b+1)).
Rat gamma_bar_rat(long long b, int d);

// limsup constant sqrt(gammabar_2 / (log 2)^(d-1)); d = 2 gives
// 7/(216 sqrt(log 2)) = 0.038925...
double limsup_constant(int d);

// Reference upper constants (metadata only, never asserted against our sets).
double upper_constant_2();       // 0.179070...
double upper_constant_d(int d);  // 22^d / (sqrt((d-1)!) (log 2)^((d-1)/2))

struct IdentityReport {
    bool ok;
    double max_err;
    long long worst_b;
};

// For b = 2..b_max checks
//   sum_l cot^2(l pi / (2b))     = (2b-1)(b-1)/3,
//   sum_l cot^2(l pi / (2b-1))   = (2b-3)(b-1)/3,
//   sum_l |w^l - 1|^(-2)         = (b^2-1)/12,
// each to within tol.
IdentityReport verify_identities(long long b_max, double tol = 1e-9);

struct Exponents {
    double alpha;       // power of log N in the lower bound
    double beta;        // power of log N in the upper bound
    std::string note;   // e.g. the non-constructive eta_d shift
};

// (alpha, beta) per L_p regime: "inf", "mid" (1 < p < inf), "one".
Exponents exponent_table(const std::string& regime, int d);

// JSON report: measured norms, rate envelopes, and the asserted L2 lower
// bound. Throws std::runtime_error if the Roth bound fails for an L2 entry.
std::string bound_report(const PointSet& P, const std::vector<norms::NormReport>& measurements);

}  // namespace mixnet::bounds
