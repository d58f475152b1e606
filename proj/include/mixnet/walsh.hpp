#pragma once

#include <vector>

#include "mixnet/digitalnet.hpp"
#include "mixnet/pointset.hpp"

namespace mixnet::walsh {

// wal_alpha(x) = e^((2 pi i / b)(alpha_0 x_1 + alpha_1 x_2 + ...)), alpha_nu
// the base-b digits of alpha (least significant first), x_nu the base-b digits
// of x. Only the first rho(alpha) digits of x matter.
cplx wal_eval_1d(long long alpha, double x, long long b);
cplx wal_eval(const std::vector<long long>& alpha, const std::vector<double>& x, long long b);

// chi_hat(t, y) = integral_0^y conj(wal_t), exact piecewise integration:
// wal_t is constant on intervals of length b^-rho(t).
cplx chi_hat(long long t, double y, long long b);

// The series form of chi_hat truncated at depth A; agrees with chi_hat to
// within 2 b^(-rho(t)-A).
cplx fine_price_series(long long t, double y, long long b, int A);

// <h_{jml}, conj-paired wal_alpha> in one dimension, closed form:
// b^-j times a root of unity when rho(alpha) = j+1 and the leading digit of
// alpha equals l, else 0 (and 1 exactly when j = -1, alpha = 0).
cplx haar_walsh_inner(int j, long long m, int l, long long alpha, long long b);

// L2 inner product of y -> chi_hat(t, y) against wal_alpha, by exact
// piecewise integration on the common refinement grid.
cplx chihat_walsh_inner(long long t, long long alpha, long long b);

struct ThetaSplit {
    double disc;          // D_P(y)
    double theta;         // dual-net character sum
    double theta_kernel;  // same quantity via the truncated-kernel identity
    double rest;          // D_P(y) - theta
};

// Split D_P(y) = Theta_P(y) + R_P(y) for a digital net with known generating
// matrices. Computes Theta both ways and requires agreement <= 1e-9.
ThetaSplit theta_main(const PointSet& P, const std::vector<double>& y);
ThetaSplit theta_main(const PointSet& P, const std::vector<double>& y,
                      const std::vector<std::vector<long long>>& dual);

}  // namespace mixnet::walsh
