#include "mixnet/walsh.hpp"

#include <cmath>
#include <stdexcept>

#include "mixnet/badic.hpp"

namespace mixnet::walsh {

namespace {

constexpr double DIGIT_GUARD = 1e-12;

long long rho(long long t, long long b) {
    return badic::nrt_weight(t, b);
}

}  // namespace

cplx wal_eval_1d(long long alpha, double x, long long b) {
    long long e = 0;
    double y = x;
    // The representation error of x is amplified by b with every extracted
    // digit, so the snapping tolerance has to grow along with it (capped well
    // below half a digit).
    double tol = DIGIT_GUARD;
    while (alpha > 0) {
        long long a = alpha % b;
        alpha /= b;
        y *= (double)b;
        tol = std::min(tol * (double)b, 0.25);
        long long dig = (long long)std::floor(y + tol);
        if (dig >= b) dig = b - 1;
        if (dig < 0) dig = 0;
        y -= (double)dig;
        if (y < 0) y = 0;
        e += a * dig;
    }
    return root_of_unity(e, b);
}

cplx wal_eval(const std::vector<long long>& alpha, const std::vector<double>& x, long long b) {
    cplx v = 1;
    for (size_t i = 0; i < alpha.size(); ++i) v *= wal_eval_1d(alpha[i], x[i], b);
    return v;
}

cplx chi_hat(long long t, double y, long long b) {
    if (y <= 0) return 0;
    if (y > 1) y = 1;
    if (t == 0) return y;
    int r = (int)rho(t, b);
    long long brho = ipow(b, r);
    long long M = (long long)std::floor(y * (double)brho + DIGIT_GUARD);
    if (M > brho) M = brho;
    auto td = badic::digits_of(t, b, r).digits;  // t_0 .. t_{r-1}
    // sum over m < M of conj(wal_t(m b^-rho)): exponent -sum_q m_q t_{r-1-q};
    // since the q=0 coefficient t_{r-1} != 0, splitting m < M by the highest
    // differing digit kills every branch except the lowest one.
    cplx S = 0;
    std::vector<int> Md(r, 0);
    if (M < brho) {
        long long mm = M;
        for (int q = 0; q < r; ++q) {
            Md[q] = (int)(mm % b);
            mm /= b;
        }
        long long phase = 0;
        for (int q = 1; q < r; ++q) phase -= (long long)Md[q] * td[r - 1 - q];
        cplx inner = 0;
        for (int v = 0; v < Md[0]; ++v) inner += root_of_unity(-(long long)v * td[r - 1], b);
        S = root_of_unity(phase, b) * inner;
    }
    // conj(wal_t(M b^-rho)); wal at 1 is 1
    long long we = 0;
    if (M < brho)
        for (int q = 0; q < r; ++q) we -= (long long)Md[q] * td[r - 1 - q];
    double rem = y - (double)M / (double)brho;
    return S / (double)brho + rem * root_of_unity(we, b);
}

cplx fine_price_series(long long t, double y, long long b, int A) {
    if (A < 1) throw std::invalid_argument("fine_price_series: A >= 1 required");
    if (t == 0) {
        cplx v = 0.5;
        for (int a = 1; a <= A; ++a) {
            double ba = (double)ipow(b, a);
            for (long long z = 1; z < b; ++z)
                v += wal_eval_1d(z * ipow(b, a - 1), y, b) / (ba * (root_of_unity(-z, b) - 1.0));
        }
        return v;
    }
    int r = (int)rho(t, b);
    long long tau = t / ipow(b, r - 1);
    long long tp = t - tau * ipow(b, r - 1);
    cplx v = std::conj(wal_eval_1d(tp, y, b)) / (1.0 - root_of_unity(-tau, b));
    v += (1.0 / (root_of_unity(-tau, b) - 1.0) + 0.5) * std::conj(wal_eval_1d(t, y, b));
    for (int a = 1; a <= A; ++a) {
        double ba = (double)ipow(b, a);
        for (long long z = 1; z < b; ++z)
            v += std::conj(wal_eval_1d(z * ipow(b, r + a - 1) + t, y, b)) / (ba * (root_of_unity(z, b) - 1.0));
    }
    return v / (double)ipow(b, r);
}

cplx haar_walsh_inner(int j, long long m, int l, long long alpha, long long b) {
    if (j == -1) return alpha == 0 ? 1 : 0;
    if (rho(alpha, b) != j + 1) return 0;
    long long lead = alpha / ipow(b, j);
    if (lead % b != l) return 0;
    // phase from the first j digits of m (most significant first)
    long long phi = 0;
    long long a = alpha;
    for (int nu = 0; nu < j; ++nu) {
        long long anu = a % b;
        a /= b;
        long long mdig = (m / ipow(b, j - 1 - nu)) % b;
        phi += anu * mdig;
    }
    return std::pow((double)b, -(double)j) * root_of_unity(-phi, b);
}

cplx chihat_walsh_inner(long long t, long long alpha, long long b) {
    int r = (int)std::max(rho(t, b), rho(alpha, b));
    long long G = ipow(b, r);
    if (G > 10000000) throw BudgetError("chihat_walsh_inner: refinement grid too large");
    double h = 1.0 / (double)G;
    cplx sum = 0;
    cplx left = chi_hat(t, 0.0, b);
    for (long long c = 0; c < G; ++c) {
        cplx right = chi_hat(t, (double)(c + 1) * h, b);
        cplx w = std::conj(wal_eval_1d(alpha, ((double)c + 0.5) * h, b));
        sum += h * 0.5 * (left + right) * w;
        left = right;
    }
    return sum;
}

ThetaSplit theta_main(const PointSet& P, const std::vector<double>& y) {
    if (!P.gen) throw std::invalid_argument("theta_main: generating matrices unknown");
    return theta_main(P, y, digitalnet::dual_net(*P.gen));
}

ThetaSplit theta_main(const PointSet& P, const std::vector<double>& y,
                      const std::vector<std::vector<long long>>& dual) {
    long long b = P.b;
    int n = P.n, d = P.d;
    double N = (double)P.size();
    long long bn = ipow(b, n);
    cplx theta = 0;
    for (const auto& t : dual) {
        bool zero = true;
        for (long long ti : t)
            if (ti) zero = false;
        if (zero) continue;
        cplx prod = 1;
        for (int i = 0; i < d; ++i) prod *= chi_hat(t[i], y[i], b);
        theta += prod;
    }
    double prody = 1;
    for (int i = 0; i < d; ++i) prody *= y[i];
    // second route: averaged truncated-kernel overlap lengths
    double theta2 = 0;
    long long inside = 0;
    for (size_t z = 0; z < P.size(); ++z) {
        double prod = 1;
        bool in = true;
        for (int i = 0; i < d; ++i) {
            double ov = y[i] * (double)bn - (double)P.num[z][i];
            prod *= std::min(std::max(ov, 0.0), 1.0);
            if (!((double)P.num[z][i] / (double)bn < y[i])) in = false;
        }
        theta2 += prod;
        if (in) ++inside;
    }
    theta2 = theta2 / N - prody;
    ThetaSplit out;
    out.disc = (double)inside / N - prody;
    out.theta = theta.real();
    out.theta_kernel = theta2;
    out.rest = out.disc - out.theta;
    if (std::abs(theta.imag()) > 1e-9 || std::abs(out.theta - out.theta_kernel) > 1e-9)
        throw std::runtime_error("theta_main: dual-sum and kernel routes disagree");
    return out;
}

}  // namespace mixnet::walsh
