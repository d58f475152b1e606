#include "mixnet/generators.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mixnet/badic.hpp"
#include "mixnet/gf.hpp"

namespace mixnet::generators {

namespace {

// Common denominator of a list of exact rational points.
PointSet from_rationals(const std::vector<std::vector<Rat>>& pts, int d, const std::string& family) {
    BigInt den = 1;
    for (const auto& p : pts)
        for (const auto& x : p) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    if (den > BigInt(4611686018427387904LL)) throw std::overflow_error("common denominator too large");
    PointSet P;
    P.d = d;
    P.denom = (long long)den;
    P.family = family;
    P.num.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<long long> row(d);
        for (int c = 0; c < d; ++c)
            row[c] = (long long)(boost::multiprecision::numerator(p[c]) * (den / boost::multiprecision::denominator(p[c])));
        P.num.push_back(std::move(row));
    }
    return P;
}

}  // namespace

PointSet equidistant(long long N) {
    if (N < 1) throw std::invalid_argument("equidistant: N >= 1 required");
    PointSet P;
    P.d = 1;
    P.denom = 2 * N;
    P.family = "equidistant";
    P.num.reserve(N);
    for (long long k = 0; k < N; ++k) P.num.push_back({2 * k + 1});
    return P;
}

std::vector<Rat> kronecker(double theta, long long N) {
    const long long Q = 1LL << 40;
    std::vector<Rat> u;
    u.reserve(N);
    for (long long j = 1; j <= N; ++j) {
        double f = std::fmod(theta * (double)j, 1.0);
        if (f < 0) f += 1.0;
        long long q = (long long)std::llround(f * (double)Q) % Q;
        u.emplace_back(BigInt(q), BigInt(Q));
    }
    return u;
}

cplx weyl_sum(double theta, long long k, long long N) {
    if (k == 0) throw std::invalid_argument("weyl_sum: k != 0 required");
    cplx S = 0;
    for (long long j = 1; j <= N; ++j) {
        double f = std::fmod(theta * (double)j, 1.0);
        double ang = 2.0 * PI * (double)k * f;
        S += cplx{std::cos(ang), std::sin(ang)};
    }
    return S / (double)N;
}

PointSet lift_sequence(const std::vector<Rat>& u, long long N) {
    if ((long long)u.size() < N) throw std::invalid_argument("lift_sequence: not enough sequence terms");
    std::vector<std::vector<Rat>> pts;
    pts.reserve(N);
    for (long long k = 1; k <= N; ++k) {
        Rat x = (k == N) ? Rat(0) : Rat(BigInt(k), BigInt(N));
        pts.push_back({x, u[k - 1]});
    }
    return from_rationals(pts, 2, "lifted");
}

PointSet halton(long long N, const std::vector<long long>& bases) {
    if (N < 1) throw std::invalid_argument("halton: N >= 1 required");
    for (size_t i = 0; i < bases.size(); ++i) {
        gf::require_prime(bases[i]);
        for (size_t j = i + 1; j < bases.size(); ++j)
            if (bases[i] == bases[j]) throw std::invalid_argument("halton: bases must be distinct");
    }
    std::vector<std::vector<Rat>> pts;
    pts.reserve(N);
    for (long long i = 0; i < N; ++i) {
        std::vector<Rat> p;
        p.emplace_back(BigInt(i), BigInt(N));
        for (long long b : bases) p.push_back(badic::bit_reversal(i, b));
        pts.push_back(std::move(p));
    }
    return from_rationals(pts, (int)bases.size() + 1, "halton");
}

PointSet van_der_corput(long long N) {
    PointSet P = halton(N, {2});
    P.family = "vdc";
    return P;
}

int HammersleyPattern::a_n() const {
    int a = 0;
    for (bool s : sigma)
        if (s) ++a;
    return a;
}

std::string HammersleyPattern::tag() const {
    std::string t;
    for (bool s : sigma) t += s ? 's' : 'c';
    return t;
}

HammersleyPattern HammersleyPattern::parse(const std::string& s) {
    HammersleyPattern p;
    for (char c : s) {
        if (c == 's')
            p.sigma.push_back(true);
        else if (c == 'c')
            p.sigma.push_back(false);
        else
            throw std::invalid_argument("pattern must consist of 's' and 'c'");
    }
    return p;
}

HammersleyPattern HammersleyPattern::canonical(int n, int an) {
    if (an < 0 || an > n) throw std::invalid_argument("canonical pattern: 0 <= an <= n required");
    HammersleyPattern p;
    p.sigma.assign(n, false);
    for (int i = 0; i < an; ++i) p.sigma[i] = true;
    return p;
}

PointSet hammersley(long long b, int n, const HammersleyPattern& pat) {
    if (b < 2 || n < 1) throw std::invalid_argument("hammersley: b >= 2, n >= 1 required");
    if ((int)pat.sigma.size() != n) throw std::invalid_argument("hammersley: pattern length must equal n");
    long long N = ipow(b, n);
    PointSet P;
    P.d = 2;
    P.b = b;
    P.n = n;
    P.badic = true;
    P.denom = N;
    P.family = "hammersley-" + pat.tag();
    P.num.reserve(N);
    std::vector<int> t(n);  // t[i] = t_{i+1}
    for (long long idx = 0; idx < N; ++idx) {
        long long v = idx;
        for (int i = 0; i < n; ++i) {
            t[i] = (int)(v % b);
            v /= b;
        }
        // x = t_n/b + ... + t_1/b^n: digit a_k of x is t_{n+1-k}
        long long x = 0, y = 0;
        for (int k = 1; k <= n; ++k) {
            x = x * b + t[n - k];
            int s = pat.sigma[k - 1] ? t[k - 1] : (int)(b - 1 - t[k - 1]);
            y = y * b + s;
        }
        P.num.push_back({x, y});
    }
    return P;
}

digitalnet::GeneratingMatrices chen_skriganov_matrices(int d, long long b, int w) {
    gf::require_prime(b);
    if (b < 2LL * d * d) throw std::invalid_argument("chen_skriganov: b >= 2d^2 required");
    if (w < 1) throw std::invalid_argument("chen_skriganov: w >= 1 required");
    int n = 2 * d * w;
    auto binom = gf::binomials_mod(n, b);
    digitalnet::GeneratingMatrices G;
    G.b = b;
    G.n = n;
    G.d = d;
    G.C.assign(d, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (int i = 1; i <= d; ++i) {
        for (int k = 0; k < n; ++k) {
            // column k: a_i(z^k), entry (nu-1)w + lambda holds d^(lambda-1)(z^k)(beta)
            for (int nu = 1; nu <= 2 * d; ++nu) {
                long long beta = ((long long)(i - 1) * 2 * d + (nu - 1)) % b;
                for (int lam = 1; lam <= w; ++lam) {
                    // Hasse derivative of z^k of order lambda-1 at beta:
                    // C(k, lam-1) * beta^(k-lam+1)
                    long long val = 0;
                    if (k >= lam - 1) {
                        long long pw = 1;
                        for (int e = 0; e < k - lam + 1; ++e) pw = pw * beta % b;
                        val = binom[k][lam - 1] * pw % b;
                    }
                    G.C[i - 1][(nu - 1) * w + (lam - 1)][k] = (int)val;
                }
            }
        }
    }
    return G;
}

PointSet chen_skriganov(int d, long long b, int w, long long budget) {
    auto G = chen_skriganov_matrices(d, b, w);
    double sz = std::pow((double)b, (double)G.n);
    if (sz > (double)budget + 0.5) throw BudgetError("chen_skriganov: b^n exceeds generation budget");
    PointSet P = digital_points(G);
    P.family = "cs-d" + std::to_string(d) + "w" + std::to_string(w);
    return P;
}

PointSet rescale_first_coordinate(const PointSet& P, long long N) {
    if (!P.badic) throw std::invalid_argument("rescale: b-adic point set required");
    long long bn = P.denom;
    if (N < 1 || N > bn) throw std::invalid_argument("rescale: 1 <= N <= b^n required");
    PointSet Q;
    Q.d = P.d;
    Q.family = P.family + "-rescaled";
    Q.denom = N * bn;
    for (size_t i = 0; i < P.size(); ++i) {
        if (P.num[i][0] >= N) continue;
        std::vector<long long> row(P.d);
        row[0] = P.num[i][0] * bn;
        for (int c = 1; c < P.d; ++c) row[c] = P.num[i][c] * N;
        Q.num.push_back(std::move(row));
    }
    if ((long long)Q.num.size() != N)
        throw std::invalid_argument("rescale: point count mismatch (input not a (0,n,d)-net?)");
    return Q;
}

}  // namespace mixnet::generators
