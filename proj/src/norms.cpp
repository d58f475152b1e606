#include "mixnet/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "mixnet/haar.hpp"

namespace mixnet::norms {

namespace {

bool next_levels(std::vector<int>& j, int J) {
    for (size_t i = 0; i < j.size(); ++i) {
        if (j[i] < J) {
            ++j[i];
            for (size_t k = 0; k < i; ++k) j[k] = -1;
            return true;
        }
    }
    return false;
}

BigInt big_of_i128(unsigned __int128 v) {
    BigInt hi = (unsigned long long)(v >> 64);
    BigInt lo = (unsigned long long)v;
    return (hi << 64) + lo;
}

double binom_d(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (double)(n - k + i) / (double)i;
    return r;
}

}  // namespace

double disc_eval(const PointSet& P, const std::vector<double>& x) {
    double vol = 1;
    for (int c = 0; c < P.d; ++c) vol *= x[c];
    double cnt = 0;
    for (size_t i = 0; i < P.size(); ++i) {
        bool in = true;
        for (int c = 0; c < P.d && in; ++c)
            if (!((double)P.num[i][c] / (double)P.denom < x[c])) in = false;
        if (in) cnt += rat_to_double(P.weight(i));
    }
    return cnt - vol;
}

Rat disc_eval_rat(const PointSet& P, const std::vector<Rat>& x) {
    Rat vol = 1;
    for (int c = 0; c < P.d; ++c) vol *= x[c];
    Rat cnt = 0;
    for (size_t i = 0; i < P.size(); ++i) {
        bool in = true;
        for (int c = 0; c < P.d && in; ++c)
            if (!(P.coord_rat(i, c) < x[c])) in = false;
        if (in) cnt += P.weight(i);
    }
    return cnt - vol;
}

Rat l2_disc_squared(const PointSet& P) {
    const long long D = P.denom;
    const size_t N = P.size();
    const int d = P.d;
    Rat third = Rat(1);
    for (int c = 0; c < d; ++c) third /= 3;

    if (!P.weights) {
        // integer path: all weights 1/N, coordinates over one denominator
        double worst = std::pow((double)D, d) * (double)N * (double)N;
        if (worst < 1e36) {
            unsigned __int128 pair = 0;
            for (size_t i = 0; i < N; ++i)
                for (size_t k = i; k < N; ++k) {
                    unsigned __int128 prod = 1;
                    for (int c = 0; c < d; ++c) prod *= (unsigned __int128)(D - std::max(P.num[i][c], P.num[k][c]));
                    pair += (i == k) ? prod : 2 * prod;
                }
            BigInt Dd = 1;
            for (int c = 0; c < d; ++c) Dd *= D;
            Rat pairterm = Rat(big_of_i128(pair), BigInt(N) * BigInt(N) * Dd);
            BigInt mid = 0;
            for (size_t i = 0; i < N; ++i) {
                BigInt prod = 1;
                for (int c = 0; c < d; ++c) prod *= BigInt(D) * D - BigInt(P.num[i][c]) * P.num[i][c];
                mid += prod;
            }
            BigInt twoD2d = 1;
            for (int c = 0; c < d; ++c) twoD2d *= 2 * BigInt(D) * D;
            Rat midterm = 2 * Rat(mid, BigInt(N) * twoD2d);
            return pairterm - midterm + third;
        }
    }
    Rat pair = 0, mid = 0;
    for (size_t i = 0; i < N; ++i) {
        Rat wi = P.weight(i);
        for (size_t k = i; k < N; ++k) {
            Rat prod = wi * P.weight(k);
            for (int c = 0; c < d; ++c) prod *= 1 - std::max(P.coord_rat(i, c), P.coord_rat(k, c));
            pair += (i == k) ? prod : 2 * prod;
        }
        Rat m = wi;
        for (int c = 0; c < d; ++c) {
            Rat z = P.coord_rat(i, c);
            m *= (1 - z * z) / 2;
        }
        mid += m;
    }
    return pair - 2 * mid + third;
}

double l2_disc(const PointSet& P) {
    return std::sqrt(rat_to_double(l2_disc_squared(P)));
}

namespace {

// critical grid of one coordinate: sorted unique numerators plus denom (x=1)
std::vector<long long> critical_grid(const PointSet& P, int c) {
    std::vector<long long> g;
    g.reserve(P.size() + 1);
    for (size_t i = 0; i < P.size(); ++i) g.push_back(P.num[i][c]);
    g.push_back(P.denom);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

Rat star_disc_rat(const PointSet& P) {
    const int d = P.d;
    const long long N = (long long)P.size();
    const long long D = P.denom;
    if (P.weights) throw std::invalid_argument("star_disc: unweighted sets only");
    std::vector<std::vector<long long>> grid(d);
    double cells = 1;
    for (int c = 0; c < d; ++c) {
        grid[c] = critical_grid(P, c);
        cells *= (double)grid[c].size();
    }
    if (cells > 1e7) throw BudgetError("star_disc: critical grid exceeds budget");

    if (d == 2 && std::pow((double)D, 2) * (double)N < 1.5e36) {
        // sweep over x1; maintain sorted second coordinates of admitted points
        std::vector<std::pair<long long, long long>> pts(P.size());
        for (size_t i = 0; i < P.size(); ++i) pts[i] = {P.num[i][0], P.num[i][1]};
        std::sort(pts.begin(), pts.end());
        std::vector<long long> yo, yc;  // z1 < x1 resp. z1 <= x1
        size_t io = 0, ic = 0;
        __int128 best = 0;
        for (long long nx : grid[0]) {
            while (io < pts.size() && pts[io].first < nx) {
                yo.insert(std::upper_bound(yo.begin(), yo.end(), pts[io].second), pts[io].second);
                ++io;
            }
            while (ic < pts.size() && pts[ic].first <= nx) {
                yc.insert(std::upper_bound(yc.begin(), yc.end(), pts[ic].second), pts[ic].second);
                ++ic;
            }
            for (long long ny : grid[1]) {
                long long open = (long long)(std::lower_bound(yo.begin(), yo.end(), ny) - yo.begin());
                long long closed = (long long)(std::upper_bound(yc.begin(), yc.end(), ny) - yc.begin());
                __int128 vol = (__int128)nx * ny * N;
                __int128 a = vol - (__int128)open * D * D;
                __int128 bnd = (__int128)closed * D * D - vol;
                if (a > best) best = a;
                if (bnd > best) best = bnd;
            }
        }
        return Rat(big_of_i128((unsigned __int128)best), BigInt(N) * BigInt(D) * D);
    }

    // generic odometer scan
    std::vector<size_t> ix(d, 0);
    Rat best = 0;
    while (true) {
        Rat vol = 1;
        for (int c = 0; c < d; ++c) vol *= Rat(BigInt(grid[c][ix[c]]), BigInt(D));
        long long open = 0, closed = 0;
        for (size_t i = 0; i < P.size(); ++i) {
            bool o = true, cl = true;
            for (int c = 0; c < d; ++c) {
                if (!(P.num[i][c] < grid[c][ix[c]])) o = false;
                if (!(P.num[i][c] <= grid[c][ix[c]])) cl = false;
            }
            if (o) ++open;
            if (cl) ++closed;
        }
        best = std::max(best, vol - Rat(open, N));
        best = std::max(best, Rat(closed, N) - vol);
        int c = 0;
        while (c < d && ++ix[c] == grid[c].size()) ix[c++] = 0;
        if (c == d) break;
    }
    return best;
}

double star_disc(const PointSet& P) {
    return rat_to_double(star_disc_rat(P));
}

namespace {

// integral over [a,c] of |t - x|^p dx (p >= 1 integer)
double abs_power_integral(double t, double a, double c, int p) {
    auto prim = [&](double x) {  // antiderivative of |t-x|^p with sign handling
        double u = x - t;
        return std::pow(std::abs(u), p + 1) / (p + 1) * (u < 0 ? -1.0 : 1.0);
    };
    return prim(c) - prim(a);
}

}  // namespace

LpResult lp_disc(const PointSet& P, int p, const LpMethod& method) {
    if (p < 1) throw std::invalid_argument("lp_disc: p >= 1 required");
    const int d = P.d;
    const double N = (double)P.size();
    bool exact_ok = method.kind == LpMethod::grid && (d == 1 || (d == 2 && p % 2 == 0));
    if (exact_ok) {
        std::vector<std::vector<double>> bp(d);
        std::vector<std::vector<long long>> bpn(d);
        for (int c = 0; c < d; ++c) {
            std::vector<long long> g;
            g.push_back(0);
            for (size_t i = 0; i < P.size(); ++i) g.push_back(P.num[i][c]);
            g.push_back(P.denom);
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            bpn[c] = g;
            for (long long v : g) bp[c].push_back((double)v / (double)P.denom);
        }
        double integral = 0;
        if (d == 1) {
            for (size_t i = 0; i + 1 < bp[0].size(); ++i) {
                double a = bp[0][i], c = bp[0][i + 1];
                long long k = 0;
                for (size_t z = 0; z < P.size(); ++z)
                    if (P.num[z][0] <= bpn[0][i]) ++k;
                double t = (double)k / N;
                integral += abs_power_integral(t, a, c, p);
            }
        } else {
            size_t G1 = bp[0].size(), G2 = bp[1].size();
            if ((double)G1 * (double)G2 > 4e6) throw BudgetError("lp_disc: grid too large");
            // cell counts by 2-D cumulative sums over breakpoint buckets
            std::vector<std::vector<long long>> cum(G1, std::vector<long long>(G2, 0));
            for (size_t z = 0; z < P.size(); ++z) {
                size_t i1 = std::lower_bound(bpn[0].begin(), bpn[0].end(), P.num[z][0]) - bpn[0].begin();
                size_t i2 = std::lower_bound(bpn[1].begin(), bpn[1].end(), P.num[z][1]) - bpn[1].begin();
                cum[i1][i2] += 1;
            }
            for (size_t i = 0; i < G1; ++i)
                for (size_t k = 0; k < G2; ++k) {
                    if (i) cum[i][k] += cum[i - 1][k];
                    if (k) cum[i][k] += cum[i][k - 1];
                    if (i && k) cum[i][k] -= cum[i - 1][k - 1];
                }
            for (size_t i = 0; i + 1 < G1; ++i)
                for (size_t k = 0; k + 1 < G2; ++k) {
                    double a1 = bp[0][i], c1 = bp[0][i + 1], a2 = bp[1][k], c2 = bp[1][k + 1];
                    double t = (double)cum[i][k] / N;
                    // integral of (t - x y)^p over the cell, p even
                    double cell = 0;
                    for (int u = 0; u <= p; ++u) {
                        double mom1 = (std::pow(c1, u + 1) - std::pow(a1, u + 1)) / (u + 1);
                        double mom2 = (std::pow(c2, u + 1) - std::pow(a2, u + 1)) / (u + 1);
                        cell += binom_d(p, u) * std::pow(t, p - u) * (u % 2 ? -1.0 : 1.0) * mom1 * mom2;
                    }
                    integral += cell;
                }
        }
        return {std::pow(integral, 1.0 / p), 0.0, true};
    }
    // Monte Carlo fallback
    std::mt19937_64 rng(method.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double mean = 0, m2 = 0;
    std::vector<double> x(d);
    for (long long s = 0; s < method.samples; ++s) {
        for (int c = 0; c < d; ++c) x[c] = uni(rng);
        double v = std::pow(std::abs(disc_eval(P, x)), p);
        double delta = v - mean;
        mean += delta / (double)(s + 1);
        m2 += delta * (v - mean);
    }
    double var = m2 / std::max(1.0, (double)(method.samples - 1));
    double se = std::sqrt(var / (double)method.samples);
    double val = std::pow(mean, 1.0 / p);
    double err = (mean > 0) ? se / (p * std::pow(mean, 1.0 - 1.0 / p)) : se;
    return {val, err, false};
}

Rat seq_disc(const std::vector<Rat>& u, long long n) {
    if ((long long)u.size() < n) throw std::invalid_argument("seq_disc: not enough terms");
    std::vector<Rat> v(u.begin(), u.begin() + n);
    std::sort(v.begin(), v.end());
    Rat best = 0;
    auto consider = [&](const Rat& x) {
        long long open = 0, closed = 0;
        for (const Rat& z : v) {
            if (z < x) ++open;
            if (z <= x) ++closed;
        }
        best = std::max(best, x - Rat(open, n));
        best = std::max(best, Rat(closed, n) - x);
    };
    for (const Rat& z : v) consider(z);
    consider(Rat(1));
    return best;
}

NormReport make_report(const std::string& kind, double value, const PointSet& P) {
    NormReport r;
    r.kind = kind;
    r.value = value;
    r.b = P.b;
    r.n = P.n;
    r.d = P.d;
    r.N = (long long)P.size();
    r.family = P.family;
    return r;
}

std::string NormReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["value"] = value;
    j["p"] = std::isinf(p) ? nlohmann::json("inf") : nlohmann::json(p);
    j["q"] = std::isinf(q) ? nlohmann::json("inf") : nlohmann::json(q);
    j["r"] = r;
    j["b"] = b;
    j["n"] = n;
    j["d"] = d;
    j["N"] = N;
    j["head"] = head;
    j["tail"] = tail;
    j["tail_bound"] = tail_bound;
    j["family"] = family;
    return j.dump(2);
}

NormReport besov_quasinorm(const PointSet& P, const BesovParams& prm) {
    if (!P.badic) throw std::invalid_argument("besov_quasinorm: b-adic point set required");
    const double p = prm.p, q = prm.q, r = prm.r;
    const bool pinf = std::isinf(p), qinf = std::isinf(q);
    const double invp = pinf ? 0.0 : 1.0 / p;
    if (!(p >= 1) || !(q >= 1)) throw std::invalid_argument("besov: p, q >= 1 required");
    if (!(invp - 1 < r && r < std::min(pinf ? 0.0 : 1.0 / p, 1.0)))
        throw std::invalid_argument("besov: r outside the validity window");
    if (p == 1 && qinf) throw std::invalid_argument("besov: p = 1 needs q < infinity");
    if (pinf && q <= 1) throw std::invalid_argument("besov: p = infinity needs q > 1");

    const long long b = P.b;
    const int n = P.n, d = P.d;
    const double exp_w = r - invp + 1;

    auto level_inner = [&](const std::vector<int>& j) {
        if (pinf) return haar::level_sup(P, j);
        return std::pow(haar::level_power_sum(P, j, p), invp);
    };

    double head_acc = 0, head_max = 0;
    std::vector<int> j(d, -1);
    do {
        int absj = 0;
        for (int ji : j)
            if (ji >= 0) absj += ji;
        double w = std::pow((double)b, (double)absj * exp_w) * level_inner(j);
        if (qinf)
            head_max = std::max(head_max, w);
        else
            head_acc += std::pow(w, q);
    } while (next_levels(j, n - 1));

    // tail: every coefficient is the negated volume coefficient
    double Tp = 0, minmod = 4;
    for (long long l = 1; l < b; ++l) {
        double mod = std::abs(root_of_unity(l, b) - 1.0);
        Tp += std::pow(mod, pinf ? -1.0 : -p);
        minmod = std::min(minmod, mod);
    }
    auto shell_inner = [&](long long L, int s) {
        if (pinf)
            return std::pow((double)b, -(double)(2 * L + s)) * std::pow(2.0, -(double)(d - s)) *
                   std::pow(minmod, -(double)s);
        double Sp = std::pow((double)b, (double)L) * std::pow((double)b, -(double)(2 * L + s) * p) *
                    std::pow(2.0, -(double)(d - s) * p) * std::pow(Tp, (double)s);
        return std::pow(Sp, invp);
    };
    auto comp_count = [&](long long L, int s) {  // parts >= 0, sum L, max >= n
        double bounded = binom_d(L + s - 1, s - 1);  // all parts <= n-1, by inclusion-exclusion
        for (int t = 1; t <= s; ++t) {
            if (L - (long long)t * n < 0) break;
            bounded += (t % 2 ? -1.0 : 1.0) * binom_d(s, t) * binom_d(L - (long long)t * n + s - 1, s - 1);
        }
        return binom_d(L + s - 1, s - 1) - bounded;
    };

    double tail_acc = 0, tail_max = 0, prev_shell = 0, last_ratio = 0;
    long long L = n;
    while (true) {
        double shell = 0, shell_max = 0;
        for (int s = 1; s <= d; ++s) {
            double cnt = comp_count(L, s) * binom_d(d, s);
            if (cnt <= 0) continue;
            double w = std::pow((double)b, (double)L * exp_w) * shell_inner(L, s);
            if (qinf)
                shell_max = std::max(shell_max, w);
            else
                shell += cnt * std::pow(w, q);
        }
        if (qinf) {
            tail_max = std::max(tail_max, shell_max);
            if (L > 4 * n + 8 && shell_max < tail_max * 1e-6) break;
        } else {
            tail_acc += shell;
            double base = head_acc + tail_acc;
            if (prev_shell > 0) last_ratio = shell / prev_shell;
            prev_shell = shell;
            if (L > n && (base == 0 || shell < prm.eps_tail * base)) break;
        }
        ++L;
        if (L > 64 * (n + 2)) break;  // safety stop; decay is geometric
    }

    NormReport rep = make_report("besov", 0, P);
    rep.p = p;
    rep.q = q;
    rep.r = r;
    if (qinf) {
        rep.head = head_max;
        rep.tail = tail_max;
        rep.tail_bound = tail_max;
        rep.value = std::max(head_max, tail_max);
    } else {
        rep.head = head_acc;
        rep.tail = tail_acc;
        rep.tail_bound = tail_acc;
        if (last_ratio > 0 && last_ratio < 1) rep.tail_bound = tail_acc + prev_shell * last_ratio / (1 - last_ratio);
        rep.value = std::pow(head_acc + tail_acc, 1.0 / q);
    }
    return rep;
}

}  // namespace mixnet::norms
