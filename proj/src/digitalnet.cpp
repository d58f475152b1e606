#include "mixnet/digitalnet.hpp"

#include <algorithm>
#include <numeric>

#include "mixnet/badic.hpp"
#include "mixnet/gf.hpp"

namespace mixnet::digitalnet {

namespace {

long long mod_inv(long long a, long long p) {
    long long r = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// In-place row reduction mod p; returns rank. Matrix rows are length `cols`.
int row_reduce_mod(std::vector<std::vector<int>>& rows, long long p, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < (int)rows.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        long long inv = mod_inv(rows[rank][c], p);
        for (int k = c; k < cols; ++k) rows[rank][k] = (int)(rows[rank][k] * inv % p);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            long long f = rows[r][c];
            for (int k = c; k < cols; ++k)
                rows[r][k] = (int)(((rows[r][k] - f * rows[rank][k]) % p + p * p) % p);
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// Nullspace basis of the system rows * x = 0 over F_p, x of length cols.
std::vector<std::vector<int>> nullspace_mod(std::vector<std::vector<int>> rows, long long p, int cols) {
    int rank = row_reduce_mod(rows, p, cols);
    std::vector<int> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (rows[r][c] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(cols, 0);
        v[fc] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = (int)(((-(long long)rows[r][fc]) % p + p) % p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

PointSet digital_points(const GeneratingMatrices& G) {
    gf::require_prime(G.b);
    long long N = ipow(G.b, G.n);
    PointSet P;
    P.d = G.d;
    P.b = G.b;
    P.n = G.n;
    P.badic = true;
    P.denom = N;
    P.family = "digital";
    P.gen = std::make_shared<GeneratingMatrices>(G);
    P.num.reserve(N);
    std::vector<int> rdig(G.n);
    for (long long r = 0; r < N; ++r) {
        long long t = r;
        for (int k = 0; k < G.n; ++k) {
            rdig[k] = (int)(t % G.b);
            t /= G.b;
        }
        std::vector<long long> pt(G.d);
        for (int i = 0; i < G.d; ++i) {
            long long numc = 0;
            for (int row = 0; row < G.n; ++row) {
                long long a = 0;
                for (int c = 0; c < G.n; ++c) a += (long long)G.C[i][row][c] * rdig[c];
                numc = numc * G.b + a % G.b;
            }
            pt[i] = numc;
        }
        P.num.push_back(std::move(pt));
    }
    return P;
}

int net_quality(const PointSet& P, long long b, int n) {
    long long N = ipow(b, n);
    if ((long long)P.size() != N) throw std::invalid_argument("net_quality: point count is not b^n");
    if (N > 100000) throw BudgetError("net_quality: fairness scan budget exceeded");
    int d = P.d;
    // coordinate numerators at resolution n over b
    std::vector<std::vector<long long>> bn(P.size(), std::vector<long long>(d));
    for (size_t i = 0; i < P.size(); ++i)
        for (int c = 0; c < d; ++c) {
            BigInt scaled = BigInt(P.num[i][c]) * N;
            bn[i][c] = (long long)(scaled / P.denom);  // floor(b^n x)
        }
    std::vector<long long> counts;
    for (int v = 0; v <= n; ++v) {
        int order = n - v;
        long long want = ipow(b, v);
        // iterate compositions j_1 + ... + j_d = order, j_i >= 0
        std::vector<int> j(d, 0);
        j[0] = order;
        bool ok = true;
        while (ok) {
            long long nboxes = ipow(b, order);
            counts.assign(nboxes, 0);
            for (size_t i = 0; i < P.size(); ++i) {
                long long idx = 0;
                for (int c = 0; c < d; ++c) {
                    long long m = bn[i][c] / ipow(b, n - j[c]);
                    idx = idx * ipow(b, j[c]) + m;
                }
                counts[idx]++;
            }
            for (long long cnt : counts)
                if (cnt != want) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            // next composition
            int k = d - 1;
            while (k > 0 && j[k - 1] == 0) --k;
            if (k == 0) break;  // done
            --j[k - 1];
            int rest = order - std::accumulate(j.begin(), j.begin() + k, 0);
            std::fill(j.begin() + k, j.end(), 0);
            j[k] = rest;
        }
        if (ok) return v;
    }
    return n;
}

int lin_indep_param(const GeneratingMatrices& G) {
    for (int rho = 1; rho <= G.n; ++rho) {
        // all compositions gamma_1 + ... + gamma_d = rho with 0 <= gamma_i <= n
        std::vector<int> g(G.d, 0);
        g[0] = rho;
        bool all_indep = true;
        while (true) {
            bool valid = true;
            for (int i = 0; i < G.d; ++i)
                if (g[i] > G.n) valid = false;
            if (valid) {
                std::vector<std::vector<int>> rows;
                for (int i = 0; i < G.d; ++i)
                    for (int r = 0; r < g[i]; ++r) rows.push_back(G.C[i][r]);
                if (row_reduce_mod(rows, G.b, G.n) < rho) {
                    all_indep = false;
                    break;
                }
            }
            int k = G.d - 1;
            while (k > 0 && g[k - 1] == 0) --k;
            if (k == 0) break;
            --g[k - 1];
            int rest = rho - std::accumulate(g.begin(), g.begin() + k, 0);
            std::fill(g.begin() + k, g.end(), 0);
            g[k] = rest;
        }
        if (!all_indep) return rho - 1;
    }
    return G.n;
}

std::vector<std::vector<long long>> dual_net(const GeneratingMatrices& G) {
    int n = G.n, d = G.d;
    long long b = G.b;
    // unknowns u[i*n + r] = digit r of t_i (least significant first)
    std::vector<std::vector<int>> rows(n, std::vector<int>(d * n, 0));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < n; ++r) rows[k][i * n + r] = G.C[i][r][k];
    auto basis = nullspace_mod(std::move(rows), b, d * n);
    double sz = std::pow((double)b, (double)basis.size());
    if (sz > 1e6 + 0.5) throw BudgetError("dual_net: enumeration budget exceeded");
    long long total = ipow(b, (int)basis.size());
    std::vector<std::vector<long long>> out;
    out.reserve(total);
    std::vector<int> cur(d * n, 0);
    std::vector<int> coef(basis.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        std::fill(cur.begin(), cur.end(), 0);
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            int c = (int)(t % b);
            t /= b;
            if (c)
                for (int k = 0; k < d * n; ++k) cur[k] = (int)((cur[k] + (long long)c * basis[bi][k]) % b);
        }
        std::vector<long long> tv(d, 0);
        for (int i = 0; i < d; ++i)
            for (int r = n - 1; r >= 0; --r) tv[i] = tv[i] * b + cur[i * n + r];
        out.push_back(std::move(tv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

cplx character_sum(const PointSet& P, const std::vector<long long>& t) {
    if (!P.badic) throw std::invalid_argument("character_sum: b-adic point set required");
    long long b = P.b;
    int n = P.n;
    cplx S = 0;
    for (size_t h = 0; h < P.size(); ++h) {
        long long e = 0;
        for (int i = 0; i < P.d; ++i) {
            long long ti = t[i];
            long long x = P.num[h][i];  // digits a_1..a_n, a_1 most significant
            int nu = 0;
            while (ti > 0) {
                long long tdig = ti % b;
                ti /= b;
                // x_{nu+1} = digit of x at power b^(n-1-nu)
                long long xdig = (x / ipow(b, n - 1 - nu)) % b;
                e += tdig * xdig;
                ++nu;
            }
        }
        S += root_of_unity(e, b);
    }
    return S;
}

LinearSubspace make_subspace(long long b, int n, int d, std::vector<std::vector<int>> vecs) {
    gf::require_prime(b);
    for (auto& v : vecs)
        for (auto& x : v) {
            x %= (int)b;
            if (x < 0) x += (int)b;
        }
    row_reduce_mod(vecs, b, d * n);
    return LinearSubspace{b, n, d, std::move(vecs)};
}

LinearSubspace dual_space(const LinearSubspace& V) {
    auto basis = nullspace_mod(V.basis, V.b, V.d * V.n);
    row_reduce_mod(basis, V.b, V.d * V.n);
    return LinearSubspace{V.b, V.n, V.d, std::move(basis)};
}

std::vector<std::vector<int>> enumerate_subspace(const LinearSubspace& V) {
    double sz = std::pow((double)V.b, (double)V.dim());
    if (sz > 1e6 + 0.5) throw BudgetError("enumerate_subspace: budget exceeded");
    long long total = ipow(V.b, V.dim());
    std::vector<std::vector<int>> out;
    out.reserve(total);
    int len = V.d * V.n;
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        std::vector<int> cur(len, 0);
        for (int bi = 0; bi < V.dim(); ++bi) {
            int c = (int)(t % V.b);
            t /= V.b;
            if (c)
                for (int k = 0; k < len; ++k) cur[k] = (int)((cur[k] + (long long)c * V.basis[bi][k]) % V.b);
        }
        out.push_back(std::move(cur));
    }
    return out;
}

std::pair<int, int> min_distance(const LinearSubspace& V) {
    if (V.dim() == 0) return {V.d * V.n + 1, V.d * V.n + 1};
    auto elems = enumerate_subspace(V);
    int best_nrt = V.d * V.n + 1, best_ham = V.d * V.n + 1;
    for (const auto& A : elems) {
        bool zero = true;
        int nrt = 0, ham = 0;
        for (int i = 0; i < V.d; ++i) {
            int v = 0;
            for (int nu = V.n; nu >= 1; --nu)
                if (A[i * V.n + nu - 1] != 0) {
                    v = nu;
                    break;
                }
            nrt += v;
            for (int nu = 1; nu <= V.n; ++nu)
                if (A[i * V.n + nu - 1] != 0) {
                    ++ham;
                    zero = false;
                }
        }
        if (zero) continue;
        best_nrt = std::min(best_nrt, nrt);
        best_ham = std::min(best_ham, ham);
    }
    return {best_nrt, best_ham};
}

PointSet subspace_points(const LinearSubspace& V) {
    auto elems = enumerate_subspace(V);
    PointSet P;
    P.d = V.d;
    P.b = V.b;
    P.n = V.n;
    P.badic = true;
    P.denom = ipow(V.b, V.n);
    P.family = "subspace";
    P.num.reserve(elems.size());
    for (const auto& A : elems) {
        std::vector<long long> pt(V.d, 0);
        for (int i = 0; i < V.d; ++i)
            for (int nu = 1; nu <= V.n; ++nu) pt[i] = pt[i] * V.b + A[i * V.n + nu - 1];
        P.num.push_back(std::move(pt));
    }
    return P;
}

LinearSubspace row_space(const GeneratingMatrices& G) {
    std::vector<std::vector<int>> vecs;
    for (int c = 0; c < G.n; ++c) {
        std::vector<int> v(G.d * G.n);
        for (int i = 0; i < G.d; ++i)
            for (int row = 0; row < G.n; ++row) v[i * G.n + row] = G.C[i][row][c];
        vecs.push_back(std::move(v));
    }
    return make_subspace(G.b, G.n, G.d, std::move(vecs));
}

DualityReport duality_theorem_check(const LinearSubspace& V) {
    if (V.dim() != V.n) throw std::invalid_argument("duality_theorem_check: dim(V) must equal n");
    DualityReport rep{};
    rep.v_geometric = net_quality(subspace_points(V), V.b, V.n);
    auto dual = dual_space(V);
    int delta = min_distance(dual).first;
    rep.v_from_dual = std::max(0, V.n + 1 - delta);
    rep.agree = rep.v_geometric == rep.v_from_dual;
    return rep;
}

}  // namespace mixnet::digitalnet
