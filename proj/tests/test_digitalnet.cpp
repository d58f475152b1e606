#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "mixnet/digitalnet.hpp"
#include "mixnet/generators.hpp"

using namespace mixnet;
using namespace mixnet::digitalnet;

namespace {

GeneratingMatrices identity_pair(long long b, int n) {
    GeneratingMatrices G;
    G.b = b;
    G.n = n;
    G.d = 2;
    G.C.assign(2, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (int k = 0; k < n; ++k) {
        G.C[0][k][n - 1 - k] = 1;  // digit-reversal matrix
        G.C[1][k][k] = 1;
    }
    return G;
}

}  // namespace

TEST_CASE("digital points from the identity matrix are the van der Corput values") {
    GeneratingMatrices G;
    G.b = 2;
    G.n = 2;
    G.d = 1;
    G.C = {{{1, 0}, {0, 1}}};
    PointSet P = digital_points(G);
    // index r = 0,1,2,3 -> 0, 1/2, 1/4, 3/4 (numerators over 4)
    std::vector<long long> want{0, 2, 1, 3};
    for (size_t i = 0; i < 4; ++i) CHECK(P.num[i][0] == want[i]);
}

TEST_CASE("digital reversal/identity pair equals the plain Hammersley set") {
    for (long long b : {2LL, 3LL}) {
        for (int n = 1; n <= 3; ++n) {
            PointSet A = digital_points(identity_pair(b, n));
            PointSet B = generators::hammersley(b, n, generators::HammersleyPattern::canonical(n, n));
            auto an = A.num, bn = B.num;
            std::sort(an.begin(), an.end());
            std::sort(bn.begin(), bn.end());
            REQUIRE(an == bn);
        }
    }
}

TEST_CASE("net quality of small digital nets") {
    PointSet P = digital_points(identity_pair(2, 3));
    CHECK(net_quality(P, 2, 3) == 0);
    // degenerate: both coordinates equal
    GeneratingMatrices G = identity_pair(2, 2);
    G.C[0] = G.C[1];
    CHECK(net_quality(digital_points(G), 2, 2) == 2);
}

TEST_CASE("linear independence parameter matches net quality") {
    for (long long b : {2LL, 3LL}) {
        for (int n = 1; n <= 4; ++n) {
            auto G = identity_pair(b, n);
            int rho = lin_indep_param(G);
            int v = net_quality(digital_points(G), b, n);
            REQUIRE(n - rho == v);
        }
    }
}

TEST_CASE("dual net of the n=1 identity pair") {
    GeneratingMatrices G;
    G.b = 2;
    G.n = 1;
    G.d = 2;
    G.C = {{{1}}, {{1}}};
    auto D = dual_net(G);
    REQUIRE(D.size() == 2);
    CHECK(D[0] == std::vector<long long>{0, 0});
    CHECK(D[1] == std::vector<long long>{1, 1});
}

TEST_CASE("character sums detect dual membership") {
    for (long long b : {2LL, 3LL}) {
        int n = 2;
        auto G = identity_pair(b, n);
        PointSet P = digital_points(G);
        auto D = dual_net(G);
        std::set<std::vector<long long>> dual(D.begin(), D.end());
        long long bn = ipow(b, n);
        for (long long t1 = 0; t1 < bn; ++t1)
            for (long long t2 = 0; t2 < bn; ++t2) {
                cplx s = character_sum(P, {t1, t2});
                double expect = dual.count({t1, t2}) ? (double)bn : 0.0;
                REQUIRE(std::abs(s - expect) < 1e-9);
            }
    }
}

TEST_CASE("subspace plumbing") {
    // row space of the generating matrices has dimension n
    auto G = identity_pair(3, 2);
    auto V = row_space(G);
    CHECK(V.dim() == 2);
    auto W = dual_space(V);
    CHECK(W.dim() == 2);  // dn - n
    // dual of dual is the original space
    auto VV = dual_space(W);
    CHECK(VV.dim() == V.dim());
    auto e1 = enumerate_subspace(V), e2 = enumerate_subspace(VV);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    CHECK(e1 == e2);
    // points of the row space coincide with the digital net
    auto Pn = subspace_points(V).num;
    auto Dn = digital_points(G).num;
    std::sort(Pn.begin(), Pn.end());
    std::sort(Dn.begin(), Dn.end());
    CHECK(Pn == Dn);
}

TEST_CASE("minimum distance conventions") {
    LinearSubspace zero{3, 2, 2, {}};
    auto [dz, kz] = min_distance(zero);
    CHECK(dz == 5);
    CHECK(kz == 5);
    // single vector (0,1 | 0,0): NRT weight 2, Hamming 1
    auto V = make_subspace(3, 2, 2, {{0, 1, 0, 0}});
    auto [dv, kv] = min_distance(V);
    CHECK(dv == 2);
    CHECK(kv == 1);
}

TEST_CASE("duality theorem on random subspaces") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 10; ++iter) {
        long long b = iter % 2 ? 2 : 3;
        int n = iter % 2 ? 3 : 2, d = 2;
        std::vector<std::vector<int>> vecs;
        LinearSubspace V{b, n, d, {}};
        while (V.dim() < n) {
            std::vector<int> v(d * n);
            for (auto& x : v) x = (int)(rng() % b);
            vecs.push_back(v);
            V = make_subspace(b, n, d, vecs);
        }
        auto rep = duality_theorem_check(V);
        REQUIRE(rep.agree);
    }
}
