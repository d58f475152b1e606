#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "mixnet/badic.hpp"
#include "mixnet/generators.hpp"
#include "mixnet/haar.hpp"
#include "mixnet/walsh.hpp"

using namespace mixnet;
using namespace mixnet::walsh;

TEST_CASE("wal_eval basics") {
    CHECK(wal_eval_1d(0, 0.37, 5) == cplx(1));
    CHECK(std::abs(wal_eval_1d(1, 0.5, 2) - cplx(-1)) < 1e-12);
    CHECK(std::abs(wal_eval_1d(1, 2.0 / 3.0, 3) - root_of_unity(2, 3)) < 1e-12);
    CHECK(std::abs(wal_eval({1, 1}, {0.5, 0.5}, 2) - cplx(1)) < 1e-12);
}

TEST_CASE("Walsh Gram matrix is the identity") {
    for (long long b : {2LL, 3LL}) {
        long long amax = b * b;
        long long cells = ipow(b, 2);  // all wal_a, a < b^2, are constant on this grid
        for (long long a = 0; a < amax; ++a)
            for (long long c = 0; c < amax; ++c) {
                cplx g = 0;
                for (long long k = 0; k < cells; ++k) {
                    double x = ((double)k + 0.5) / (double)cells;
                    g += wal_eval_1d(a, x, b) * std::conj(wal_eval_1d(c, x, b));
                }
                g /= (double)cells;
                double want = (a == c) ? 1.0 : 0.0;
                REQUIRE(std::abs(g - want) < 1e-12);
            }
    }
}

TEST_CASE("chi_hat basic values") {
    CHECK(std::abs(chi_hat(0, 0.37, 2) - 0.37) < 1e-15);
    CHECK(std::abs(chi_hat(1, 1.0, 2)) < 1e-15);
    CHECK(std::abs(chi_hat(1, 0.5, 2) - 0.5) < 1e-15);
    CHECK(std::abs(chi_hat(7, 0.0, 3)) < 1e-15);
}

TEST_CASE("chi_hat equals the brute-force integral") {
    std::mt19937_64 rng(3);
    for (long long b : {2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 60; ++trial) {
            long long t = rng() % (b * b * b);
            int r = std::max(1, badic::nrt_weight(t, b));
            long long cells = ipow(b, r + 2);
            double y = (double)(rng() % (cells + 1)) / (double)cells;
            cplx direct = 0;
            long long full = (long long)std::floor(y * cells + 1e-9);
            for (long long k = 0; k < full; ++k)
                direct += std::conj(wal_eval_1d(t, ((double)k + 0.5) / cells, b)) / (double)cells;
            double remlen = y - (double)full / cells;
            if (remlen > 1e-15)
                direct += remlen * std::conj(wal_eval_1d(t, ((double)full + 0.25) / cells, b));
            REQUIRE(std::abs(direct - chi_hat(t, y, b)) < 1e-9);
        }
    }
}

TEST_CASE("series form converges to chi_hat") {
    CHECK(std::abs(fine_price_series(0, 0.5, 2, 20) - 0.5) < 1e-6);
    CHECK(std::abs(fine_price_series(0, 0.0, 2, 30)) < 1e-8);
    CHECK(std::abs(fine_price_series(2, 5.0 / 9.0, 3, 12) - chi_hat(2, 5.0 / 9.0, 3)) < 1e-5);
}

TEST_CASE("Haar-Walsh inner products") {
    CHECK(std::abs(haar_walsh_inner(0, 0, 1, 1, 2) - cplx(1)) < 1e-14);
    CHECK(haar_walsh_inner(0, 0, 1, 0, 2) == cplx(0));
    CHECK(haar_walsh_inner(-1, 0, 1, 0, 2) == cplx(1));
    CHECK(haar_walsh_inner(-1, 0, 1, 3, 2) == cplx(0));
    // brute-force cross-check on a fine grid
    for (long long b : {2LL, 3LL}) {
        for (int j : {-1, 0, 1}) {
            for (long long m = 0; m < (j < 0 ? 1 : ipow(b, j)); ++m)
                for (int l = 1; l < (j < 0 ? 2 : (int)b); ++l)
                    for (long long alpha = 0; alpha < b * b * b; ++alpha) {
                        long long cells = ipow(b, 3);
                        cplx direct = 0;
                        haar::HaarIndex idx{{j}, {m}, {l}};
                        for (long long k = 0; k < cells; ++k) {
                            double x = ((double)k + 0.5) / cells;
                            direct += haar::haar_eval(idx, {x}, b) * std::conj(wal_eval_1d(alpha, x, b));
                        }
                        direct /= (double)cells;
                        REQUIRE(std::abs(direct - haar_walsh_inner(j, m, l, alpha, b)) < 1e-10);
                    }
        }
    }
}

TEST_CASE("chihat-Walsh inner products") {
    CHECK(std::abs(chihat_walsh_inner(0, 0, 2) - 0.5) < 1e-12);
    for (long long b : {2LL, 3LL}) {
        // t = 0, alpha = z b^(a-1): magnitude 1/(b^a |w^z - 1|)
        for (int a = 1; a <= 3; ++a)
            for (long long z = 1; z < b; ++z) {
                double want = 1.0 / ((double)ipow(b, a) * std::abs(root_of_unity(-z, b) - 1.0));
                REQUIRE(std::abs(chihat_walsh_inner(0, z * ipow(b, a - 1), b)) == doctest::Approx(want).epsilon(1e-9));
            }
    }
    // off the support pattern (b = 2): t = 3 has t' = 1, extensions 7, 11, ...
    CHECK(std::abs(chihat_walsh_inner(3, 5, 2)) < 1e-12);
    // decay bound |<chi_hat(t), wal_alpha>| <= c b^(-max(rho(t), rho(alpha)))
    for (long long t : {0LL, 1LL, 3LL, 6LL})
        for (long long alpha = 0; alpha < 16; ++alpha) {
            int rmax = std::max(badic::nrt_weight(t, 2), badic::nrt_weight(alpha, 2));
            CHECK(std::abs(chihat_walsh_inner(t, alpha, 2)) <= 2.0 * std::pow(2.0, -rmax) + 1e-12);
        }
}

TEST_CASE("main-part/rest split on the 2-point net") {
    PointSet P = generators::hammersley(2, 1, generators::HammersleyPattern::parse("s"));
    digitalnet::GeneratingMatrices G;
    G.b = 2;
    G.n = 1;
    G.d = 2;
    G.C = {{{1}}, {{1}}};
    P.gen = std::make_shared<digitalnet::GeneratingMatrices>(G);
    auto s1 = theta_main(P, {1.0, 1.0});
    CHECK(std::abs(s1.theta) < 1e-12);
    CHECK(std::abs(s1.rest) < 1e-12);
    auto s2 = theta_main(P, {0.5, 0.5});
    CHECK(s2.theta == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s2.disc == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(s2.rest) < 1e-12);
    auto s3 = theta_main(P, {0.0, 0.7});
    CHECK(std::abs(s3.disc) < 1e-12);
    CHECK(std::abs(s3.theta) < 1e-12);
}

TEST_CASE("the two theta routes agree on random nets") {
    std::mt19937_64 rng(17);
    for (long long b : {2LL, 3LL}) {
        int n = b == 2 ? 4 : 3;
        digitalnet::GeneratingMatrices G;
        G.b = b;
        G.n = n;
        G.d = 2;
        G.C.assign(2, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
        for (int i = 0; i < 2; ++i)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) G.C[i][r][c] = (int)(rng() % b);
        PointSet P = digitalnet::digital_points(G);
        auto dual = digitalnet::dual_net(G);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> y{uni(rng), uni(rng)};
            auto split = theta_main(P, y, dual);  // throws if the routes disagree
            CHECK(std::abs(split.theta - split.theta_kernel) <= 1e-9);
        }
    }
}
