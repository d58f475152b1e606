#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixnet/badic.hpp"

using namespace mixnet;
using namespace mixnet::badic;

TEST_CASE("digit expansion round trip") {
    auto dv = digits_of(5, 2, 3);
    CHECK(dv.digits == std::vector<int>{1, 0, 1});
    CHECK(value_of(dv) == 5);
    CHECK(value_of(DigitVector{{3, 1}, 5}) == 8);
    CHECK_THROWS_AS(digits_of(8, 2, 3), std::out_of_range);
    for (long long b : {2LL, 3LL, 5LL})
        for (long long k = 0; k < b * b * b; ++k) REQUIRE(value_of(digits_of(k, b, 3)) == k);
}

TEST_CASE("radical inverse") {
    CHECK(bit_reversal(3, 2) == Rat(3, 4));  // digits 1,1 -> 1/2 + 1/4
    CHECK(bit_reversal(0, 2) == 0);
    CHECK(bit_reversal(2, 3) == Rat(2, 3));
    CHECK(bit_reversal(1, 2) == Rat(1, 2));
    // injective on 0..63 in base 2
    std::vector<Rat> seen;
    for (long long i = 0; i < 64; ++i) seen.push_back(bit_reversal(i, 2));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("weights") {
    CHECK(nrt_weight(0, 2) == 0);
    CHECK(nrt_weight(1, 2) == 1);
    CHECK(nrt_weight(8, 2) == 4);
    CHECK(nrt_weight(std::vector<long long>{8, 1}, 2) == 5);
    CHECK(hamming_weight(8, 2) == 1);
    CHECK(hamming_weight(7, 2) == 3);
    CHECK(hamming_weight(10, 3) == 2);  // 101 base 3
    CHECK(vn_weight(DigitVector{{0, 2, 0}, 3}) == 2);
    CHECK(vn_weight(DigitVector{{0, 0, 0}, 3}) == 0);
}

TEST_CASE("coordinate map") {
    // digits a_1 a_2 a_3 = 1,0,1 in base 2: 1/2 + 1/8 = 5/8
    CHECK(phi_map_1d(DigitVector{{1, 0, 1}, 2}) == 5);
    CHECK(phi_map_1d(DigitVector{{0, 0, 0}, 2}) == 0);
    auto v = phi_map({DigitVector{{1, 1}, 3}, DigitVector{{2, 0}, 3}});
    CHECK(v == std::vector<long long>{4, 6});  // 4/9, 6/9
}

TEST_CASE("intervals and Haar indices") {
    BadicInterval I{{1, -1}, {2, 0}, 3};
    CHECK(I.order() == 1);
    CHECK(I.volume() == Rat(1, 3));
    HaarIndex h{{1, -1}, {2, 0}, {2, 1}};
    CHECK(h.s() == 1);
    CHECK(h.abs_j() == 1);
}

TEST_CASE("locate") {
    // x = 5/9, b=3, level 1: m = floor(3*5/9) = 1, child k = floor(9*5/9) - 3 = 2
    auto loc = locate({5}, 9, {1}, 3);
    CHECK(loc.m == std::vector<long long>{1});
    CHECK(loc.k == std::vector<int>{2});
    // level -1 coordinate
    auto l2 = locate({5, 5}, 9, {1, -1}, 3);
    CHECK(l2.m[1] == 0);
    CHECK(l2.k[1] == -1);
    // left boundary belongs to the child on its right
    auto l3 = locate({3}, 9, {1}, 3);
    CHECK(l3.m == std::vector<long long>{1});
    CHECK(l3.k == std::vector<int>{0});
    // children partition: each x lands in exactly one (m, k)
    for (long long num = 0; num < 27; ++num) {
        auto l = locate({num}, 27, {2}, 3);
        REQUIRE(l.m[0] == num / 3 % 9);
        REQUIRE(l.k[0] == (int)(num % 3));
    }
}
