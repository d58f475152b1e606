#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mixnet/common.hpp"

namespace mixnet::digitalnet {
struct GeneratingMatrices;
}

namespace mixnet {

// N points in [0,1)^d with exact rational coordinates: numerators over one
// common denominator. For b-adic families the denominator is b^n.
struct PointSet {
    int d = 0;
    long long b = 0;  // base of the b-adic grid (when badic)
    int n = 0;        // resolution exponent (when badic)
    bool badic = false;
    long long denom = 1;
    std::vector<std::vector<long long>> num;       // num[i][c]
    std::optional<std::vector<Rat>> weights;       // a_z, one per point
    std::string family;                            // provenance tag
    std::shared_ptr<const digitalnet::GeneratingMatrices> gen;

    size_t size() const { return num.size(); }
    double coord(size_t i, int c) const { return double(num[i][c]) / double(denom); }
    Rat coord_rat(size_t i, int c) const { return Rat(BigInt(num[i][c]), BigInt(denom)); }

    // numerator of coordinate c of point i at resolution n over base b
    // (requires badic storage)
    long long bnum(size_t i, int c) const { return num[i][c]; }

    Rat weight(size_t i) const {
        if (weights) return (*weights)[i];
        return Rat(1, BigInt((unsigned long long)size()));
    }
};

void write_csv(const PointSet& P, const std::string& path);
PointSet read_csv(const std::string& path);

}  // namespace mixnet
