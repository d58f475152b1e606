#include "mixnet/haar.hpp"

#include <cmath>
#include <fstream>
#include <unordered_map>

namespace mixnet::haar {

namespace {

// odometer over j-vectors with entries in {-1, ..., J}; returns false when done
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

double pow_ll(long long base, int e) {
    return std::pow((double)base, (double)e);
}

cplx volume_denom(const std::vector<int>& j, const std::vector<int>& l, long long b, int d) {
    int s = 0;
    cplx prod = 1;
    for (int i = 0; i < d; ++i)
        if (j[i] >= 0) {
            ++s;
            prod *= root_of_unity(l[i], b) - 1.0;
        }
    return prod * std::pow(2.0, (double)(d - s));
}

// per-level working data for one point set
struct LevelData {
    int d;
    long long b;
    std::vector<int> active;             // coordinates with j_i >= 0
    int abs_j = 0;
    long long nboxes = 1;
    double pref;                         // b^(-|j|-s)
    // per occupied box: accumulated sum over points of
    // a_z * prod_{inactive}(1-z_i) * prod_{active} bracket(l) per l-combo
    std::unordered_map<long long, std::vector<cplx>> boxes;
    long long ncombo = 1;                // (b-1)^s
};

LevelData collect_level(const PointSet& P, const std::vector<int>& j) {
    LevelData L;
    L.d = P.d;
    L.b = P.b ? P.b : 2;
    long long b = P.badic ? P.b : 0;
    if (!P.badic) throw std::invalid_argument("level analysis needs a b-adic point set");
    b = P.b;
    L.b = b;
    for (int i = 0; i < P.d; ++i)
        if (j[i] >= 0) {
            L.active.push_back(i);
            L.abs_j += j[i];
            L.nboxes *= ipow(b, j[i]);
            L.ncombo *= (b - 1);
        }
    int s = (int)L.active.size();
    L.pref = pow_ll(b, -(L.abs_j + s));

    std::vector<long long> stride(L.active.size(), 1);
    for (int a = (int)L.active.size() - 2; a >= 0; --a)
        stride[a] = stride[a + 1] * ipow(b, j[L.active[a + 1]]);

    auto loc_all = [&](size_t zi, std::vector<long long>& m, std::vector<int>& k, std::vector<double>& t) {
        badic::Location loc = badic::locate(P.num[zi], P.denom, j, b);
        m = loc.m;
        k = loc.k;
        t.assign(P.d, 0.0);
        for (int a : L.active) {
            Rat frac = Rat(BigInt(P.num[zi][a]) * ipow(b, j[a] + 1), BigInt(P.denom)) - (b * loc.m[a] + loc.k[a]);
            t[a] = rat_to_double(frac);
        }
    };

    std::vector<long long> m;
    std::vector<int> k;
    std::vector<double> t;
    for (size_t zi = 0; zi < P.size(); ++zi) {
        loc_all(zi, m, k, t);
        double w = rat_to_double(P.weight(zi));
        for (int i = 0; i < P.d; ++i)
            if (j[i] < 0) w *= 1.0 - rat_to_double(P.coord_rat(zi, i));
        // bracket values per active coordinate and l
        std::vector<std::vector<cplx>> br(L.active.size(), std::vector<cplx>(b, 0));
        for (size_t a = 0; a < L.active.size(); ++a) {
            int i = L.active[a];
            for (long long l = 1; l < b; ++l) {
                cplx v = (1.0 - t[i]) * root_of_unity((long long)k[i] * l, b);
                for (long long r = k[i] + 1; r < b; ++r) v += root_of_unity(r * l, b);
                br[a][l] = v;
            }
        }
        long long key = 0;
        for (size_t a = 0; a < L.active.size(); ++a) key += m[L.active[a]] * stride[a];
        auto& acc = L.boxes[key];
        if (acc.empty()) acc.assign(L.ncombo, cplx(0));
        // enumerate l-combos (mixed radix over b-1)
        for (long long c = 0; c < L.ncombo; ++c) {
            long long cc = c;
            cplx prod = w;
            for (size_t a = 0; a < L.active.size(); ++a) {
                long long l = 1 + cc % (b - 1);
                cc /= (b - 1);
                prod *= br[a][l];
            }
            acc[c] += prod;
        }
    }
    return L;
}

std::vector<int> combo_to_l(long long c, const LevelData& L, const std::vector<int>& j, int d) {
    std::vector<int> l(d, 1);
    long long cc = c;
    for (int i : L.active) {
        l[i] = (int)(1 + cc % (L.b - 1));
        cc /= (L.b - 1);
    }
    return l;
}

}  // namespace

cplx haar_eval(const HaarIndex& idx, const std::vector<double>& x, long long b) {
    cplx v = 1;
    for (size_t i = 0; i < idx.j.size(); ++i) {
        if (idx.j[i] == -1) continue;
        double scaled = x[i] * pow_ll(b, idx.j[i]);
        long long m = (long long)std::floor(scaled);
        if (m != idx.m[i]) return 0;
        long long k = (long long)std::floor(scaled * (double)b) - b * m;
        v *= root_of_unity(k * idx.l[i], b);
    }
    return v;
}

cplx coeff_volume(const HaarIndex& idx, long long b) {
    int d = (int)idx.j.size();
    int s = idx.s();
    double num = pow_ll(b, -(2 * idx.abs_j() + s));
    return num / volume_denom(idx.j, idx.l, b, d);
}

cplx coeff_indicator(const std::vector<long long>& znum, long long denom, const HaarIndex& idx, long long b) {
    int d = (int)idx.j.size();
    badic::Location loc = badic::locate(znum, denom, idx.j, b);
    double pref = pow_ll(b, -(idx.abs_j() + idx.s()));
    cplx v = pref;
    for (int i = 0; i < d; ++i) {
        if (idx.j[i] == -1) {
            v *= 1.0 - rat_to_double(Rat(BigInt(znum[i]), BigInt(denom)));
            continue;
        }
        if (loc.m[i] != idx.m[i]) return 0;
        int k = loc.k[i];
        Rat frac = Rat(BigInt(znum[i]) * ipow(b, idx.j[i] + 1), BigInt(denom)) - (b * idx.m[i] + k);
        cplx bracket = (1.0 - rat_to_double(frac)) * root_of_unity((long long)k * idx.l[i], b);
        for (long long r = k + 1; r < b; ++r) bracket += root_of_unity(r * idx.l[i], b);
        v *= bracket;
    }
    return v;
}

std::vector<std::pair<HaarIndex, cplx>> level_spectrum(const PointSet& P, const std::vector<int>& j) {
    if (!P.badic) throw std::invalid_argument("level_spectrum: b-adic point set required");
    long long b = P.b;
    int d = P.d;
    LevelData L = collect_level(P, j);
    double total = (double)L.nboxes * (double)L.ncombo;
    if (total > 2e6) throw BudgetError("level_spectrum: index budget exceeded");
    std::vector<long long> strideB(L.active.size(), 1);
    for (int a = (int)L.active.size() - 2; a >= 0; --a)
        strideB[a] = strideB[a + 1] * ipow(b, j[L.active[a + 1]]);
    std::vector<std::pair<HaarIndex, cplx>> out;
    out.reserve((size_t)total);
    for (long long box = 0; box < L.nboxes; ++box) {
        std::vector<long long> m(d, 0);
        long long rem = box;
        for (size_t a = 0; a < L.active.size(); ++a) {
            m[L.active[a]] = rem / strideB[a];
            rem %= strideB[a];
        }
        auto it = L.boxes.find(box);
        for (long long c = 0; c < L.ncombo; ++c) {
            HaarIndex idx{j, m, combo_to_l(c, L, j, d)};
            cplx mu = -coeff_volume(idx, b);
            if (it != L.boxes.end()) mu += L.pref * it->second[c];
            out.push_back({idx, mu});
        }
    }
    return out;
}

HaarSpectrum disc_spectrum(const PointSet& P, int J) {
    if (!P.badic) throw std::invalid_argument("disc_spectrum: b-adic point set required");
    long long b = P.b;
    int d = P.d;
    // per-coordinate index count: 1 for level -1, b^j (b-1) otherwise
    double total = 1;
    {
        double per = 1;
        for (int j = 0; j <= J; ++j) per += pow_ll(b, j) * (double)(b - 1);
        for (int i = 0; i < d; ++i) total *= per;
    }
    if (total > 2e6) throw BudgetError("disc_spectrum: index budget exceeded");

    HaarSpectrum S;
    S.b = b;
    S.d = d;
    S.J = J;
    S.source = "disc:" + P.family;
    std::vector<int> j(d, -1);
    do {
        auto lev = level_spectrum(P, j);
        S.entries.insert(S.entries.end(), lev.begin(), lev.end());
    } while (next_levels(j, J));
    return S;
}

void write_spectrum_csv(const HaarSpectrum& S, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "# base=" << S.b << " d=" << S.d << " jmax=" << S.J << " source=" << S.source << "\n";
    out.precision(17);
    for (const auto& [idx, mu] : S.entries) {
        for (int i = 0; i < S.d; ++i) out << idx.j[i] << ',';
        for (int i = 0; i < S.d; ++i) out << idx.m[i] << ',';
        for (int i = 0; i < S.d; ++i) out << idx.l[i] << ',';
        out << mu.real() << ',' << mu.imag() << '\n';
    }
}

double level_power_sum(const PointSet& P, const std::vector<int>& j, double p) {
    long long b = P.b;
    int d = P.d;
    LevelData L = collect_level(P, j);
    int s = (int)L.active.size();
    double sum = 0;
    for (const auto& [key, acc] : L.boxes) {
        for (long long c = 0; c < L.ncombo; ++c) {
            HaarIndex idx{j, std::vector<long long>(d, 0), combo_to_l(c, L, j, d)};
            cplx mu = L.pref * acc[c] - coeff_volume(idx, b);
            sum += std::pow(std::abs(mu), p);
        }
    }
    long long unocc = L.nboxes - (long long)L.boxes.size();
    if (unocc > 0) {
        double Tp = 0;
        for (long long l = 1; l < b; ++l) Tp += std::pow(std::abs(root_of_unity(l, b) - 1.0), -p);
        double per = std::pow(pow_ll(b, -(2 * L.abs_j + s)), p) * std::pow(2.0, -(double)(d - s) * p) * std::pow(Tp, (double)s);
        sum += (double)unocc * per;
    }
    return sum;
}

double level_sup(const PointSet& P, const std::vector<int>& j) {
    long long b = P.b;
    int d = P.d;
    LevelData L = collect_level(P, j);
    int s = (int)L.active.size();
    double best = 0;
    for (const auto& [key, acc] : L.boxes)
        for (long long c = 0; c < L.ncombo; ++c) {
            HaarIndex idx{j, std::vector<long long>(d, 0), combo_to_l(c, L, j, d)};
            best = std::max(best, std::abs(L.pref * acc[c] - coeff_volume(idx, b)));
        }
    if (L.nboxes > (long long)L.boxes.size()) {
        double minmod = 2;
        for (long long l = 1; l < b; ++l) minmod = std::min(minmod, std::abs(root_of_unity(l, b) - 1.0));
        best = std::max(best, pow_ll(b, -(2 * L.abs_j + s)) * std::pow(2.0, -(double)(d - s)) * std::pow(minmod, -(double)s));
    }
    return best;
}

ParsevalResult parseval_check(const PointSet& P, int J, double l2_squared_reference) {
    std::vector<int> j(P.d, -1);
    double sum = 0;
    do {
        int absj = 0;
        for (int ji : j)
            if (ji >= 0) absj += ji;
        sum += pow_ll(P.b, absj) * level_power_sum(P, j, 2.0);
    } while (next_levels(j, J));
    return {sum, l2_squared_reference, l2_squared_reference - sum};
}

}  // namespace mixnet::haar
