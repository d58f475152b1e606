#include "mixnet/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace mixnet::bounds {

namespace {

Rat big_B(long long b, int d) {
    Rat B = 1;
    Rat factor = Rat(BigInt(b) * b - 1, 12 * BigInt(b) * b);
    for (int i = 0; i < d; ++i) B *= factor;
    B *= BigInt(b) * b * b;
    for (int i = 2; i < d; ++i) B /= i;  // (d-1)!
    return B;
}

}  // namespace

Rat gamma_rat(long long b, int d) {
    return big_B(b, d) / (BigInt(b) * (b + 1) * (BigInt(b) * b * b - 1));
}

Rat gamma_candidate(long long b, int d, const Rat& y) {
    Rat B = big_B(b, d);
    return B * (y * y / (BigInt(b) * (BigInt(b) * b - 1)) - y * y * y / (BigInt(b) * b * b - 1));
}

double c_const(long long b, int d) {
    return std::sqrt(rat_to_double(gamma_rat(b, d)) / std::pow(std::log((double)b), d - 1));
}

double roth_constant(int d) {
    return c_const(2, d);
}

Rat gamma_bar_rat(long long b, int d) {
    Rat B = big_B(b, d);
    BigInt s = BigInt(b) * b + b + 1;
    return B * Rat(4 * s * s, 27 * (BigInt(b) - 1) * (BigInt(b) + 1) * (b + 1) * (b + 1) * BigInt(b) * b * b);
}

double limsup_constant(int d) {
    return std::sqrt(rat_to_double(gamma_bar_rat(2, d)) / std::pow(std::log(2.0), d - 1));
}

double upper_constant_2() {
    return std::sqrt(278629.0 / (2811072.0 * std::log(22.0)));
}

double upper_constant_d(int d) {
    double fact = 1;
    for (int i = 2; i < d; ++i) fact *= i;
    return std::pow(22.0, d) / (std::sqrt(fact) * std::pow(std::log(2.0), (d - 1) / 2.0));
}

IdentityReport verify_identities(long long b_max, double tol) {
    IdentityReport rep{true, 0, 0};
    for (long long b = 2; b <= b_max; ++b) {
        double s1 = 0, s2 = 0, s3 = 0;
        for (long long l = 1; l < b; ++l) {
            double c1 = std::cos(l * PI / (2 * b)) / std::sin(l * PI / (2 * b));
            s1 += c1 * c1;
            double c2 = std::cos(l * PI / (2 * b - 1)) / std::sin(l * PI / (2 * b - 1));
            s2 += c2 * c2;
            double m = std::abs(root_of_unity(l, b) - 1.0);
            s3 += 1.0 / (m * m);
        }
        double e1 = std::abs(s1 - (double)((2 * b - 1) * (b - 1)) / 3.0);
        double e2 = std::abs(s2 - (double)((2 * b - 3) * (b - 1)) / 3.0);
        double e3 = std::abs(s3 - (double)(b * b - 1) / 12.0);
        double e = std::max({e1, e2, e3});
        if (e > rep.max_err) {
            rep.max_err = e;
            rep.worst_b = b;
        }
        if (e > tol) rep.ok = false;
    }
    return rep;
}

Exponents exponent_table(const std::string& regime, int d) {
    if (regime == "inf") {
        if (d == 2) return {1.0, (double)(d - 1), ""};
        return {(d - 1) / 2.0, (double)(d - 1), "lower exponent carries a non-constructive positive shift eta_d"};
    }
    if (regime == "mid") return {(d - 1) / 2.0, (d - 1) / 2.0, ""};
    if (regime == "one") return {0.5, (d - 1) / 2.0, ""};
    throw std::invalid_argument("exponent_table: regime must be inf, mid or one");
}

std::string bound_report(const PointSet& P, const std::vector<norms::NormReport>& measurements) {
    nlohmann::json j;
    j["schema"] = 1;
    j["set"] = {{"family", P.family}, {"N", (long long)P.size()}, {"d", P.d}, {"b", P.b}, {"n", P.n}};
    j["norms"] = nlohmann::json::array();
    j["envelopes"] = nlohmann::json::array();
    j["assertions"] = nlohmann::json::array();
    double N = (double)P.size();
    double logN = std::log(N);
    for (const auto& m : measurements) {
        j["norms"].push_back(nlohmann::json::parse(m.to_json()));
        if (m.kind == "l2" && P.d >= 2 && N >= 2) {
            double envelope = roth_constant(P.d) * std::pow(logN, (P.d - 1) / 2.0) / N;
            bool pass = m.value >= envelope;
            j["envelopes"].push_back({{"kind", "l2-lower"},
                                      {"constant", roth_constant(P.d)},
                                      {"envelope", envelope},
                                      {"ratio", m.value / envelope}});
            j["assertions"].push_back({{"kind", "l2-lower"}, {"pass", pass}});
            if (!pass) throw std::runtime_error("bound_report: L2 lower bound violated");
        }
        if (m.kind == "star" && N >= 3) {
            double envelope = std::pow(logN, (double)(P.d - 1)) / N;  // rate only, constant-free
            j["envelopes"].push_back(
                {{"kind", "star-rate"}, {"envelope", envelope}, {"ratio", m.value / envelope}});
        }
        if (m.kind == "besov" && N >= 3) {
            double envelope = std::pow(N, m.r - 1) * std::pow(logN, (P.d - 1) / (std::isinf(m.q) ? 1e9 : m.q));
            j["envelopes"].push_back(
                {{"kind", "besov-rate"}, {"envelope", envelope}, {"ratio", m.value / envelope}});
        }
    }
    j["reference_constants"] = {{"upper_C2", upper_constant_2()},
                                {"upper_Cd", upper_constant_d(P.d)},
                                {"limsup_c2", limsup_constant(2)}};
    return j.dump(2);
}

}  // namespace mixnet::bounds
