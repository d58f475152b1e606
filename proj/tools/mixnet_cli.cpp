#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mixnet/bounds.hpp"
#include "mixnet/digitalnet.hpp"
#include "mixnet/gf.hpp"
#include "mixnet/generators.hpp"
#include "mixnet/haar.hpp"
#include "mixnet/norms.hpp"
#include "mixnet/walsh.hpp"

using namespace mixnet;
using nlohmann::json;

namespace {

// Rebuild generating matrices from a family tag when the construction is
// linear and fully determined by it.
bool attach_matrices(PointSet& P) {
    if (P.gen) return true;
    if (P.family.rfind("cs-d", 0) == 0) {
        auto wpos = P.family.find('w');
        if (wpos == std::string::npos) return false;
        int d = std::stoi(P.family.substr(4, wpos - 4));
        int w = std::stoi(P.family.substr(wpos + 1));
        P.gen = std::make_shared<digitalnet::GeneratingMatrices>(generators::chen_skriganov_matrices(d, P.b, w));
        return true;
    }
    if (P.family.rfind("hammersley-", 0) == 0) {
        std::string pat = P.family.substr(11);
        if (pat != std::string(pat.size(), 's')) return false;  // complements are affine, not linear
        digitalnet::GeneratingMatrices G;
        G.b = P.b;
        G.n = P.n;
        G.d = 2;
        G.C.assign(2, std::vector<std::vector<int>>(P.n, std::vector<int>(P.n, 0)));
        for (int k = 0; k < P.n; ++k) {
            G.C[0][k][P.n - 1 - k] = 1;
            G.C[1][k][k] = 1;
        }
        P.gen = std::make_shared<digitalnet::GeneratingMatrices>(G);
        return true;
    }
    return false;
}

int cmd_gen(const std::string& family, long long b, int n, int d, const std::string& pattern, int an,
            long long N, double theta, long long budget, const std::string& out) {
    PointSet P;
    if (family == "equidistant") {
        P = generators::equidistant(N);
    } else if (family == "kronecker") {
        P = generators::lift_sequence(generators::kronecker(theta, N), N);
        P.family = "kronecker";
    } else if (family == "halton") {
        std::vector<long long> bases;
        long long c = 2;
        while ((int)bases.size() < d - 1) {
            if (gf::is_prime(c)) bases.push_back(c);
            ++c;
        }
        P = generators::halton(N, bases);
    } else if (family == "vdc") {
        P = generators::van_der_corput(N);
    } else if (family == "hammersley") {
        generators::HammersleyPattern pat =
            pattern.empty() ? generators::HammersleyPattern::canonical(n, an) : generators::HammersleyPattern::parse(pattern);
        if (std::pow((double)b, n) > (double)budget) throw BudgetError("generation budget exceeded");
        P = generators::hammersley(b, n, pat);
    } else if (family == "cs") {
        if (n % (2 * d) != 0) throw CLI::ValidationError("--n must equal 2*d*w for the cs family");
        P = generators::chen_skriganov(d, b, n / (2 * d), budget);
    } else {
        throw CLI::ValidationError("unknown family " + family);
    }
    write_csv(P, out);
    std::cerr << "wrote " << P.size() << " points to " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital nets, low-discrepancy sets, and discrepancy norms"};
    app.require_subcommand(1);
    if (const char* t = std::getenv("MIXNET_THREADS")) (void)t;  // computations are single-threaded

    std::string family, pattern, in_path, out_path = "points.csv", norm = "l2", regime;
    long long b = 2, N = 0, samples = 100, bmax = 101, budget = 200000;
    int n = 1, d = 2, an = -1, jmax = 2, vexp = -1, p = 2;
    double theta = 0.6180339887498949, qq = 2, rr = 0, pp = 2;
    std::uint64_t seed = 1;
    bool do_ident = false, do_parseval = false, do_report = false;
    std::string with_path;

    auto* gen = app.add_subcommand("gen", "generate a point set");
    gen->add_option("--family", family)->required();
    gen->add_option("--b", b);
    gen->add_option("--n", n);
    gen->add_option("--d", d);
    gen->add_option("--pattern", pattern);
    gen->add_option("--an", an);
    gen->add_option("--N", N);
    gen->add_option("--theta", theta);
    gen->add_option("--budget", budget);
    gen->add_option("--out", out_path);

    auto* chk = app.add_subcommand("check-net", "verify net quality and dual distances");
    chk->add_option("--in", in_path)->required();
    chk->add_option("--v-expected", vexp);

    auto* dsc = app.add_subcommand("disc", "compute a discrepancy norm");
    dsc->add_option("--in", in_path)->required();
    dsc->add_option("--norm", norm);
    dsc->add_option("--p", pp);
    dsc->add_option("--q", qq);
    dsc->add_option("--r", rr);
    dsc->add_option("--samples", samples);
    dsc->add_option("--seed", seed);

    auto* har = app.add_subcommand("haar", "dump the Haar spectrum of D_P");
    har->add_option("--in", in_path)->required();
    har->add_option("--jmax", jmax);
    har->add_option("--out", out_path)->required();

    auto* wsp = app.add_subcommand("walsh-split", "main-part/rest split via the dual net");
    wsp->add_option("--in", in_path)->required();
    wsp->add_option("--samples", samples);
    wsp->add_option("--seed", seed);

    auto* bnd = app.add_subcommand("bounds", "constants and bound reports");
    bnd->add_flag("--report", do_report);
    bnd->add_option("--d", d);
    bnd->add_option("--b", b);
    bnd->add_option("--with", with_path);

    auto* ver = app.add_subcommand("verify", "identity and Parseval checks");
    ver->add_flag("--identities", do_ident);
    ver->add_option("--bmax", bmax);
    ver->add_flag("--parseval", do_parseval);
    ver->add_option("--in", in_path);
    ver->add_option("--jmax", jmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, b, n, d, pattern, an, N, theta, budget, out_path);

        if (chk->parsed()) {
            PointSet P = read_csv(in_path);
            int v = digitalnet::net_quality(P, P.b, P.n);
            json j{{"schema", 1}, {"family", P.family}, {"v", v}};
            if (attach_matrices(P)) {
                auto dual = digitalnet::dual_space(digitalnet::row_space(*P.gen));
                auto [delta, kappa] = digitalnet::min_distance(dual);
                j["delta"] = delta;
                j["kappa"] = kappa;
            }
            std::cout << j.dump(2) << "\n";
            return (vexp >= 0 && v != vexp) ? 1 : 0;
        }

        if (dsc->parsed()) {
            PointSet P = read_csv(in_path);
            norms::NormReport rep;
            if (norm == "l2") {
                rep = norms::make_report("l2", norms::l2_disc(P), P);
            } else if (norm == "star") {
                rep = norms::make_report("star", norms::star_disc(P), P);
            } else if (norm == "lp") {
                norms::LpMethod m;
                m.samples = samples;
                m.seed = seed;
                auto res = norms::lp_disc(P, (int)pp, m);
                rep = norms::make_report("lp", res.value, P);
                rep.p = pp;
            } else if (norm == "besov") {
                norms::BesovParams prm;
                prm.p = pp;
                prm.q = qq;
                prm.r = rr;
                rep = norms::besov_quasinorm(P, prm);
            } else {
                std::cerr << "unknown norm " << norm << "\n";
                return 2;
            }
            std::cout << rep.to_json() << "\n";
            return 0;
        }

        if (har->parsed()) {
            PointSet P = read_csv(in_path);
            haar::write_spectrum_csv(haar::disc_spectrum(P, jmax), out_path);
            return 0;
        }

        if (wsp->parsed()) {
            PointSet P = read_csv(in_path);
            if (!attach_matrices(P)) {
                std::cerr << "walsh-split: generating matrices unknown for family " << P.family << "\n";
                return 1;
            }
            auto dual = digitalnet::dual_net(*P.gen);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            double max_gap = 0, sup_scaled_rest = 0;
            for (long long s = 0; s < samples; ++s) {
                std::vector<double> y(P.d);
                for (int c = 0; c < P.d; ++c) y[c] = uni(rng);
                auto split = walsh::theta_main(P, y, dual);
                max_gap = std::max(max_gap, std::abs(split.theta - split.theta_kernel));
                sup_scaled_rest = std::max(sup_scaled_rest, (double)P.size() * std::abs(split.rest));
            }
            json j{{"schema", 1},
                   {"family", P.family},
                   {"samples", samples},
                   {"theta_route_gap", max_gap},
                   {"sup_scaled_rest", sup_scaled_rest}};
            std::cout << j.dump(2) << "\n";
            return max_gap <= 1e-9 ? 0 : 1;
        }

        if (bnd->parsed()) {
            if (!with_path.empty()) {
                PointSet P = read_csv(with_path);
                std::vector<norms::NormReport> ms;
                ms.push_back(norms::make_report("l2", norms::l2_disc(P), P));
                try {
                    ms.push_back(norms::make_report("star", norms::star_disc(P), P));
                } catch (const BudgetError&) {
                }
                std::cout << bounds::bound_report(P, ms) << "\n";
                return 0;
            }
            json j{{"schema", 1},
                   {"roth_constant", bounds::roth_constant(d)},
                   {"c_bd", bounds::c_const(b, d)},
                   {"gamma", rat_to_double(bounds::gamma_rat(b, d))},
                   {"limsup_constant", bounds::limsup_constant(d)},
                   {"upper_C2", bounds::upper_constant_2()},
                   {"upper_Cd", bounds::upper_constant_d(d)}};
            for (const char* reg : {"inf", "mid", "one"}) {
                auto e = bounds::exponent_table(reg, d);
                j["exponents"][reg] = {{"alpha", e.alpha}, {"beta", e.beta}, {"note", e.note}};
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (ver->parsed()) {
            int rc = 0;
            json j{{"schema", 1}};
            if (do_ident) {
                auto rep = bounds::verify_identities(bmax);
                j["identities"] = {{"ok", rep.ok}, {"max_err", rep.max_err}, {"worst_b", rep.worst_b}};
                if (!rep.ok) rc = 1;
            }
            if (do_parseval) {
                PointSet P = read_csv(in_path);
                double ref = rat_to_double(norms::l2_disc_squared(P));
                auto res = haar::parseval_check(P, jmax, ref);
                j["parseval"] = {{"sum", res.sum}, {"reference", res.reference}, {"gap", res.gap}};
                if (res.gap < -1e-9) rc = 1;
            }
            std::cout << j.dump(2) << "\n";
            return rc;
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
