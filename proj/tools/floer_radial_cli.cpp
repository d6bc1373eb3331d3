// Command-line front end: every subcommand prints machine-readable JSON or
// TSV.  Exit codes: 0 success/pass, 1 certified failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "floer_radial/json_io.hpp"

namespace fr = floer_radial;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fr::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open " + path);
    fr::json j;
    in >> j;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Stair Hamiltonians, action spectra, and Floer rank tables for disk "
                 "cotangent bundles of spheres (all slopes and periods in multiples of 2pi)"};
    app.require_subcommand(1);

    double tol = 1e-6;
    int grid_n = 10001;
    long seed = 0;
    app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    app.add_option("--grid-n", grid_n, "grid resolution for sampled profiles")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    if (const char* env = std::getenv("FLOER_RADIAL_SEED")) seed = std::atol(env);

    // stair build
    auto* stair = app.add_subcommand("stair", "stair-like Hamiltonians");
    auto* stair_build = stair->add_subcommand("build", "select constants and assemble a profile");
    std::string opt_a, opt_b, opt_b0, opt_cphi, profile_out;
    bool as_tsv = false, as_json = false;
    stair_build->add_option("--a", opt_a, "outer slope a (rational)")->required();
    stair_build->add_option("--b", opt_b, "inner slope b (rational)")->required();
    stair_build->add_option("--b0", opt_b0, "largest period below b (rational)")->required();
    stair_build->add_option("--cphi", opt_cphi, "size constant C(W1, phi) (rational)")->required();
    stair_build->add_option("--profile-out", profile_out, "write the full profile JSON here");
    stair_build->add_flag("--tsv", as_tsv, "TSV output");
    stair_build->add_flag("--json", as_json, "JSON output (default)");

    // smooth convex|concave
    auto* smooth = app.add_subcommand("smooth", "certified interpolants");
    std::string opt_r0, opt_ell, opt_alpha, opt_beta0, opt_beta1, opt_barrier;
    bool sm_tsv = false, sm_json = false;
    auto add_smooth_opts = [&](CLI::App* c) {
        c->add_option("--r0", opt_r0)->required();
        c->add_option("--ell", opt_ell)->required();
        c->add_option("--alpha", opt_alpha)->required();
        c->add_option("--beta0", opt_beta0)->required();
        c->add_option("--beta1", opt_beta1)->required();
        c->add_flag("--tsv", sm_tsv, "TSV output (default)");
        c->add_flag("--json", sm_json, "JSON output");
    };
    auto* smooth_convex = smooth->add_subcommand("convex", "constant -> linear interpolant");
    add_smooth_opts(smooth_convex);
    auto* smooth_concave = smooth->add_subcommand("concave", "linear -> constant interpolant");
    add_smooth_opts(smooth_concave);
    smooth_concave->add_option("--barrier", opt_barrier, "lower linear barrier slope");

    // spectrum orbits
    auto* spectrum = app.add_subcommand("spectrum", "twisted-orbit enumeration");
    auto* spectrum_orbits = spectrum->add_subcommand("orbits", "enumerate orbit families");
    std::string profile_path, spectrum_path, opt_supf = "0", opt_rho = "0";
    spectrum_orbits->add_option("--profile", profile_path, "stair profile JSON")->required();
    spectrum_orbits->add_option("--spectrum", spectrum_path, "period spectrum JSON")->required();
    spectrum_orbits->add_option("--supf", opt_supf, "sup|F_phi| (rational)");
    spectrum_orbits->add_option("--rho", opt_rho, "support radius (rational)");

    // hf table|kappa|visible
    auto* hf = app.add_subcommand("hf", "Floer rank tables for D*S^n");
    int hf_n = 2, hf_mmax = 10, hf_m = 1;
    bool hf_tsv = false, hf_json = false;
    auto* hf_table = hf->add_subcommand("table", "rank table for m = 1..mmax");
    hf_table->add_option("--n", hf_n)->required();
    hf_table->add_option("--mmax", hf_mmax)->required();
    hf_table->add_flag("--tsv", hf_tsv);
    hf_table->add_flag("--json", hf_json);
    auto* hf_kappa = hf->add_subcommand("kappa", "iterated ratio of the fibered twist");
    hf_kappa->add_option("--n", hf_n)->required();
    hf_kappa->add_option("--mmax", hf_mmax)->capture_default_str();
    auto* hf_visible = hf->add_subcommand("visible", "visible rank bounds");
    hf_visible->add_option("--n", hf_n)->required();
    hf_visible->add_option("--m", hf_m)->required();

    // transfer copies|bound|kappa
    auto* transfer = app.add_subcommand("transfer", "transfer-morphism arithmetic");
    auto* tr_copies = transfer->add_subcommand("copies", "cylindrical copies layout");
    std::string opt_delta;
    int tr_m = 1;
    tr_copies->add_option("--delta", opt_delta, "delta in (0, 1/2), rational")->required();
    tr_copies->add_option("--m", tr_m)->required();
    auto* tr_bound = transfer->add_subcommand("bound", "ambient dimension bound");
    long tr_below = 0, tr_w1 = 0, tr_w2 = 0;
    tr_bound->add_option("--below", tr_below)->required();
    tr_bound->add_option("--w1", tr_w1)->required();
    tr_bound->add_option("--w2", tr_w2)->required();
    auto* tr_kappa = transfer->add_subcommand("kappa", "iterated-ratio estimate of a sequence");
    std::string dims_path;
    double window_fraction = 0.5;
    tr_kappa->add_option("--dims", dims_path, "file with one dimension per line (m = 1, 2, ...)")
        ->required();
    tr_kappa->add_option("--window", window_fraction, "tail window fraction")
        ->capture_default_str();

    // geodesic check
    auto* geodesic = app.add_subcommand("geodesic", "closed-geodesic certificates");
    auto* geo_check = geodesic->add_subcommand("check", "ellipsoid length certificate");
    std::string axes_str;
    geo_check->add_option("--axes", axes_str, "semi-axes a1,a2,a3")->required();

    CLI11_PARSE(app, argc, argv);

    if (stair_build->parsed()) {
        auto p = fr::select_constants(fr::parse_rational(opt_a), fr::parse_rational(opt_b),
                                      fr::parse_rational(opt_b0), fr::parse_rational(opt_cphi));
        auto cert = fr::check_inequalities(p);
        auto profile = fr::assemble_stair(p, tol, grid_n);
        if (!profile_out.empty()) {
            std::ofstream out(profile_out);
            out << fr::to_json(profile).dump(2) << "\n";
        }
        if (as_tsv) {
            std::cout << "constant\tvalue\n";
            std::cout << "A\t" << fr::format_rational(p.A) << "\n";
            std::cout << "delta1\t" << fr::format_rational(p.delta1) << "\n";
            std::cout << "delta2\t" << fr::format_rational(p.delta2) << "\n";
            std::cout << "B\t" << fr::format_rational(p.B) << "\n";
            std::cout << "delta3\t" << fr::format_rational(p.delta3) << "\n";
            std::cout << "C\t" << fr::format_rational(p.C) << "\n";
        } else {
            fr::json j;
            j["units"] = "multiples of 2pi";
            j["params"] = fr::to_json(p);
            j["certificate"] = fr::to_json(cert);
            j["segments"] = fr::to_json(profile)["segments"];
            std::cout << j.dump(2) << "\n";
        }
        return cert.all_pass ? 0 : 1;
    }

    if (smooth_convex->parsed() || smooth_concave->parsed()) {
        fr::InterpolationSpec spec;
        spec.r0 = fr::parse_rational(opt_r0);
        spec.ell = fr::parse_rational(opt_ell);
        spec.alpha = fr::parse_rational(opt_alpha);
        spec.beta0 = fr::parse_rational(opt_beta0);
        spec.beta1 = fr::parse_rational(opt_beta1);
        spec.shape = smooth_convex->parsed() ? fr::InterpShape::ConvexToLinear
                                             : fr::InterpShape::LinearToConstant;
        if (!opt_barrier.empty()) spec.barrier = fr::parse_rational(opt_barrier);
        auto prof = smooth_convex->parsed() ? fr::build_convex(spec, tol, grid_n)
                                            : fr::build_concave(spec, tol, grid_n);
        if (sm_json)
            std::cout << fr::to_json(prof).dump(2) << "\n";
        else
            std::cout << fr::profile_tsv(prof);
        return 0;
    }

    if (spectrum_orbits->parsed()) {
        auto profile = fr::stair_profile_from_json(read_json_file(profile_path));
        auto spec = fr::period_spectrum_from_json(read_json_file(spectrum_path));
        fr::SymplectoSize sz(fr::parse_rational(opt_supf), fr::parse_rational(opt_rho));
        auto orbits = fr::enumerate_orbits(profile, spec, sz, tol);
        std::cout << "region\tr\tperiod\taction\n";
        for (const auto& c : orbits) {
            std::cout << fr::region_name(c.region) << "\t"
                      << (c.radius ? std::to_string(*c.radius) : std::string("-")) << "\t"
                      << fr::format_rational(c.period) << "\t";
            if (c.exact_action)
                std::cout << fr::format_rational(*c.exact_action);
            else if (c.action)
                std::cout << *c.action;
            else
                std::cout << "-";
            std::cout << "\n";
        }
        return 0;
    }

    if (hf_table->parsed()) {
        if (hf_json) {
            fr::json rows = fr::json::array();
            for (int m = 1; m <= hf_mmax; ++m) {
                auto g = fr::hf_ranks(hf_n, m);
                rows.push_back(fr::json{{"m", m}, {"dims", fr::to_json(g)}, {"total", g.total()}});
            }
            std::cout << fr::json{{"n", hf_n}, {"slope_units", "multiples of 2pi, plus eps"},
                                  {"rows", rows}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "m\tdegree:dim\ttotal\n";
            for (int m = 1; m <= hf_mmax; ++m) {
                auto g = fr::hf_ranks(hf_n, m);
                std::cout << m << "\t";
                bool first = true;
                for (const auto& [k, d] : g.dims) {
                    if (!first) std::cout << " ";
                    std::cout << k << ":" << d;
                    first = false;
                }
                std::cout << "\t" << g.total() << "\n";
            }
        }
        return 0;
    }

    if (hf_kappa->parsed()) {
        auto t = fr::kappa_fibered_twist(hf_n, hf_mmax);
        fr::json j;
        j["limit"] = fr::format_rational(t.limit);
        fr::json ratios = fr::json::array();
        for (std::size_t i = 0; i < t.ratios.size(); ++i)
            ratios.push_back(fr::json{{"m", i + 1}, {"ratio", fr::format_rational(t.ratios[i])}});
        j["ratios"] = ratios;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (hf_visible->parsed()) {
        auto v = fr::visible_rank_bounds(hf_n, hf_m);
        std::cout << fr::to_json(v).dump(2) << "\n";
        return 0;
    }

    if (tr_copies->parsed()) {
        auto layout = fr::copies_layout(fr::parse_rational(opt_delta), tr_m);
        std::cout << fr::to_json(layout).dump(2) << "\n";
        return 0;
    }

    if (tr_bound->parsed()) {
        auto r = fr::ambient_bound({tr_below, tr_w2, tr_w1});
        std::cout << fr::to_json(r).dump(2) << "\n";
        return r.verdict == fr::BoundVerdict::Fail ? 1 : 0;
    }

    if (tr_kappa->parsed()) {
        std::ifstream in(dims_path);
        if (!in) throw CliError("cannot open " + dims_path);
        std::vector<long> dims;
        long d;
        while (in >> d) dims.push_back(d);
        auto est = fr::kappa_estimate(dims, window_fraction);
        std::cout << fr::json{{"estimate", fr::format_rational(est)},
                              {"estimate_float", fr::to_double(est)},
                              {"window_fraction", window_fraction}}
                         .dump(2)
                  << "\n";
        return 0;
    }

    if (geo_check->parsed()) {
        double a1, a2, a3;
        char c1, c2;
        std::istringstream is(axes_str);
        if (!(is >> a1 >> c1 >> a2 >> c2 >> a3) || c1 != ',' || c2 != ',')
            throw CliError("--axes expects a1,a2,a3");
        auto rep = fr::geodesic_certificate(a1, a2, a3, tol);
        std::cout << fr::to_json(rep).dump(2) << "\n";
        return rep.pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
