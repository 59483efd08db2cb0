// capcover: command-line surface for the cap-coverage library. Every
// subcommand is a thin shell over the headers in include/capcover; the same
// numbers are reachable through the API. Angles are degrees on the command
// line and radians everywhere inside; the conversion lives in rad_from_deg.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "capcover/capcover.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5EEDCA55ULL;

double rad_from_deg(double deg) { return deg * capcover::kPi / 180.0; }

// Bound summaries print 4 decimals rounded outward (lower bounds down,
// upper bounds up) so the printed interval still brackets the true value.
double floor4(double x) { return std::floor(x * 1e4) / 1e4; }
double ceil4(double x) { return std::ceil(x * 1e4) / 1e4; }

int run_exact(double omega_deg, bool full) {
    const auto p = capcover::p_exact(rad_from_deg(omega_deg));
    if (!p) {
        std::printf("p(%g°) = OPEN (omega0 < omega < 90°; no closed form known)\n", omega_deg);
        return 0;
    }
    if (full)
        std::printf("p(%g°) = %.17g\n", omega_deg, *p);
    else
        std::printf("p(%g°) = %.4f\n", omega_deg, *p);
    return 0;
}

int run_bounds(double omega_deg, bool full) {
    const auto r = capcover::bound_report(rad_from_deg(omega_deg));
    if (full) {
        std::printf("p(%g°) bounds: q=%.17g q_lcv=%.17g gilbert=%.17g\n", omega_deg, r.q,
                    r.q_lcv, r.gilbert);
    } else {
        std::printf("p(%g°) bounds: q=%.4f q_lcv=%.4f gilbert=%.4f\n", omega_deg, floor4(r.q),
                    floor4(r.q_lcv), ceil4(r.gilbert));
    }
    std::printf("thresholds: q > 0 above %.2f°, q_lcv > 0 above %.2f°\n",
                capcover::q_threshold() * 180.0 / capcover::kPi,
                capcover::q_lcv_threshold() * 180.0 / capcover::kPi);
    return 0;
}

int run_kappa(const std::string& method, long long n, std::uint64_t seed, int threads) {
    double value = 0.0;
    if (method == "closed") {
        value = capcover::constants::kappa_closed;
    } else if (method == "quad") {
        value = capcover::kappa_quadrature();
    } else {
        const auto rep = capcover::run_tetra_experiment(n, seed, threads);
        std::printf("kappa = %.17g (mc, n=%lld, std_err=%.3g)\n", rep.kappa_hat.value, n,
                    rep.kappa_hat.std_err);
        return 0;
    }
    std::printf("kappa = %.17g (%s)\n", value, method.c_str());
    return 0;
}

int run_pe(double theta_deg, bool full) {
    const double p = capcover::prob_E_given_theta(rad_from_deg(theta_deg));
    std::printf(full ? "P{E | theta=%g°} = %.17g\n" : "P{E | theta=%g°} = %.6f\n", theta_deg,
                p);
    return 0;
}

int run_gdist(int grid, const std::string& out) {
    const auto& dist = capcover::ThetaAbcDist::shared();
    std::ofstream f(out, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + out);
    f << "theta,g,G\n";
    char buf[96];
    for (int i = 0; i < grid; ++i) {
        const double theta =
            capcover::kPi / 2 + (capcover::kPi / 2) * i / static_cast<double>(grid - 1);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", theta, dist.g(theta),
                      dist.G(theta));
        f << buf;
    }
    std::printf("wrote %d grid rows to %s\n", grid, out.c_str());
    return 0;
}

int run_coverage(double omega_deg, long long n, std::uint64_t seed, int threads, bool full) {
    const auto est = capcover::p_monte_carlo(rad_from_deg(omega_deg), n, seed, threads);
    std::printf(full ? "p_hat(%g°) = %.17g ± %.17g (n=%lld, seed=%llu)\n"
                     : "p_hat(%g°) = %.4f ± %.4f (n=%lld, seed=%llu)\n",
                omega_deg, est.p_hat, est.std_err, n,
                static_cast<unsigned long long>(seed));
    return 0;
}

int run_tetra(long long n, std::uint64_t seed, int threads) {
    const auto rep = capcover::run_tetra_experiment(n, seed, threads);
    std::printf("n=%lld seed=%llu\n", rep.n, static_cast<unsigned long long>(seed));
    std::printf("P{well-centered} = %.6f ± %.6f\n", rep.p_wc.value, rep.p_wc.std_err);
    std::printf("P{base acute}    = %.6f ± %.6f\n", rep.p_acute.value, rep.p_acute.std_err);
    std::printf("kappa_hat        = %.6f ± %.6f\n", rep.kappa_hat.value,
                rep.kappa_hat.std_err);
    std::printf("E[N | wc]        = %.6f ± %.6f\n", rep.e_n_hat.value, rep.e_n_hat.std_err);
    std::printf("N counts over well-centered quads:");
    for (const auto& [faces, count] : rep.n_counts)
        std::printf(" %d:%lld", faces, count);
    std::printf("\nmin observed N   = %d (exploratory; no ground truth)\n", rep.min_n);
    return 0;
}

int run_hist(const std::string& kind, long long n, int bins, std::uint64_t seed,
             const std::string& out, int threads) {
    capcover::Histogram h;
    if (kind == "theta-abc")
        h = capcover::hist_theta_abc(n, bins, seed, capcover::ThetaAbcDist::shared(), threads);
    else
        h = capcover::hist_theta_min(n, bins, seed, capcover::ThetaAbcDist::shared(), threads);
    capcover::emit_csv(h, out);
    std::printf("wrote %s histogram (%d bins, %lld samples kept) to %s\n", kind.c_str(), bins,
                h.n, out.c_str());
    return 0;
}

int run_check(const std::string& kind, std::uint64_t seed) {
    using namespace capcover;
    bool ok = true;
    if (kind == "duality") {
        RngStream rng(seed);
        int bad = 0;
        for (int i = 0; i < 100'000; ++i) {
            const double omega =
                constants::omega0 + rng.next_double() * (kPi / 2 - constants::omega0);
            std::array<Cap, 4> caps;
            for (auto& cap : caps) cap = Cap{sample_uniform(rng), omega};
            if (covers(caps) != covers_boundary_arrangement(caps)) ++bad;
        }
        ok = bad == 0;
        std::printf("duality vs boundary arrangement: %d disagreements in 100000\n", bad);
    } else if (kind == "dominance") {
        std::vector<double> grid;
        for (int i = 1; i <= 8; ++i) grid.push_back(kPi / 2 + i * (kPi / 2) / 9.0);
        const auto pts = dominance_check(1'000'000, grid, seed);
        for (const auto& pt : pts) {
            std::printf("xi=%.4f F_hat=%.5f±%.5f 4G=%.5f 32kG=%.5f %s\n", pt.xi, pt.f_hat,
                        pt.f_sigma, pt.crude, pt.refined,
                        pt.crude_ok && pt.refined_ok ? "ok" : "VIOLATION");
            ok = ok && pt.crude_ok && pt.refined_ok;
        }
    } else {  // delta-norm
        for (double theta : {1.7, 2.0, 2.4, 2.8}) {
            const double r = std::sin(theta);
            const double mass = integrate(
                [&](double u) {
                    return integrate(
                        [&](double v) {
                            return delta_density(2 * r * std::sin(u), 2 * r * std::sin(v),
                                                 theta) *
                                   4 * r * r * std::cos(u) * std::cos(v);
                        },
                        kPi / 2 - u, kPi / 2, QuadratureSpec{1e-10, 1e-10, 1 << 15});
                },
                0.0, kPi / 2, QuadratureSpec{1e-9, 1e-9, 1 << 15});
            const bool here = std::abs(mass - 0.5) < 1e-8;
            std::printf("theta=%.2f: integral of delta = %.12f %s\n", theta, mass,
                        here ? "ok" : "VIOLATION");
            ok = ok && here;
        }
    }
    std::printf("%s: %s\n", kind.c_str(), ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "capcover: four random circular caps on the sphere.\n"
        "Angles are degrees on the command line, radians in files and the API.\n"
        "All randomized subcommands default to seed 0x5EEDCA55 and are\n"
        "bit-reproducible for a given seed at any --threads value."};
    app.require_subcommand(1);

    double omega_deg = 88.0, theta_deg = 120.0;
    long long n = 1'000'000;
    int bins = 100, grid = 200, threads = 1;
    std::uint64_t seed = kDefaultSeed;
    bool full = false;
    std::string method = "quad", out, hist_kind, check_kind;

    auto add_common = [&](CLI::App* cmd, bool wants_seed) {
        cmd->add_flag("--full", full, "print 17 significant digits");
        if (wants_seed) {
            cmd->add_option("--seed", seed, "RNG seed (default 0x5EEDCA55)");
            cmd->add_option("--threads", threads, "worker threads (output-invariant)");
        }
    };

    auto* exact = app.add_subcommand("exact", "closed-form p(omega) where known");
    exact->add_option("--omega-deg", omega_deg, "cap radius in degrees")->required();
    add_common(exact, false);

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds for p(omega)");
    bounds->add_option("--omega-deg", omega_deg, "cap radius in degrees")->required();
    add_common(bounds, false);

    auto* kappa = app.add_subcommand("kappa", "the constant kappa = 11/96 - 1/(8 pi^2)");
    kappa->add_option("--method", method, "quad | closed | mc")
        ->check(CLI::IsMember({"quad", "closed", "mc"}));
    kappa->add_option("--n", n, "samples for --method mc");
    add_common(kappa, true);

    auto* pe = app.add_subcommand("pe", "P{E | theta}: well-centered with acute base");
    pe->add_option("--theta-deg", theta_deg, "circumcap radius in degrees")->required();
    add_common(pe, false);

    auto* gdist = app.add_subcommand("gdist", "tabulate the theta_abc density g and cdf G");
    gdist->add_option("--grid", grid, "number of grid rows")->check(CLI::Range(2, 1 << 20));
    gdist->add_option("--out", out, "output CSV path")->required();

    auto* coverage = app.add_subcommand("coverage", "Monte Carlo coverage probability");
    coverage->add_option("--omega-deg", omega_deg, "cap radius in degrees")->required();
    coverage->add_option("--n", n, "number of trials")->check(CLI::PositiveNumber);
    add_common(coverage, true);

    auto* simulate = app.add_subcommand("simulate", "sampling experiments");
    simulate->require_subcommand(1);
    auto* tetra = simulate->add_subcommand("tetra", "random inscribed tetrahedra");
    tetra->add_option("--n", n, "number of quads")->check(CLI::PositiveNumber);
    add_common(tetra, true);

    auto* hist = app.add_subcommand("hist", "histogram CSV with theoretical overlay");
    hist->add_option("kind", hist_kind, "theta-abc | theta-min")
        ->required()
        ->check(CLI::IsMember({"theta-abc", "theta-min"}));
    hist->add_option("--n", n, "number of quads")->check(CLI::PositiveNumber);
    hist->add_option("--bins", bins, "number of bins")->check(CLI::Range(2, 1 << 20));
    hist->add_option("--out", out, "output CSV path")->required();
    add_common(hist, true);

    auto* check = app.add_subcommand("check", "internal consistency checks");
    check->add_option("kind", check_kind, "duality | dominance | delta-norm")
        ->required()
        ->check(CLI::IsMember({"duality", "dominance", "delta-norm"}));
    add_common(check, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*exact) return run_exact(omega_deg, full);
        if (*bounds) return run_bounds(omega_deg, full);
        if (*kappa) return run_kappa(method, n, seed, threads);
        if (*pe) return run_pe(theta_deg, full);
        if (*gdist) return run_gdist(grid, out);
        if (*coverage) return run_coverage(omega_deg, n, seed, threads, full);
        if (*tetra) return run_tetra(n, seed, threads);
        if (*hist) return run_hist(hist_kind, n, bins, seed, out, threads);
        if (*check) return run_check(check_kind, seed);
    } catch (const capcover::ConvergenceError& e) {
        std::fprintf(stderr, "error: quadrature did not converge; best estimate %.17g, "
                             "error bound %.3g\n",
                     e.best, e.error_bound);
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: angle flag out of range (--omega-deg/--theta-deg): %s\n",
                     e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: bad argument value: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
