// Command-line front end for the cat-state decoherence library.  Talks to the
// core exclusively through the C API in mqs.h and writes flat CSV files.

#include "mqs.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;

struct GridOpts {
    double tmin = 1e-5;
    double tmax = 1.0;
    std::size_t tcount = 400;
    std::string tscale = "log";

    mqs_grid_spacing spacing() const {
        return tscale == "lin" ? MQS_GRID_LIN : MQS_GRID_LOG;
    }
};

void add_grid_options(CLI::App *cmd, GridOpts &grid) {
    cmd->add_option("--tmin", grid.tmin, "smallest gamma_t");
    cmd->add_option("--tmax", grid.tmax, "largest gamma_t");
    cmd->add_option("--tcount", grid.tcount, "number of samples")
        ->check(CLI::Range(static_cast<std::size_t>(2),
                           static_cast<std::size_t>(10000000)));
    cmd->add_option("--tscale", grid.tscale, "grid spacing: lin or log")
        ->check(CLI::IsMember({"lin", "log"}));
}

std::string num_tag(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    std::string s(buf);
    for (char &c : s)
        if (c == '.' || c == '+') c = 'p';
    return s;
}

int fail(mqs_status s, const std::string &what) {
    std::fprintf(stderr, "error: %s: %s\n", what.c_str(), mqs_status_message(s));
    return kExitUsage;
}

int write_curve(mqs_curve_kind kind, double alpha, double v, const GridOpts &grid,
                const std::string &path) {
    mqs_curve *curve = nullptr;
    mqs_status s = mqs_curve_create(kind, alpha, v, grid.tmin, grid.tmax,
                                    grid.tcount, grid.spacing(), 0.0, 0.0, &curve);
    if (s != MQS_OK)
        return fail(s, "curve alpha=" + num_tag(alpha) + " V=" + num_tag(v));
    s = mqs_curve_write_csv(curve, path.c_str());
    mqs_curve_free(curve);
    if (s != MQS_OK)
        return fail(s, "writing " + path);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_w0_set(const std::vector<std::pair<double, double>> &params,
               const GridOpts &grid, const std::string &prefix) {
    for (const auto &[alpha, v] : params) {
        const std::string kind = (v == 1.0) ? "pure" : "mixed";
        std::string path = prefix + "w0_" + kind + "_a" + num_tag(alpha);
        if (v != 1.0)
            path += "_V" + num_tag(v);
        path += ".csv";
        if (int rc = write_curve(MQS_CURVE_W0, alpha, v, grid, path))
            return rc;
    }
    return 0;
}

int run_fig4(const std::vector<std::pair<double, double>> &params,
             const GridOpts &grid, const std::string &prefix) {
    for (const auto &[alpha, v] : params) {
        const std::string tag = "_a" + num_tag(alpha) + "_V" + num_tag(v);
        if (int rc = write_curve(MQS_CURVE_DECAY_MIXTURE, alpha, v, grid,
                                 prefix + "ct" + tag + ".csv"))
            return rc;
        if (int rc = write_curve(MQS_CURVE_SINGLE_DECAY, alpha, v, grid,
                                 prefix + "single" + tag + ".csv"))
            return rc;
    }
    return 0;
}

bool parse_pair(const std::string &text, double &alpha, double &v) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            alpha = std::stod(text);
            v = 1.0;
        } else {
            alpha = std::stod(text.substr(0, colon));
            v = std::stod(text.substr(colon + 1));
        }
    } catch (const std::exception &) {
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"cat-state decoherence curves, figure data and verification"};
    app.require_subcommand(1);

    GridOpts grid;
    std::string out = "./";
    std::vector<double> alphas;
    std::vector<double> vs;
    std::string quantity = "w0";
    std::string pure_spec;
    std::string mixed_spec;
    double bracket_lo = 1e-4;
    double bracket_hi = 1e-2;

    auto *fig1 = app.add_subcommand(
        "fig1", "W(0) of pure superpositions, alpha in {20, 30, 50}");
    auto *fig2 = app.add_subcommand(
        "fig2", "pure vs mixed W(0) at equal separation: (30, 10^3), (100, 10^4)");
    auto *fig3 = app.add_subcommand(
        "fig3", "pure vs mixed W(0) at equal photon number");
    auto *fig4 = app.add_subcommand(
        "fig4", "decay mixture C(t) vs the single-rate reference");
    auto *sweep = app.add_subcommand("sweep", "curves for explicit parameters");
    auto *verify = app.add_subcommand(
        "verify", "compare the closed forms against the Fock oracle");
    auto *crossover =
        app.add_subcommand("crossover", "locate the pure/mixed W(0) crossing");

    for (auto *cmd : {fig1, fig2, fig3, sweep})
        add_grid_options(cmd, grid);
    {
        // The crossover region spans gamma_t ~ 1e-5..1e-2.
        auto *cmd = fig4;
        cmd->add_option("--tmin", grid.tmin);
        cmd->add_option("--tmax", grid.tmax)->default_val(1e-2);
        cmd->add_option("--tcount", grid.tcount);
        cmd->add_option("--tscale", grid.tscale)
            ->check(CLI::IsMember({"lin", "log"}));
    }
    for (auto *cmd : {fig1, fig2, fig3, fig4, sweep})
        cmd->add_option("--out", out, "output path prefix");

    sweep->add_option("--alpha", alphas, "amplitude(s)")->required();
    sweep->add_option("--V", vs, "variance(s), paired with --alpha (default 1)");
    sweep->add_option("--quantity", quantity, "w0 | ct | single")
        ->check(CLI::IsMember({"w0", "ct", "single"}));

    crossover->add_option("--pure", pure_spec, "alpha of the pure state")
        ->required();
    crossover->add_option("--mixed", mixed_spec, "alpha:V of the mixed state")
        ->required();
    crossover->add_option("--bracket-lo", bracket_lo, "bracket start (gamma_t)");
    crossover->add_option("--bracket-hi", bracket_hi, "bracket end (gamma_t)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (fig1->parsed()) {
        if (grid.tmax > 1.0) grid.tmax = 1.0;
        return run_w0_set({{20, 1}, {30, 1}, {50, 1}}, grid, out + "fig1_");
    }
    if (fig2->parsed())
        return run_w0_set({{30, 1}, {30, 1e3}, {100, 1}, {100, 1e4}}, grid,
                          out + "fig2_");
    if (fig3->parsed())
        return run_w0_set({{30, 1}, {20, 1e3}, {100, 1}, {50, 1.5e4}}, grid,
                          out + "fig3_");
    if (fig4->parsed()) {
        grid.tmax = std::min(grid.tmax, 1e-2);
        return run_fig4({{30, 1e3}, {100, 1e4}}, grid, out + "fig4_");
    }

    if (sweep->parsed()) {
        if (!vs.empty() && vs.size() != alphas.size()) {
            std::fprintf(stderr, "error: --V count must match --alpha count\n");
            return kExitUsage;
        }
        mqs_curve_kind kind = MQS_CURVE_W0;
        if (quantity == "ct") kind = MQS_CURVE_DECAY_MIXTURE;
        if (quantity == "single") kind = MQS_CURVE_SINGLE_DECAY;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            const double v = vs.empty() ? 1.0 : vs[i];
            const std::string path = out + "sweep_" + quantity + "_a" +
                                     num_tag(alphas[i]) + "_V" + num_tag(v) +
                                     ".csv";
            if (int rc = write_curve(kind, alphas[i], v, grid, path))
                return rc;
        }
        return 0;
    }

    if (verify->parsed()) {
        mqs_verify_report report{};
        const mqs_status s = mqs_verify(&report);
        std::printf("analytic vs Fock-oracle deviations (tolerance %.1e):\n",
                    report.tolerance);
        std::printf("  W(0)            %.3e\n", report.max_dev_w0);
        std::printf("  linear entropy  %.3e\n", report.max_dev_entropy);
        std::printf("  mean photon     %.3e\n", report.max_dev_mean_photon);
        std::printf("  evolved matrix  %.3e\n", report.max_dev_matrix);
        if (s == MQS_OK) {
            std::printf("verify: OK\n");
            return 0;
        }
        std::fprintf(stderr, "verify: FAILED (%s)\n", mqs_status_message(s));
        return kExitVerifyFailure;
    }

    if (crossover->parsed()) {
        double alpha_pure = 0, dummy_v = 1, alpha_mixed = 0, v_mixed = 1;
        if (!parse_pair(pure_spec, alpha_pure, dummy_v) ||
            !parse_pair(mixed_spec, alpha_mixed, v_mixed)) {
            std::fprintf(stderr, "error: bad --pure/--mixed value\n");
            return kExitUsage;
        }
        double gt = 0.0;
        const mqs_status s = mqs_crossover_time(alpha_pure, alpha_mixed, v_mixed,
                                                bracket_lo, bracket_hi, &gt);
        if (s != MQS_OK)
            return fail(s, "crossover in [" + num_tag(bracket_lo) + ", " +
                               num_tag(bracket_hi) + "]");
        std::printf("crossover gamma_t = %.9g (bracket [%g, %g])\n", gt,
                    bracket_lo, bracket_hi);
        return 0;
    }

    return kExitUsage;
}
