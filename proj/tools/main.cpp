// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.
//
// fapchan: first-arrival-position channel statistics for drift-diffusion
// molecular links.  Exit codes: 0 success, 2 argument/domain error,
// 3 numerical non-convergence, 4 Monte-Carlo validation failure.

#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "fapchan/errors.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"fapchan: arrival-position channel statistics for drift-diffusion "
                 "molecular links (lengths in um, times in s)"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand name

    fapchan::cli::GlobalOptions g;
    double diffusion = 100.0;

    app.add_option("--lambda", g.lambda, "release distance to the receiver plane [um]")
        ->capture_default_str()
        ->envname("FAPCHAN_LAMBDA");
    auto* sigma2_opt =
        app.add_option("--sigma2", g.sigma2, "diffusion scale sigma^2 = 2D [um^2/s]")
            ->capture_default_str()
            ->envname("FAPCHAN_SIGMA2");
    auto* diffusion_opt =
        app.add_option("--diffusion", diffusion,
                       "diffusion coefficient D [um^2/s]; sets sigma^2 = 2D")
            ->capture_default_str();
    sigma2_opt->excludes(diffusion_opt);
    diffusion_opt->excludes(sigma2_opt);
    app.add_option("--drift", g.drift, "drift velocity toward the receiver [um/s]")
        ->capture_default_str();
    app.add_option("--amplitude", g.amplitude, "peak input amplitude A [um]")
        ->capture_default_str()
        ->envname("FAPCHAN_AMPLITUDE");
    app.add_option("--kernel", g.kernel_name,
                   "density kernel: eq2 (printed closed form), subordination "
                   "(normalized), cauchy (zero-drift limit)")
        ->capture_default_str()
        ->envname("FAPCHAN_KERNEL")
        ->check(CLI::IsMember({"eq2", "subordination", "cauchy"}));
    app.add_option("--abs-tol", g.abs_tol, "quadrature absolute tolerance")
        ->capture_default_str();
    app.add_option("--rel-tol", g.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write CSV output to this file (default: stdout)");
    app.add_option("--svg", g.svg_path, "also write an SVG plot to this file");
    app.add_option("--seed", g.seed, "Monte-Carlo seed")
        ->capture_default_str()
        ->envname("FAPCHAN_SEED");
    app.add_option("--samples", g.samples, "Monte-Carlo sample count")
        ->capture_default_str();

    fapchan::cli::PdfOptions pdf_o;
    auto* c_pdf = app.add_subcommand("pdf", "tabulate the arrival-position density");
    c_pdf->add_option("--n-min", pdf_o.n_min, "grid start [um]")->capture_default_str();
    c_pdf->add_option("--n-max", pdf_o.n_max, "grid end [um]")->capture_default_str();
    c_pdf->add_option("--points", pdf_o.points, "grid points")->capture_default_str();

    fapchan::cli::CapacityOptions cap_o;
    auto* c_cap = app.add_subcommand(
        "capacity", "sweep drift velocities: mutual information and baselines");
    c_cap->add_option("--v-min", cap_o.v_min, "smallest drift [um/s]")->capture_default_str();
    c_cap->add_option("--v-max", cap_o.v_max, "largest drift [um/s]")->capture_default_str();
    c_cap->add_option("--points", cap_o.points, "log-spaced grid points")
        ->capture_default_str();

    fapchan::cli::InterferenceOptions int_o;
    auto* c_int = app.add_subcommand(
        "interference", "exceedance probability P(|N| > r) over a separation grid");
    c_int->add_option("--r-min", int_o.r_min, "smallest separation [um]")
        ->capture_default_str();
    c_int->add_option("--r-max", int_o.r_max, "largest separation [um]")
        ->capture_default_str();
    c_int->add_option("--points", int_o.points, "log-spaced grid points")
        ->capture_default_str();
    c_int->add_option("--drifts", int_o.drifts,
                      "drift velocities to sweep (0 selects the closed form)")
        ->capture_default_str();
    c_int->add_flag("--no-zero-drift", int_o.no_zero_drift,
                    "omit the zero-drift baseline rows");

    fapchan::cli::ValidateMcOptions val_o;
    auto* c_val = app.add_subcommand(
        "validate-mc", "sample the physical law and adjudicate the analytic kernels");
    c_val->add_option("--bins", val_o.bins, "histogram bins")->capture_default_str();

    fapchan::cli::RegimeOptions reg_o;
    auto* c_reg =
        app.add_subcommand("regime", "classify an offset against the critical scale");
    c_reg->add_option("--n", reg_o.n, "lateral offset to classify [um]")
        ->capture_default_str();

    auto* c_shp = app.add_subcommand(
        "shaping-loss", "uniform-input rate gap below the zero-drift capacity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (diffusion_opt->count() > 0)
            g.sigma2 = 2.0 * diffusion;
        if (c_pdf->parsed()) return fapchan::cli::cmd_pdf(g, pdf_o);
        if (c_cap->parsed()) return fapchan::cli::cmd_capacity(g, cap_o);
        if (c_int->parsed()) return fapchan::cli::cmd_interference(g, int_o);
        if (c_val->parsed()) return fapchan::cli::cmd_validate_mc(g, val_o);
        if (c_reg->parsed()) return fapchan::cli::cmd_regime(g, reg_o);
        if (c_shp->parsed()) return fapchan::cli::cmd_shaping_loss(g);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const fapchan::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
