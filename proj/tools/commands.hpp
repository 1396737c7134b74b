// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_TOOLS_COMMANDS_HPP
#define FAPCHAN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fapchan/kernels.hpp"
#include "fapchan/quadrature.hpp"

namespace fapchan::cli {

// Flags shared by every subcommand.  Precedence is command line over
// FAPCHAN_* environment variable over the built-in default.
struct GlobalOptions {
    double lambda = 10.0;
    double sigma2 = 200.0; // twice the diffusion coefficient
    double drift = 5.0;
    double amplitude = 200.0;
    std::string kernel_name = "subordination";
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::string out_path; // empty: CSV to stdout
    std::string svg_path; // empty: no plot
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;

    ChannelParams params() const;
    Kernel kernel() const; // maps eq2 / subordination / cauchy
    QuadConfig quad() const;
};

struct PdfOptions {
    double n_min = -100.0;
    double n_max = 100.0;
    int points = 401;
};

struct CapacityOptions {
    double v_min = 1e-3;
    double v_max = 20.0;
    int points = 40;
};

struct InterferenceOptions {
    double r_min = 1.0;
    double r_max = 1000.0;
    int points = 60;
    std::vector<double> drifts{0.1, 5.0};
    bool no_zero_drift = false;
};

struct ValidateMcOptions {
    int bins = 200;
};

struct RegimeOptions {
    double n = 0.0;
};

int cmd_pdf(const GlobalOptions& g, const PdfOptions& o);
int cmd_capacity(const GlobalOptions& g, const CapacityOptions& o);
int cmd_interference(const GlobalOptions& g, const InterferenceOptions& o);
int cmd_validate_mc(const GlobalOptions& g, const ValidateMcOptions& o);
int cmd_regime(const GlobalOptions& g, const RegimeOptions& o);
int cmd_shaping_loss(const GlobalOptions& g);

} // namespace fapchan::cli

#endif // FAPCHAN_TOOLS_COMMANDS_HPP
