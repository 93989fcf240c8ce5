#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "sqt/density.hpp"
#include "sqt/entanglement_measures.hpp"
#include "sqt/hilbert_oracle.hpp"

namespace sqt {

// Rectangular (r, tau) grid. An axis with steps == 1 must be pinned
// (min == max); with steps >= 2 it is an inclusive linspace over min < max.
struct SweepSpec {
    double r_min = 0.0;
    double r_max = 2.0;
    int r_steps = 200;
    double tau_min = 0.0;
    double tau_max = 3.0 * std::numbers::pi;
    int tau_steps = 200;
    ProductPreparation preparation{};
    double epsilon_tail = kDefaultEpsilonTail;

    // Throws std::invalid_argument on degenerate or out-of-domain axes.
    void validate() const;
};

std::vector<double> grid_axis(double min, double max, int steps);

struct SweepResult {
    std::vector<double> r_values;
    std::vector<double> tau_values;
    std::vector<EntanglementReport> reports;  // row-major, r outer

    // Provenance for regression artifacts.
    std::uint64_t config_hash = 0;
    std::string code_version;
    double epsilon_tail = kDefaultEpsilonTail;
    int max_n_max = 0;

    const EntanglementReport& at(std::size_t i, std::size_t j) const;
};

struct GridPeak {
    double r = 0.0;
    double tau = 0.0;
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

// Closed-form series per grid point; requires the ground preparation.
SweepResult sweep_ground(const SweepSpec& spec);

// Full-space oracle per grid point; any product preparation.
SweepResult sweep_prepared(const SweepSpec& spec);

// Argmax of one report field ("e_npt", "concurrence", "eof", "s_linear",
// "purity", "lambda_min") over the grid. Row-major strict-greater scan, so
// ties resolve to the smallest r, then the smallest tau.
GridPeak find_peak(const SweepResult& result, const std::string& measure = "e_npt");

double report_field(const EntanglementReport& rep, const std::string& measure);

// Mean evolved state over preparation angles alpha, beta in [0, 2pi] with
// phi = psi = 0: midpoint rule with grid_n nodes per angle (grid_n >= 16).
// The state is averaged first; measures are taken on the mean.
QubitPairDensity averaged_density(double r, double tau, int grid_n,
                                  double epsilon_tail = kDefaultEpsilonTail);

// E_NPT over an inclusive (alpha, beta) grid on [0, 2pi]^2 at fixed (r, tau).
struct PrepScanResult {
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<double> e_npt;  // row-major, alpha outer

    double at(std::size_t i, std::size_t j) const;
};

PrepScanResult preparation_scan(double r, double tau, int alpha_steps, int beta_steps,
                                double epsilon_tail = kDefaultEpsilonTail);

}  // namespace sqt
