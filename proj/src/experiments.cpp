#include "sqt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

#include "sqt/transfer_dynamics.hpp"
#include "sqt/version.hpp"

namespace sqt {

namespace {

void validate_axis(const char* name, double min, double max, int steps) {
    if (!std::isfinite(min) || !std::isfinite(max))
        throw std::invalid_argument(std::string(name) + " axis bounds must be finite");
    if (steps < 1)
        throw std::invalid_argument(std::string(name) + " axis needs steps >= 1, got " +
                                    std::to_string(steps));
    if (steps == 1 && min != max)
        throw std::invalid_argument(std::string(name) +
                                    " axis with steps == 1 must be pinned (min == max)");
    if (steps >= 2 && !(min < max))
        throw std::invalid_argument(std::string(name) + " axis needs min < max for steps >= 2");
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t hash_spec(const SweepSpec& s) {
    char buf[320];
    std::snprintf(buf, sizeof buf, "%.17g|%.17g|%d|%.17g|%.17g|%d|%.17g|%.17g|%.17g|%.17g|%.17g",
                  s.r_min, s.r_max, s.r_steps, s.tau_min, s.tau_max, s.tau_steps,
                  s.preparation.alpha, s.preparation.beta, s.preparation.phi, s.preparation.psi,
                  s.epsilon_tail);
    return fnv1a(buf);
}

template <typename PointFn>
SweepResult run_sweep(const SweepSpec& spec, PointFn&& point) {
    spec.validate();
    SweepResult out;
    out.r_values = grid_axis(spec.r_min, spec.r_max, spec.r_steps);
    out.tau_values = grid_axis(spec.tau_min, spec.tau_max, spec.tau_steps);
    out.reports.reserve(out.r_values.size() * out.tau_values.size());
    out.config_hash = hash_spec(spec);
    out.code_version = kVersion;
    out.epsilon_tail = spec.epsilon_tail;

    for (double r : out.r_values) {
        const SqueezedSpectrum s = build_spectrum(r, spec.epsilon_tail);
        out.max_n_max = std::max(out.max_n_max, s.n_max);
        for (double tau : out.tau_values)
            out.reports.push_back(point(s, tau));
    }
    return out;
}

}  // namespace

void SweepSpec::validate() const {
    validate_axis("r", r_min, r_max, r_steps);
    validate_axis("tau", tau_min, tau_max, tau_steps);
    if (r_min < 0.0)
        throw std::invalid_argument("r axis must be non-negative");
    if (tau_min < 0.0)
        throw std::invalid_argument("tau axis must be non-negative");
    if (!std::isfinite(epsilon_tail) || epsilon_tail <= 0.0 || epsilon_tail >= 1.0)
        throw std::invalid_argument("epsilon_tail must lie in (0, 1)");
}

std::vector<double> grid_axis(double min, double max, int steps) {
    validate_axis("grid", min, max, steps);
    std::vector<double> v(static_cast<std::size_t>(steps));
    if (steps == 1) {
        v[0] = min;
        return v;
    }
    const double h = (max - min) / (steps - 1);
    for (int k = 0; k < steps; ++k)
        v[static_cast<std::size_t>(k)] = min + h * k;
    v.back() = max;  // exact endpoint regardless of rounding
    return v;
}

const EntanglementReport& SweepResult::at(std::size_t i, std::size_t j) const {
    return reports.at(i * tau_values.size() + j);
}

SweepResult sweep_ground(const SweepSpec& spec) {
    if (!spec.preparation.is_ground())
        throw std::invalid_argument("sweep_ground requires the ground preparation; "
                                    "use sweep_prepared for excited preparations");
    return run_sweep(spec, [](const SqueezedSpectrum& s, double tau) {
        return make_report(assemble_density(coefficients(s, tau)));
    });
}

SweepResult sweep_prepared(const SweepSpec& spec) {
    spec.validate();
    const ProductPreparation prep = spec.preparation;
    return run_sweep(spec, [prep, oracle = std::optional<HilbertOracle>{}](
                               const SqueezedSpectrum& s, double tau) mutable {
        if (!oracle || oracle->spectrum().r != s.r)
            oracle.emplace(s);  // one eigendecomposition per grid row
        return make_report(oracle->evolve(prep, tau));
    });
}

double report_field(const EntanglementReport& rep, const std::string& measure) {
    if (measure == "e_npt") return rep.e_npt;
    if (measure == "concurrence") return rep.concurrence;
    if (measure == "eof") return rep.eof;
    if (measure == "s_linear") return rep.s_linear;
    if (measure == "purity") return rep.purity;
    if (measure == "lambda_min") return rep.lambda_min;
    throw std::invalid_argument("unknown measure \"" + measure + "\"");
}

GridPeak find_peak(const SweepResult& result, const std::string& measure) {
    if (result.reports.empty())
        throw std::invalid_argument("find_peak: empty sweep result");

    GridPeak best;
    best.value = report_field(result.reports[0], measure);
    best.r = result.r_values[0];
    best.tau = result.tau_values[0];
    for (std::size_t i = 0; i < result.r_values.size(); ++i)
        for (std::size_t j = 0; j < result.tau_values.size(); ++j) {
            const double v = report_field(result.at(i, j), measure);
            if (v > best.value) {
                best = {result.r_values[i], result.tau_values[j], v, i, j};
            }
        }
    return best;
}

QubitPairDensity averaged_density(double r, double tau, int grid_n, double epsilon_tail) {
    if (grid_n < 16)
        throw std::invalid_argument("averaged_density: grid_n must be >= 16, got " +
                                    std::to_string(grid_n));
    const HilbertOracle oracle(build_spectrum(r, epsilon_tail));
    const double two_pi = 2.0 * std::numbers::pi;

    Matrix4cd sum = Matrix4cd::Zero();
    for (int i = 0; i < grid_n; ++i) {
        ProductPreparation p;
        p.alpha = two_pi * (i + 0.5) / grid_n;
        for (int j = 0; j < grid_n; ++j) {
            p.beta = two_pi * (j + 0.5) / grid_n;
            sum += oracle.evolve(p, tau).m;
        }
    }
    return make_density(sum / static_cast<double>(grid_n * grid_n));
}

double PrepScanResult::at(std::size_t i, std::size_t j) const {
    return e_npt.at(i * betas.size() + j);
}

PrepScanResult preparation_scan(double r, double tau, int alpha_steps, int beta_steps,
                                double epsilon_tail) {
    if (alpha_steps < 2 || beta_steps < 2)
        throw std::invalid_argument("preparation_scan: both axes need at least 2 steps");
    const HilbertOracle oracle(build_spectrum(r, epsilon_tail));
    const double two_pi = 2.0 * std::numbers::pi;

    PrepScanResult out;
    out.alphas = grid_axis(0.0, two_pi, alpha_steps);
    out.betas = grid_axis(0.0, two_pi, beta_steps);
    out.e_npt.reserve(out.alphas.size() * out.betas.size());
    for (double alpha : out.alphas) {
        ProductPreparation p;
        p.alpha = alpha;
        for (double beta : out.betas) {
            p.beta = beta;
            out.e_npt.push_back(npt_negativity(oracle.evolve(p, tau)).e_npt);
        }
    }
    return out;
}

}  // namespace sqt
