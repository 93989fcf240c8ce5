#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqt/circuit_params.hpp"
#include "sqt/entanglement_measures.hpp"
#include "sqt/errors.hpp"
#include "sqt/experiments.hpp"
#include "sqt/hilbert_oracle.hpp"
#include "sqt/reporting.hpp"
#include "sqt/squeezed_spectrum.hpp"
#include "sqt/transfer_dynamics.hpp"
#include "sqt/verification.hpp"
#include "sqt/version.hpp"

namespace {

using nlohmann::json;

constexpr double kThreePi = 3.0 * std::numbers::pi;

struct RangeSpec {
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
};

RangeSpec parse_range(const std::string& text, const char* flag) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument(std::string(flag) + ": expected MIN:MAX:STEPS, got \"" + text +
                                    "\"");
    const auto number = [&](const std::string& part, bool integer) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (part.empty() || used != part.size() || !std::isfinite(v) ||
            (integer && v != std::floor(v)))
            throw std::invalid_argument(std::string(flag) + ": malformed " +
                                        (integer ? "step count" : "bound") + " \"" + part + "\"");
        return v;
    };
    RangeSpec r;
    r.min = number(text.substr(0, first), false);
    r.max = number(text.substr(first + 1, second - first - 1), false);
    r.steps = static_cast<int>(number(text.substr(second + 1), true));
    return r;
}

void require_epsilon(double epsilon_tail) {
    if (!std::isfinite(epsilon_tail) || epsilon_tail <= 0.0 || epsilon_tail >= 1.0)
        throw std::invalid_argument("--epsilon-tail must lie in (0, 1)");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::ios_base::failure("cannot open output file \"" + out_path + "\"");
    f << text;
    f.flush();
    if (!f)
        throw std::ios_base::failure("error while writing \"" + out_path + "\"");
}

// JSON rejects non-finite numbers; stringify them instead of emitting null.
json json_number(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

void insert_report(json& j, const sqt::EntanglementReport& rep) {
    j["e_npt"] = rep.e_npt;
    j["lambda_min"] = rep.lambda_min;
    j["concurrence"] = rep.concurrence;
    j["eof"] = rep.eof;
    j["s_linear"] = rep.s_linear;
    j["purity"] = rep.purity;
    j["teleport_useful"] = rep.teleport_useful;
}

int cmd_point(double r, double tau, double alpha, double beta, double epsilon_tail,
              const std::string& out_path) {
    require_epsilon(epsilon_tail);
    const sqt::SqueezedSpectrum spectrum = sqt::build_spectrum(r, epsilon_tail);
    sqt::ProductPreparation prep;
    prep.alpha = alpha;
    prep.beta = beta;

    json j;
    j["r"] = r;
    j["tau"] = tau;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["epsilon_tail"] = epsilon_tail;
    j["n_max"] = spectrum.n_max;
    j["code_version"] = sqt::kVersion;

    if (prep.is_ground()) {
        const sqt::AbcdCoefficients co = sqt::coefficients(spectrum, tau);
        insert_report(j, sqt::make_report(sqt::assemble_density(co)));
        j["path"] = "closed-form";
        j["coeff_a"] = co.a;
        j["coeff_b"] = co.b;
        j["coeff_c"] = co.c;
        j["coeff_d"] = co.d;
        j["s_linear_purified"] = sqt::linearized_entropy(sqt::purified_density(co));
    } else {
        const sqt::QubitPairDensity rho = sqt::oracle_evolve(spectrum, prep, tau);
        insert_report(j, sqt::make_report(rho));
        j["path"] = "oracle";
        // Coefficients read off the evolved matrix (X-form fields only).
        j["coeff_a"] = rho.m(0, 0).real();
        j["coeff_b"] = 0.5 * (rho.m(1, 1).real() + rho.m(2, 2).real());
        j["coeff_c"] = rho.m(3, 3).real();
        j["coeff_d"] = -rho.m(0, 3).real();
    }
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_sweep(const RangeSpec& r_range, const RangeSpec& tau_range, double alpha, double beta,
              double epsilon_tail, const std::string& format, const std::string& out_path) {
    require_epsilon(epsilon_tail);
    sqt::SweepSpec spec;
    spec.r_min = r_range.min;
    spec.r_max = r_range.max;
    spec.r_steps = r_range.steps;
    spec.tau_min = tau_range.min;
    spec.tau_max = tau_range.max;
    spec.tau_steps = tau_range.steps;
    spec.preparation.alpha = alpha;
    spec.preparation.beta = beta;
    spec.epsilon_tail = epsilon_tail;

    const sqt::SweepResult result =
        spec.preparation.is_ground() ? sqt::sweep_ground(spec) : sqt::sweep_prepared(spec);

    if (format == "csv") {
        write_output(sqt::sweep_csv(result), out_path);
    } else {
        json j;
        j["code_version"] = result.code_version;
        j["config_hash"] = result.config_hash;
        j["epsilon_tail"] = result.epsilon_tail;
        j["max_n_max"] = result.max_n_max;
        json rows = json::array();
        for (std::size_t i = 0; i < result.r_values.size(); ++i)
            for (std::size_t k = 0; k < result.tau_values.size(); ++k) {
                json row;
                row["r"] = result.r_values[i];
                row["tau"] = result.tau_values[k];
                insert_report(row, result.at(i, k));
                rows.push_back(std::move(row));
            }
        j["rows"] = std::move(rows);
        write_output(j.dump(2) + "\n", out_path);
    }
    return 0;
}

int cmd_average(double r, double tau, int grid_n, double epsilon_tail,
                const std::string& out_path) {
    require_epsilon(epsilon_tail);
    if (grid_n < 16)
        throw std::invalid_argument("--grid-n must be >= 16 for average, got " +
                                    std::to_string(grid_n));
    const sqt::QubitPairDensity rho = sqt::averaged_density(r, tau, grid_n, epsilon_tail);
    const sqt::NptResult npt = sqt::npt_negativity(rho);

    // Self-convergence against the nearest companion grid that still
    // satisfies the grid_n >= 16 precondition.
    const int companion = grid_n >= 32 ? grid_n / 2 : grid_n * 2;
    const double companion_e =
        sqt::npt_negativity(sqt::averaged_density(r, tau, companion, epsilon_tail)).e_npt;

    double off_pattern = 0.0;  // largest entry outside the X sparsity pattern
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (i != k && i + k != 3) off_pattern = std::max(off_pattern, std::abs(rho.m(i, k)));

    json j;
    j["r"] = r;
    j["tau"] = tau;
    j["grid_n"] = grid_n;
    j["epsilon_tail"] = epsilon_tail;
    j["code_version"] = sqt::kVersion;
    j["e_npt"] = npt.e_npt;
    j["lambda_min"] = npt.lambda_min;
    j["convergence_grid_n"] = companion;
    j["convergence_delta"] = std::abs(npt.e_npt - companion_e);
    j["rho_00"] = rho.m(0, 0).real();
    j["rho_11"] = rho.m(1, 1).real();
    j["rho_22"] = rho.m(2, 2).real();
    j["rho_33"] = rho.m(3, 3).real();
    j["rho_03_re"] = rho.m(0, 3).real();
    j["rho_03_im"] = rho.m(0, 3).imag();
    j["rho_12_re"] = rho.m(1, 2).real();
    j["rho_12_im"] = rho.m(1, 2).imag();
    j["off_pattern_max"] = off_pattern;
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_prep_scan(double r, double tau, int grid_n, double epsilon_tail, const std::string& format,
                  const std::string& out_path) {
    require_epsilon(epsilon_tail);
    if (grid_n < 2)
        throw std::invalid_argument("--grid-n must be >= 2 for prep-scan, got " +
                                    std::to_string(grid_n));
    const sqt::PrepScanResult scan = sqt::preparation_scan(r, tau, grid_n, grid_n, epsilon_tail);
    if (format == "csv") {
        write_output(sqt::prep_scan_csv(scan), out_path);
        return 0;
    }
    json j;
    j["r"] = r;
    j["tau"] = tau;
    j["grid_n"] = grid_n;
    j["epsilon_tail"] = epsilon_tail;
    j["code_version"] = sqt::kVersion;
    json rows = json::array();
    for (std::size_t i = 0; i < scan.alphas.size(); ++i)
        for (std::size_t k = 0; k < scan.betas.size(); ++k) {
            json row;
            row["alpha"] = scan.alphas[i];
            row["beta"] = scan.betas[k];
            row["e_npt"] = scan.at(i, k);
            rows.push_back(std::move(row));
        }
    j["rows"] = std::move(rows);
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_circuit(const std::string& circuit_file, const std::string& out_path) {
    const sqt::CircuitParams p = sqt::load_circuit_file(circuit_file);
    const sqt::DerivedParams d = sqt::derive(p);
    const auto checks = sqt::regime_check(d, sqt::kDefaultTemperature);

    json j;
    j["file"] = circuit_file;
    j["code_version"] = sqt::kVersion;
    j["c_j0"] = p.c_j0;
    j["c_g"] = p.c_g;
    j["c_c"] = p.c_c;
    j["c_0"] = p.c_0;
    j["l_o"] = p.l_o;
    j["e_j0"] = p.e_j0;
    j["phi_ext"] = p.phi_ext;
    j["v_g"] = p.v_g;
    j["det_d"] = d.det_d;
    j["cap_c"] = d.cap_c;
    j["cap_c1"] = d.cap_c1;
    j["cap_c2"] = d.cap_c2;
    j["omega"] = d.omega;
    j["rabi_omega"] = d.rabi_omega;
    j["e_j"] = d.e_j;
    j["charging_energy"] = d.charging_energy;
    j["t_per_tau"] = d.t_per_tau;
    j["gate_offset"] = d.gate_offset;
    j["temperature"] = sqt::kDefaultTemperature;
    j["t_3pi_half_s"] = sqt::tau_to_seconds(1.5 * std::numbers::pi, d);
    for (const sqt::RegimeCheck& c : checks) {
        j["check_" + c.name + "_passed"] = c.passed;
        j["check_" + c.name + "_value"] = json_number(c.value);
        j["check_" + c.name + "_threshold"] = c.threshold;
    }
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int cmd_verify(double epsilon_tail, const std::string& circuit_file) {
    require_epsilon(epsilon_tail);
    sqt::VerifyOptions opt;
    opt.epsilon_tail = epsilon_tail;
    opt.circuit_file = circuit_file;

    const auto results = sqt::run_acceptance(opt);
    int failed = 0;
    for (const sqt::CheckResult& c : results) {
        const std::string label =
            c.criterion > 0 ? "criterion " + std::to_string(c.criterion) : "note";
        std::printf("%s %-12s %s: %s\n", c.passed ? "PASS" : "FAIL", label.c_str(), c.name.c_str(),
                      c.detail.c_str());
        if (!c.passed) ++failed;
    }
    std::printf("%zu/%zu checks passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement transfer from a two-mode squeezed microwave field "
                 "to two resonantly coupled charge qubits"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sqt::kVersion);

    double r = 0.0, tau = 0.0, alpha = 0.0, beta = 0.0;
    double epsilon_tail = sqt::kDefaultEpsilonTail;
    int grid_n = 64;
    char three_pi[32];
    std::snprintf(three_pi, sizeof three_pi, "%.17g", kThreePi);
    std::string r_range = "0:2:200";
    std::string tau_range = std::string("0:") + three_pi + ":200";
    std::string format = "csv";
    std::string out_path;
    std::string circuit_file;

    const auto add_epsilon = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon-tail", epsilon_tail,
                        "Spectrum truncation threshold in (0, 1)")
            ->capture_default_str();
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Output file (default: stdout)");
    };

    CLI::App* point = app.add_subcommand("point", "One (r, tau) point as a JSON report");
    point->add_option("--r", r, "Squeezing parameter")->required()->check(CLI::NonNegativeNumber);
    point->add_option("--tau", tau, "Interaction phase Omega t")
        ->required()
        ->check(CLI::NonNegativeNumber);
    point->add_option("--alpha", alpha, "Qubit 1 preparation angle")->capture_default_str();
    point->add_option("--beta", beta, "Qubit 2 preparation angle")->capture_default_str();
    add_epsilon(point);
    add_out(point);

    CLI::App* sweep = app.add_subcommand("sweep", "Grid sweep as CSV or JSON");
    sweep->add_option("--r-range", r_range, "MIN:MAX:STEPS")->capture_default_str();
    sweep->add_option("--tau-range", tau_range, "MIN:MAX:STEPS")->capture_default_str();
    sweep->add_option("--alpha", alpha, "Qubit 1 preparation angle")->capture_default_str();
    sweep->add_option("--beta", beta, "Qubit 2 preparation angle")->capture_default_str();
    add_epsilon(sweep);
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_out(sweep);

    CLI::App* average = app.add_subcommand("average", "Preparation-averaged state at one point");
    average->add_option("--r", r, "Squeezing parameter")->required()->check(CLI::NonNegativeNumber);
    average->add_option("--tau", tau, "Interaction phase Omega t")
        ->required()
        ->check(CLI::NonNegativeNumber);
    average->add_option("--grid-n", grid_n, "Midpoint nodes per angle (>= 16)")
        ->capture_default_str();
    add_epsilon(average);
    add_out(average);

    CLI::App* prep_scan =
        app.add_subcommand("prep-scan", "E_NPT over preparation angles at one point");
    prep_scan->add_option("--r", r, "Squeezing parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    prep_scan->add_option("--tau", tau, "Interaction phase Omega t")
        ->required()
        ->check(CLI::NonNegativeNumber);
    prep_scan->add_option("--grid-n", grid_n, "Inclusive nodes per angle (>= 2)")
        ->capture_default_str();
    add_epsilon(prep_scan);
    prep_scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_out(prep_scan);

    CLI::App* circuit = app.add_subcommand("circuit", "Derived model parameters from a file");
    circuit->add_option("--circuit", circuit_file, "key = value parameter file")->required();
    add_out(circuit);

    CLI::App* verify = app.add_subcommand("verify", "Run the acceptance checks");
    add_epsilon(verify);
    verify->add_option("--circuit", circuit_file,
                       "Optional parameter file; adds a derived-omega line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, help/version exit 0
    }

    try {
        if (point->parsed())
            return cmd_point(r, tau, alpha, beta, epsilon_tail, out_path);
        if (sweep->parsed())
            return cmd_sweep(parse_range(r_range, "--r-range"), parse_range(tau_range, "--tau-range"),
                             alpha, beta, epsilon_tail, format, out_path);
        if (average->parsed())
            return cmd_average(r, tau, grid_n, epsilon_tail, out_path);
        if (prep_scan->parsed())
            return cmd_prep_scan(r, tau, grid_n, epsilon_tail, format, out_path);
        if (circuit->parsed())
            return cmd_circuit(circuit_file, out_path);
        if (verify->parsed())
            return cmd_verify(epsilon_tail, circuit_file);
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 3;
    } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range, ...
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;  // no subcommand matched; require_subcommand should prevent this
}
