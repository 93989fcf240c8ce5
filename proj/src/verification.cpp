#include "sqt/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "sqt/circuit_params.hpp"
#include "sqt/entanglement_measures.hpp"
#include "sqt/experiments.hpp"
#include "sqt/hilbert_oracle.hpp"
#include "sqt/reporting.hpp"
#include "sqt/transfer_dynamics.hpp"

namespace sqt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPeakR = 0.86;
constexpr double kPeakTau = 1.5 * kPi;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

SweepSpec reproduction_grid(double epsilon_tail) {
    SweepSpec spec;  // 200x200 over r in [0, 2], tau in [0, 3pi]
    spec.epsilon_tail = epsilon_tail;
    return spec;
}

CheckResult peak_entanglement(const VerifyOptions& opt) {
    const SweepResult res = sweep_ground(reproduction_grid(opt.epsilon_tail));
    const GridPeak p = find_peak(res, "e_npt");
    const bool value_ok = std::abs(p.value - 0.87) <= 0.02;
    const bool r_ok = std::abs(p.r - kPeakR) <= 0.05;
    const bool tau_ok = std::abs(p.tau - kPeakTau) <= 0.05;
    CheckResult c{1, "peak-entanglement", value_ok && r_ok && tau_ok, ""};
    c.detail = fmt("grid peak value %.6f at (r, tau) = (%.6f, %.6f); targets 0.87+-0.02 [%s], "
                   "r 0.86+-0.05 [%s], tau 4.712389+-0.05 [%s]",
                   p.value, p.r, p.tau, value_ok ? "ok" : "MISS", r_ok ? "ok" : "MISS",
                   tau_ok ? "ok" : "MISS");
    return c;
}

CheckResult oracle_equivalence(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> rs = grid_axis(0.0, 2.0, 20);
    const std::vector<double> taus = grid_axis(0.0, 3.0 * kPi, 20);
    double worst = 0.0;
    for (double r : rs) {
        const SqueezedSpectrum s = build_spectrum(r, opt.epsilon_tail);
        const HilbertOracle oracle(s);
        for (double tau : taus) {
            const QubitPairDensity closed = assemble_density(coefficients(s, tau));
            const QubitPairDensity full = oracle.evolve(ProductPreparation::ground(), tau);
            worst = std::max(worst, max_abs_diff(closed, full));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool diff_ok = worst <= 1e-8;
    const bool time_ok = seconds < 60.0;
    CheckResult c{2, "oracle-equivalence", diff_ok && time_ok, ""};
    c.detail = fmt("max |closed - oracle| = %.3e over 20x20 grid (target <= 1e-8 [%s]) in %.1f s "
                   "(target < 60 [%s])",
                   worst, diff_ok ? "ok" : "MISS", seconds, time_ok ? "ok" : "MISS");
    return c;
}

CheckResult state_validity(const VerifyOptions& opt) {
    // Every make_density call validates hermiticity/trace/positivity and
    // throws on violation, so completing these paths is the check itself.
    std::size_t states = 0;
    const SweepResult closed = sweep_ground(reproduction_grid(opt.epsilon_tail));
    states += closed.reports.size();

    SweepSpec oracle_spec = reproduction_grid(opt.epsilon_tail);
    oracle_spec.r_steps = 20;
    oracle_spec.tau_steps = 20;
    oracle_spec.preparation.alpha = 0.3;  // off-axis preparation exercises complex entries
    oracle_spec.preparation.beta = 1.1;
    oracle_spec.preparation.phi = 0.7;
    oracle_spec.preparation.psi = 0.2;
    states += sweep_prepared(oracle_spec).reports.size();

    averaged_density(kPeakR, kPeakTau, 16, opt.epsilon_tail);
    ++states;
    purified_density(coefficients(build_spectrum(kPeakR, opt.epsilon_tail), kPeakTau));
    ++states;

    CheckResult c{3, "state-validity", true, ""};
    c.detail = fmt("%zu density matrices validated (hermiticity <= 1e-12, |trace - 1| <= 1e-12, "
                   "min eigenvalue >= -1e-10)",
                   states);
    return c;
}

CheckResult structural_identity(const VerifyOptions& opt) {
    const SweepResult res = sweep_ground(reproduction_grid(opt.epsilon_tail));
    double worst = 0.0;
    for (const EntanglementReport& rep : res.reports)
        worst = std::max(worst, std::abs(rep.concurrence - std::max(0.0, rep.e_npt)));
    const bool ok = worst <= 1e-10;
    CheckResult c{4, "structural-identity", ok, ""};
    c.detail = fmt("max |concurrence - max(0, e_npt)| = %.3e over 200x200 grid "
                   "(both from full eigensolves; target <= 1e-10 [%s])",
                   worst, ok ? "ok" : "MISS");
    return c;
}

CheckResult peak_purity(const VerifyOptions& opt) {
    const AbcdCoefficients co = coefficients(build_spectrum(kPeakR, opt.epsilon_tail), kPeakTau);
    const double sl_purified = linearized_entropy(purified_density(co));
    const double sl_full = linearized_entropy(assemble_density(co));
    const bool sl_ok = sl_purified <= 0.02;
    const bool tp_ok = teleport_useful(sl_purified);
    CheckResult c{5, "peak-purity", sl_ok && tp_ok, ""};
    c.detail = fmt("B-dropped renormalized state at (0.86, 3pi/2): s_linear = %.6f "
                   "(target <= 0.02 [%s]), teleport_useful = %s (threshold 2/3 [%s]); "
                   "full-state s_linear = %.6f (reported, no target)",
                   sl_purified, sl_ok ? "ok" : "MISS", tp_ok ? "true" : "false",
                   tp_ok ? "ok" : "MISS", sl_full);
    return c;
}

CheckResult averaged_peak(const VerifyOptions& opt) {
    const double e64 = npt_negativity(averaged_density(kPeakR, kPeakTau, 64, opt.epsilon_tail)).e_npt;
    const double e128 = npt_negativity(averaged_density(kPeakR, kPeakTau, 128, opt.epsilon_tail)).e_npt;
    const bool value_ok = std::abs(e64 - 0.4) <= 0.05;
    const bool conv_ok = std::abs(e128 - e64) < 1e-3;
    CheckResult c{6, "averaged-preparation-peak", value_ok && conv_ok, ""};
    c.detail = fmt("averaged-state E_NPT = %.6f at grid_n = 64 (target 0.4+-0.05 [%s]); "
                   "|grid_n 128 - 64| = %.2e (target < 1e-3 [%s])",
                   e64, value_ok ? "ok" : "MISS", std::abs(e128 - e64), conv_ok ? "ok" : "MISS");
    return c;
}

CheckResult preparation_scan_check(const VerifyOptions& opt) {
    const PrepScanResult scan = preparation_scan(kPeakR, kPeakTau, 25, 25, opt.epsilon_tail);
    double vmax = scan.e_npt[0];
    for (double v : scan.e_npt) vmax = std::max(vmax, v);
    const double origin = scan.at(0, 0);
    // alpha or beta = 2pi are global-phase copies of the origin state, so
    // "maximum occurs at the origin" means equality up to rounding.
    const bool origin_ok = origin >= vmax - 1e-12;
    const bool value_ok = std::abs(origin - 0.87) <= 0.02;

    ProductPreparation flipped;
    flipped.alpha = kPi / 2.0;
    flipped.beta = kPi / 2.0;
    const double bump =
        npt_negativity(oracle_evolve(build_spectrum(0.6, opt.epsilon_tail), flipped, 1.7)).e_npt;
    const bool bump_ok = bump > 0.0;

    SweepSpec region = reproduction_grid(opt.epsilon_tail);
    region.r_steps = 20;
    region.tau_steps = 20;
    region.preparation = flipped;
    const SweepResult swept = sweep_prepared(region);
    std::size_t nonpositive = 0;
    for (const EntanglementReport& rep : swept.reports)
        if (rep.e_npt <= 0.0) ++nonpositive;
    const double fraction = static_cast<double>(nonpositive) / swept.reports.size();
    const bool majority_ok = fraction > 0.5;

    CheckResult c{7, "preparation-scan", origin_ok && value_ok && bump_ok && majority_ok, ""};
    c.detail = fmt("scan max at origin [%s], origin value %.6f (target 0.87+-0.02 [%s]); "
                   "|+,+> bump at (0.6, 1.7) = %.6f (target > 0 [%s]); "
                   "|+,+> nonpositive fraction %.3f over 20x20 region (target > 0.5 [%s])",
                   origin_ok ? "ok" : "MISS", origin, value_ok ? "ok" : "MISS", bump,
                   bump_ok ? "ok" : "MISS", fraction, majority_ok ? "ok" : "MISS");
    return c;
}

CheckResult early_time_and_revivals(const VerifyOptions& opt) {
    const SqueezedSpectrum s = build_spectrum(kPeakR, opt.epsilon_tail);
    const double e005 = npt_negativity(assemble_density(coefficients(s, 0.05))).e_npt;
    const double e010 = npt_negativity(assemble_density(coefficients(s, 0.1))).e_npt;

    SweepSpec slice = reproduction_grid(opt.epsilon_tail);
    slice.r_min = kPeakR;
    slice.r_max = kPeakR;
    slice.r_steps = 1;
    const SweepResult res = sweep_ground(slice);
    bool early_ok = e005 <= 0.0 && e010 <= 0.0;
    for (std::size_t j = 0; j < res.tau_values.size(); ++j)
        if (res.tau_values[j] > 0.0 && res.tau_values[j] <= 0.1 && res.at(0, j).e_npt > 0.0)
            early_ok = false;

    std::vector<std::size_t> maxima, minima;
    for (std::size_t j = 1; j + 1 < res.tau_values.size(); ++j) {
        const double prev = res.at(0, j - 1).e_npt;
        const double here = res.at(0, j).e_npt;
        const double next = res.at(0, j + 1).e_npt;
        if (here > prev && here > next) maxima.push_back(j);
        if (here < prev && here < next) minima.push_back(j);
    }
    bool revival_ok = false;
    if (maxima.size() >= 2)
        for (std::size_t m : minima)
            if (m > maxima[0] && m < maxima[1]) revival_ok = true;

    CheckResult c{8, "early-time-and-revivals", early_ok && revival_ok, ""};
    c.detail = fmt("E_NPT(0.86, 0.05) = %.2e, E_NPT(0.86, 0.1) = %.2e (target <= 0 for tau <= 0.1 "
                   "[%s]); %zu local maxima / %zu local minima on the tau slice "
                   "(target >= 2 maxima separated by a minimum [%s])",
                   e005, e010, early_ok ? "ok" : "MISS", maxima.size(), minima.size(),
                   revival_ok ? "ok" : "MISS");
    return c;
}

CheckResult circuit_mapping(const VerifyOptions&) {
    const double omega = resonator_omega(1e-8, 1e-12);
    const bool omega_ok = std::abs(omega / 1e10 - 1.0) <= 1e-12;

    const double rabi = rabi_frequency(1e10, 1e-11, 1e-12);
    const bool rabi_ok = rabi >= 1e8 && rabi <= 3e8;

    DerivedParams nominal;
    nominal.rabi_omega = rabi;
    const double t = tau_to_seconds(kPeakTau, nominal);
    const bool t_ok = t >= 15e-9 && t <= 50e-9;

    // t is monotone in Omega, so the band maps inside [15, 50] ns iff both
    // edges do.
    DerivedParams slow, fast;
    slow.rabi_omega = 1e8;
    fast.rabi_omega = 3e8;
    const double t_slow = tau_to_seconds(kPeakTau, slow);
    const double t_fast = tau_to_seconds(kPeakTau, fast);
    const bool band_ok = t_slow <= 50e-9 && t_fast >= 15e-9;

    CheckResult c{9, "circuit-mapping", omega_ok && rabi_ok && t_ok && band_ok, ""};
    c.detail = fmt("omega(C2 = 1 pF, L_o = 10 nH) = %.6e rad/s (target 1e10 exactly [%s]); "
                   "Omega(1e10, 1e-11, 1e-12) = %.6e rad/s (target [1e8, 3e8] [%s]); "
                   "t(3pi/2) = %.2f ns [%s]; band edges %.2f / %.2f ns inside [15, 50] [%s]",
                   omega, omega_ok ? "ok" : "MISS", rabi, rabi_ok ? "ok" : "MISS", t * 1e9,
                   t_ok ? "ok" : "MISS", t_slow * 1e9, t_fast * 1e9, band_ok ? "ok" : "MISS");
    return c;
}

CheckResult determinism(const VerifyOptions& opt) {
    SweepSpec spec = reproduction_grid(opt.epsilon_tail);
    spec.r_steps = 40;
    spec.tau_steps = 40;
    const std::string csv_a = sweep_csv(sweep_ground(spec));
    const std::string csv_b = sweep_csv(sweep_ground(spec));

    const std::string scan_a = prep_scan_csv(preparation_scan(kPeakR, kPeakTau, 8, 8, opt.epsilon_tail));
    const std::string scan_b = prep_scan_csv(preparation_scan(kPeakR, kPeakTau, 8, 8, opt.epsilon_tail));

    const bool ok = csv_a == csv_b && scan_a == scan_b;
    CheckResult c{10, "determinism", ok, ""};
    c.detail = fmt("repeated sweep (%zu bytes) and prep-scan (%zu bytes) artifacts byte-identical: %s",
                   csv_a.size(), scan_a.size(), ok ? "yes" : "NO");
    return c;
}

CheckResult eof_note(const VerifyOptions& opt) {
    const SweepResult res = sweep_ground(reproduction_grid(opt.epsilon_tail));
    const GridPeak p = find_peak(res, "e_npt");
    const double value = res.at(p.i, p.j).eof;
    const bool ok = std::abs(value - 0.82) <= 0.02;
    CheckResult c{0, "note-eof-at-peak", ok, ""};
    c.detail = fmt("EoF at the sweep peak = %.6f ebits (regression target 0.82+-0.02 [%s])", value,
                   ok ? "ok" : "MISS");
    return c;
}

CheckResult circuit_note(const VerifyOptions& opt) {
    const DerivedParams d = derive(load_circuit_file(opt.circuit_file));
    const bool ok = std::isfinite(d.omega) && d.omega > 0.0;
    CheckResult c{0, "note-circuit-omega", ok, ""};
    c.detail = fmt("derived omega = %.6e rad/s, Omega = %.6e rad/s from %s", d.omega, d.rabi_omega,
                   opt.circuit_file.c_str());
    return c;
}

CheckResult guarded(CheckResult (*check)(const VerifyOptions&), int k, const char* name,
                    const VerifyOptions& opt) {
    try {
        return check(opt);
    } catch (const std::exception& e) {
        return {k, name, false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

CheckResult run_criterion(int k, const VerifyOptions& opt) {
    switch (k) {
        case 1: return guarded(peak_entanglement, 1, "peak-entanglement", opt);
        case 2: return guarded(oracle_equivalence, 2, "oracle-equivalence", opt);
        case 3: return guarded(state_validity, 3, "state-validity", opt);
        case 4: return guarded(structural_identity, 4, "structural-identity", opt);
        case 5: return guarded(peak_purity, 5, "peak-purity", opt);
        case 6: return guarded(averaged_peak, 6, "averaged-preparation-peak", opt);
        case 7: return guarded(preparation_scan_check, 7, "preparation-scan", opt);
        case 8: return guarded(early_time_and_revivals, 8, "early-time-and-revivals", opt);
        case 9: return guarded(circuit_mapping, 9, "circuit-mapping", opt);
        case 10: return guarded(determinism, 10, "determinism", opt);
        default:
            throw std::invalid_argument("criterion index must lie in 1.." +
                                        std::to_string(kCriterionCount) + ", got " +
                                        std::to_string(k));
    }
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    results.reserve(kCriterionCount + 2);
    for (int k = 1; k <= kCriterionCount; ++k)
        results.push_back(run_criterion(k, opt));
    results.push_back(guarded(eof_note, 0, "note-eof-at-peak", opt));
    if (!opt.circuit_file.empty())
        results.push_back(guarded(circuit_note, 0, "note-circuit-omega", opt));
    return results;
}

}  // namespace sqt
