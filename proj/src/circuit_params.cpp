#include "sqt/circuit_params.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sqt {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error(std::string(name) + " must be finite and > 0, got " +
                                std::to_string(v));
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

void CircuitParams::validate() const {
    require_positive(c_j0, "c_j0");
    require_positive(c_g, "c_g");
    require_positive(c_c, "c_c");
    require_positive(c_0, "c_0");
    require_positive(l_o, "l_o");
    require_positive(e_j0, "e_j0");
    if (!std::isfinite(phi_ext) || !std::isfinite(v_g))
        throw std::domain_error("phi_ext and v_g must be finite");
}

double resonator_omega(double l_o, double cap_c2) {
    require_positive(l_o, "l_o");
    require_positive(cap_c2, "cap_c2");
    return 1.0 / std::sqrt(l_o * cap_c2);
}

double rabi_frequency(double omega, double cap_c1, double cap_c2) {
    require_positive(omega, "omega");
    require_positive(cap_c1, "cap_c1");
    require_positive(cap_c2, "cap_c2");
    return kElementaryCharge * std::sqrt(2.0 * omega * cap_c2 / (kHbar * cap_c1 * cap_c1));
}

double josephson_energy(double e_j0, double phi_ext) {
    return 2.0 * e_j0 * std::cos(2.0 * kElementaryCharge * phi_ext / kHbar);
}

double charging_energy(double cap_c) {
    require_positive(cap_c, "cap_c");
    return kElementaryCharge * kElementaryCharge / (2.0 * cap_c);
}

DerivedParams derive(const CircuitParams& p) {
    p.validate();
    DerivedParams d;
    d.det_d = (p.c_0 + p.c_c) * (p.c_g + 2.0 * p.c_j0) + p.c_c * p.c_0;
    d.cap_c = d.det_d / (p.c_0 + p.c_c);
    d.cap_c1 = d.det_d / (p.c_g + 2.0 * p.c_j0 + p.c_c);
    d.cap_c2 = d.det_d / p.c_c;
    d.omega = resonator_omega(p.l_o, d.cap_c2);
    d.rabi_omega = rabi_frequency(d.omega, d.cap_c1, d.cap_c2);
    d.e_j = josephson_energy(p.e_j0, p.phi_ext);
    d.charging_energy = charging_energy(d.cap_c);
    d.t_per_tau = 1.0 / d.rabi_omega;
    d.gate_offset = p.v_g == 0.0 ? 0.0 : std::abs(p.c_g * p.v_g / kElementaryCharge - 1.0);
    return d;
}

double tau_to_seconds(double tau, const DerivedParams& d) {
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::domain_error("tau_to_seconds: tau must be finite and >= 0");
    require_positive(d.rabi_omega, "rabi_omega");
    return tau / d.rabi_omega;
}

std::vector<RegimeCheck> regime_check(const DerivedParams& d, double temperature,
                                      const RegimeThresholds& th) {
    std::vector<RegimeCheck> checks;

    const double rwa = d.rabi_omega / d.omega;
    checks.push_back({"rwa", rwa < th.rwa_ratio, rwa, th.rwa_ratio});

    // E_J can be flux-tuned to zero or negative; the charge regime then
    // holds trivially and the ratio saturates.
    const double charge = d.e_j > 0.0 ? d.charging_energy / d.e_j
                                      : std::numeric_limits<double>::infinity();
    checks.push_back({"charge_regime", d.charging_energy > th.charge_factor * d.e_j, charge,
                      th.charge_factor});

    const double thermal = kBoltzmann * temperature / d.charging_energy;
    checks.push_back({"thermal", thermal < th.thermal_ratio, thermal, th.thermal_ratio});

    const double resonance = std::abs(d.e_j / kHbar - d.omega) / d.omega;
    checks.push_back({"resonance", resonance < th.resonance_ratio, resonance, th.resonance_ratio});

    return checks;
}

CircuitParams load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open circuit file \"" + path + "\"");

    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected \"key = value\"");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        static const std::set<std::string> known = {"c_j0", "c_g", "c_c", "c_0",
                                                    "l_o", "e_j0", "phi_ext", "v_g"};
        if (!known.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": unknown key \"" + key + "\"");
        if (values.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": repeated key \"" + key + "\"");
        std::size_t used = 0;
        double parsed = 0.0;
        try {
            parsed = std::stod(value, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != value.size() || value.empty())
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": malformed number \"" + value + "\" for " + key);
        values[key] = parsed;
    }

    CircuitParams p;
    const auto take = [&](const char* key, double* dst, bool required) {
        const auto it = values.find(key);
        if (it == values.end()) {
            if (required)
                throw std::invalid_argument(path + ": missing required key \"" +
                                            std::string(key) + "\"");
            return;
        }
        *dst = it->second;
    };
    take("c_j0", &p.c_j0, true);
    take("c_g", &p.c_g, true);
    take("c_c", &p.c_c, true);
    take("c_0", &p.c_0, true);
    take("l_o", &p.l_o, true);
    take("e_j0", &p.e_j0, true);
    take("phi_ext", &p.phi_ext, false);
    take("v_g", &p.v_g, false);
    p.validate();
    return p;
}

}  // namespace sqt
