#pragma once

#include <string>
#include <vector>

namespace sqt {

// CODATA 2018 values, fixed so regression outputs are bit-stable.
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kBoltzmann = 1.380649e-23;            // J / K

// Temperature assumed by the CLI when running regime checks.
inline constexpr double kDefaultTemperature = 0.03;  // K

// Raw circuit element values, SI units.
struct CircuitParams {
    double c_j0 = 0.0;     // junction capacitance (F)
    double c_g = 0.0;      // gate capacitance (F)
    double c_c = 0.0;      // qubit-resonator coupling capacitance (F)
    double c_0 = 0.0;      // resonator capacitance (F)
    double l_o = 0.0;      // resonator inductance (H)
    double e_j0 = 0.0;     // single-junction Josephson energy (J)
    double phi_ext = 0.0;  // external flux (Wb)
    double v_g = 0.0;      // gate voltage (V); 0 means degeneracy point assumed

    // Throws std::domain_error unless capacitances, inductance, and e_j0
    // are strictly positive and finite (phi_ext, v_g any finite value).
    void validate() const;
};

// Effective model parameters computed from the raw elements.
struct DerivedParams {
    double det_d = 0.0;            // capacitance determinant (F^2)
    double cap_c = 0.0;            // island charging capacitance (F)
    double cap_c1 = 0.0;           // coupling-normalization capacitance (F)
    double cap_c2 = 0.0;           // loaded resonator capacitance (F)
    double omega = 0.0;            // resonator frequency (rad/s)
    double rabi_omega = 0.0;       // vacuum coupling rate (rad/s)
    double e_j = 0.0;              // flux-tuned Josephson energy (J)
    double charging_energy = 0.0;  // e^2 / 2C (J)
    double t_per_tau = 0.0;        // lab seconds per unit tau
    double gate_offset = 0.0;      // |C_g V_g / e - 1|; 0 at the degeneracy point
};

double resonator_omega(double l_o, double cap_c2);
double rabi_frequency(double omega, double cap_c1, double cap_c2);
double josephson_energy(double e_j0, double phi_ext);
double charging_energy(double cap_c);

DerivedParams derive(const CircuitParams& p);

// t = tau / Omega.
double tau_to_seconds(double tau, const DerivedParams& d);

// Dimensionless validity thresholds; the model only claims "much less/
// greater than", these are the shipped defaults.
struct RegimeThresholds {
    double rwa_ratio = 0.05;        // Omega / omega
    double charge_factor = 5.0;     // charging / E_J
    double thermal_ratio = 0.1;     // k_B T / charging
    double resonance_ratio = 0.05;  // |E_J / hbar - omega| / omega
};

struct RegimeCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;  // measured ratio
    double threshold = 0.0;
};

// Reports, never throws: RWA, charge regime, thermal occupation, resonance.
std::vector<RegimeCheck> regime_check(const DerivedParams& d, double temperature,
                                      const RegimeThresholds& thresholds = {});

// "key = value" per line, SI units, '#' comments. Required keys c_j0, c_g,
// c_c, c_0, l_o, e_j0; optional phi_ext, v_g (default 0). Unknown or
// repeated keys and malformed numbers throw std::invalid_argument; an
// unreadable file throws std::ios_base::failure.
CircuitParams load_circuit_file(const std::string& path);

}  // namespace sqt
