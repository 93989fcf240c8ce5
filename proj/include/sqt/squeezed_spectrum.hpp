#pragma once

#include <vector>

namespace sqt {

inline constexpr double kDefaultEpsilonTail = 1e-12;
inline constexpr int kSpectrumCap = 4096;

// Photon-number amplitudes of a two-mode squeezed vacuum in the correlated
// basis |n,n>: eta_n = tanh(r)^n / cosh(r), truncated once the residual
// weight tanh(r)^(2(n_max+1)) drops below epsilon_tail.
struct SqueezedSpectrum {
    double r = 0.0;
    double epsilon_tail = kDefaultEpsilonTail;
    int n_max = 0;
    std::vector<double> eta;  // amplitudes eta[0..n_max], not probabilities

    // Amplitude with the hard truncation convention: 0 beyond n_max.
    double eta_at(int n) const;
};

// Smallest n_max with tanh(r)^(2(n_max+1)) < epsilon_tail.
// Throws std::domain_error for invalid r or epsilon_tail and
// std::length_error if the required n_max would exceed kSpectrumCap.
SqueezedSpectrum build_spectrum(double r, double epsilon_tail = kDefaultEpsilonTail);

// chi_{nm} = eta_n * eta_m, the weight of |n,n><m,m| in the field state.
double chi(const SqueezedSpectrum& s, int n, int m);

// Exact weight of the discarded tail: tanh(r)^(2(n_max+1)).
double truncation_weight(const SqueezedSpectrum& s);

}  // namespace sqt
