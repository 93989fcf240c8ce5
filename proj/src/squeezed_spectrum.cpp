#include "sqt/squeezed_spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqt {

double SqueezedSpectrum::eta_at(int n) const {
    if (n < 0)
        throw std::out_of_range("eta_at: negative photon number " + std::to_string(n));
    return n <= n_max ? eta[static_cast<std::size_t>(n)] : 0.0;
}

SqueezedSpectrum build_spectrum(double r, double epsilon_tail) {
    if (!std::isfinite(r) || r < 0.0)
        throw std::domain_error("build_spectrum: squeezing parameter must be finite and >= 0, got " +
                                std::to_string(r));
    if (!std::isfinite(epsilon_tail) || epsilon_tail <= 0.0 || epsilon_tail >= 1.0)
        throw std::domain_error("build_spectrum: epsilon_tail must lie in (0, 1), got " +
                                std::to_string(epsilon_tail));

    SqueezedSpectrum s;
    s.r = r;
    s.epsilon_tail = epsilon_tail;

    if (r == 0.0) {  // vacuum: all weight on |0,0>, tail is exactly zero
        s.n_max = 0;
        s.eta = {1.0};
        return s;
    }

    const double t = std::tanh(r);
    const double t2 = t * t;
    int m = 1;  // candidate n_max + 1
    while (std::pow(t2, m) >= epsilon_tail) {
        ++m;
        if (m > kSpectrumCap + 1)
            throw std::length_error(
                "build_spectrum: required n_max exceeds the cap of " + std::to_string(kSpectrumCap) +
                " (r = " + std::to_string(r) + ", epsilon_tail = " + std::to_string(epsilon_tail) + ")");
    }
    s.n_max = m - 1;
    s.eta.resize(static_cast<std::size_t>(s.n_max) + 1);
    s.eta[0] = 1.0 / std::cosh(r);
    // Recurrence keeps the ratio eta_{n+1}/eta_n equal to tanh(r) exactly.
    for (int n = 1; n <= s.n_max; ++n)
        s.eta[static_cast<std::size_t>(n)] = s.eta[static_cast<std::size_t>(n) - 1] * t;
    return s;
}

double chi(const SqueezedSpectrum& s, int n, int m) {
    if (n < 0 || m < 0 || n > s.n_max || m > s.n_max)
        throw std::out_of_range("chi: index pair (" + std::to_string(n) + ", " + std::to_string(m) +
                                ") outside stored spectrum [0, " + std::to_string(s.n_max) + "]");
    return s.eta[static_cast<std::size_t>(n)] * s.eta[static_cast<std::size_t>(m)];
}

double truncation_weight(const SqueezedSpectrum& s) {
    return std::pow(std::tanh(s.r), 2.0 * (s.n_max + 1));
}

}  // namespace sqt
