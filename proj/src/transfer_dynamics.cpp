#include "sqt/transfer_dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqt/errors.hpp"

namespace sqt {

namespace {

void require_valid_tau(double tau, const char* who) {
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::domain_error(std::string(who) + ": tau must be finite and >= 0, got " +
                                std::to_string(tau));
}

}  // namespace

void AbcdCoefficients::validate() const {
    const double lo = -1e-12, hi = 1.0 + 1e-12;
    for (double v : {a, b, c, d})
        if (!std::isfinite(v) || v < lo || v > hi)
            throw integrity_error("coefficient outside [0, 1]: " + std::to_string(v));
    const double trace_err = std::abs(a + 2.0 * b + c - 1.0);
    if (trace_err > 1e-12)
        throw integrity_error("coefficient trace identity violated by " + std::to_string(trace_err));
    if (d > std::sqrt(a * c) + 1e-12)
        throw integrity_error("corner coefficient d = " + std::to_string(d) +
                              " exceeds sqrt(a c) = " + std::to_string(std::sqrt(a * c)));
}

AbcdCoefficients coefficients(const SqueezedSpectrum& s, double tau) {
    require_valid_tau(tau, "coefficients");

    const int n_max = s.n_max;
    std::vector<double> cs(static_cast<std::size_t>(n_max) + 1);
    std::vector<double> sn(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double theta = tau * std::sqrt(static_cast<double>(n));
        cs[static_cast<std::size_t>(n)] = std::cos(theta);
        sn[static_cast<std::size_t>(n)] = std::sin(theta);
    }

    double a = 0.0, b = 0.0, d = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const double w = s.eta[i] * s.eta[i];
        const double c2 = cs[i] * cs[i];
        const double s2 = sn[i] * sn[i];
        a += w * c2 * c2;
        b += w * s2 * c2;
    }
    for (int n = 0; n < n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        d += s.eta[i] * s.eta[i + 1] * sn[i + 1] * sn[i + 1] * cs[i] * cs[i];
    }

    AbcdCoefficients out;
    out.a = a;
    out.b = b;
    out.c = 1.0 - 2.0 * b - a;  // trace identity absorbs the truncated tail
    out.d = d;
    return out;
}

QubitPairDensity assemble_density(const AbcdCoefficients& c) {
    c.validate();
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = c.a;
    m(1, 1) = c.b;
    m(2, 2) = c.b;
    m(3, 3) = c.c;
    m(0, 3) = -c.d;
    m(3, 0) = -c.d;
    return make_density(m);
}

QubitPairDensity purified_density(const AbcdCoefficients& c) {
    c.validate();
    const double kept = c.a + c.c;
    if (kept <= 0.0)
        throw integrity_error("purified_density: a + c = " + std::to_string(kept));
    AbcdCoefficients p;
    p.a = c.a / kept;
    p.b = 0.0;
    p.c = c.c / kept;
    p.d = c.d / kept;
    return assemble_density(p);
}

KrausFamily kraus_family(const SqueezedSpectrum& s, double tau, int m) {
    require_valid_tau(tau, "kraus_family");
    if (m < 0 || m > s.n_max)
        throw std::out_of_range("kraus_family: sector " + std::to_string(m) +
                                " outside stored spectrum [0, " + std::to_string(s.n_max) + "]");

    const double eta_m = s.eta_at(m);
    const double eta_m1 = s.eta_at(m + 1);  // zero at the truncation edge
    const double cm = std::cos(tau * std::sqrt(static_cast<double>(m)));
    const double sm = std::sin(tau * std::sqrt(static_cast<double>(m)));
    const double sm1 = std::sin(tau * std::sqrt(static_cast<double>(m + 1)));

    KrausFamily f;
    f.m = m;
    f.k[0] = Matrix4cd::Zero();
    f.k[0](0, 0) = eta_m * cm * cm;
    f.k[0](3, 0) = -eta_m1 * sm1 * sm1;
    f.k[1] = Matrix4cd::Zero();
    f.k[1](1, 0) = eta_m * sm * cm;
    f.k[2] = Matrix4cd::Zero();
    f.k[2](2, 0) = eta_m * sm * cm;
    return f;
}

QubitPairDensity evolve_from_ground(const SqueezedSpectrum& s, double tau) {
    require_valid_tau(tau, "evolve_from_ground");
    Matrix4cd rho = Matrix4cd::Zero();
    for (int m = 0; m <= s.n_max; ++m) {
        const KrausFamily f = kraus_family(s, tau, m);
        for (const Matrix4cd& k : f.k) {
            const Eigen::Vector4cd v = k.col(0);  // action on |-->
            rho.noalias() += v * v.adjoint();
        }
    }
    return make_density(rho);
}

}  // namespace sqt
