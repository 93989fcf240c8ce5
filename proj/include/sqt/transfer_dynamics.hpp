#pragma once

#include <array>

#include "sqt/density.hpp"
#include "sqt/squeezed_spectrum.hpp"

namespace sqt {

// Series coefficients of the reduced two-qubit state after resonant transfer
// from the squeezed field, ground preparation. The state is an X-form matrix
// with diagonal (A, B, B, C) and corner entries -D at |--><++| and |++><--|.
struct AbcdCoefficients {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    // Trace identity a + 2b + c = 1, ranges, and the positivity bound
    // d <= sqrt(a c). Throws integrity_error on violation.
    void validate() const;
};

// Evaluates the coefficient series at interaction phase tau = Omega t.
// Summed in ascending n so repeated runs are bit-identical:
//   A = sum eta_n^2 cos^4(tau sqrt n)
//   B = sum eta_n^2 sin^2(tau sqrt n) cos^2(tau sqrt n)
//   D = sum eta_n eta_{n+1} sin^2(tau sqrt(n+1)) cos^2(tau sqrt n)
// with C defined through the trace identity; eta beyond n_max is zero.
AbcdCoefficients coefficients(const SqueezedSpectrum& s, double tau);

// Builds the X-form matrix diag(a, b, b, c) with -d corners and validates it.
QubitPairDensity assemble_density(const AbcdCoefficients& c);

// B-dropped renormalized approximation diag(a, 0, 0, c)/(a+c), corner -d/(a+c).
QubitPairDensity purified_density(const AbcdCoefficients& c);

// Channel elements for the m-photon sector of the ground-preparation map.
// k[0] sends |--> to a cos^2 |--> minus sin^2 |++> combination, k[1] and
// k[2] send it to |-+> and |+->; irrelevant global phases are dropped.
struct KrausFamily {
    int m = 0;
    std::array<Matrix4cd, 3> k{};
};

KrausFamily kraus_family(const SqueezedSpectrum& s, double tau, int m);

// Independent assembly of the same state by explicit operator-sum over all
// photon sectors: rho = sum_m sum_mu K rho_0 K^dag with rho_0 = |--><--|.
QubitPairDensity evolve_from_ground(const SqueezedSpectrum& s, double tau);

}  // namespace sqt
