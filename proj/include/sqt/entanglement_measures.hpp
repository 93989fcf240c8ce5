#pragma once

#include "sqt/density.hpp"
#include "sqt/transfer_dynamics.hpp"

namespace sqt {

// All entanglement and mixedness figures of one two-qubit state.
struct EntanglementReport {
    double e_npt = 0.0;        // -2 lambda_min of the partial transpose; > 0 iff entangled
    double lambda_min = 0.0;   // smallest partial-transpose eigenvalue
    double concurrence = 0.0;
    double eof = 0.0;          // entanglement of formation, ebits
    double s_linear = 0.0;     // (4/3)(1 - Tr rho^2)
    double purity = 1.0;
    bool teleport_useful = false;
};

struct NptResult {
    double e_npt = 0.0;
    double lambda_min = 0.0;
};

// Transpose of one qubit's indices; which selects qubit 1 or 2 (same
// eigenvalues either way for a Hermitian input).
Matrix4cd partial_transpose(const Matrix4cd& rho, int which = 2);

// Validates rho, then eigensolves its partial transpose.
NptResult npt_negativity(const QubitPairDensity& rho);

// Analytic smallest PT eigenvalue for the X-form family: b - d.
double lambda_from_abcd(const AbcdCoefficients& c);

// Wootters concurrence via the spin-flip spectrum of rho * rho_tilde,
// rho_tilde = (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
double concurrence(const QubitPairDensity& rho);

// Entanglement of formation in ebits from a concurrence in [0, 1].
double eof(double concurrence);

// Linearized entropy (4/3)(1 - Tr rho^2), 0 pure to 1 maximally mixed.
double linearized_entropy(const QubitPairDensity& rho);

// Mixedness gate for teleportation with an n_levels-dimensional channel:
// useful iff s_linear < 1 - 2 / (n (n + 1)); 2/3 for qubits.
bool teleport_useful(double s_linear, int n_levels = 2);

EntanglementReport make_report(const QubitPairDensity& rho);

}  // namespace sqt
