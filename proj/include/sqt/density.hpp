#pragma once

#include <Eigen/Dense>

namespace sqt {

using Matrix4cd = Eigen::Matrix4cd;

// Validation tolerances for density matrices.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

// Two-qubit density matrix in the product basis |-->, |-+>, |+->, |++>
// (qubit 1 is the slow index).
struct QubitPairDensity {
    Matrix4cd m = Matrix4cd::Identity() * 0.25;

    double purity() const;  // Tr rho^2

    // Throws integrity_error if the matrix is not Hermitian (kHermitianTol),
    // unit trace (kTraceTol), or PSD (min eigenvalue >= kEigenvalueFloor).
    void validate() const;
};

// Validates and wraps.
QubitPairDensity make_density(const Matrix4cd& m);

// Largest elementwise |a - b|.
double max_abs_diff(const QubitPairDensity& a, const QubitPairDensity& b);

}  // namespace sqt
