#include "sqt/density.hpp"

#include <cmath>
#include <string>

#include "sqt/errors.hpp"

namespace sqt {

double QubitPairDensity::purity() const {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
    return m.squaredNorm();
}

void QubitPairDensity::validate() const {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kHermitianTol))
        throw integrity_error("density matrix not Hermitian: max |rho - rho^dag| = " + std::to_string(herm));

    const double trace_err = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
    if (!(trace_err <= kTraceTol))
        throw integrity_error("density matrix trace deviates from 1 by " + std::to_string(trace_err));

    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues().minCoeff();
    if (!(lambda_min >= kEigenvalueFloor))
        throw integrity_error("density matrix not PSD: min eigenvalue = " + std::to_string(lambda_min));
}

QubitPairDensity make_density(const Matrix4cd& m) {
    QubitPairDensity rho{m};
    rho.validate();
    return rho;
}

double max_abs_diff(const QubitPairDensity& a, const QubitPairDensity& b) {
    return (a.m - b.m).cwiseAbs().maxCoeff();
}

}  // namespace sqt
