#include "sqt/entanglement_measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqt {

namespace {

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

// sigma_y x sigma_y is real in this basis: antidiagonal (-1, 1, 1, -1).
Matrix4cd spin_flip_kernel() {
    Matrix4cd f = Matrix4cd::Zero();
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

}  // namespace

Matrix4cd partial_transpose(const Matrix4cd& rho, int which) {
    if (which != 1 && which != 2)
        throw std::domain_error("partial_transpose: which must be 1 or 2, got " +
                                std::to_string(which));
    Matrix4cd out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (which == 1)
                        out(a * 2 + b, c * 2 + d) = rho(c * 2 + b, a * 2 + d);
                    else
                        out(a * 2 + b, c * 2 + d) = rho(a * 2 + d, c * 2 + b);
                }
    return out;
}

NptResult npt_negativity(const QubitPairDensity& rho) {
    rho.validate();
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(partial_transpose(rho.m, 2), Eigen::EigenvaluesOnly);
    NptResult r;
    r.lambda_min = es.eigenvalues().minCoeff();
    r.e_npt = -2.0 * r.lambda_min;
    return r;
}

double lambda_from_abcd(const AbcdCoefficients& c) {
    c.validate();
    // PT spectrum of the X form is {a, c, b + d, b - d}; b - d is the only
    // candidate negative value.
    return c.b - c.d;
}

double concurrence(const QubitPairDensity& rho) {
    rho.validate();
    // The spin-flip lambdas are the singular values of sqrt(rho)^* F sqrt(rho),
    // equal to the root eigenvalues of rho * tilde(rho) but with no squaring,
    // so near-zero values keep full absolute accuracy.
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho.m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("concurrence: density eigensolve failed");
    const Eigen::Vector4d clamped = es.eigenvalues().cwiseMax(0.0);
    const Matrix4cd root =
        es.eigenvectors() * clamped.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
    Eigen::JacobiSVD<Matrix4cd> svd(root.conjugate() * spin_flip_kernel() * root);
    const Eigen::Vector4d lam = svd.singularValues();  // descending
    return std::clamp(lam(0) - lam(1) - lam(2) - lam(3), 0.0, 1.0);
}

double eof(double concurrence) {
    if (!std::isfinite(concurrence) || concurrence < 0.0 || concurrence > 1.0)
        throw std::domain_error("eof: concurrence must lie in [0, 1], got " +
                                std::to_string(concurrence));
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence)));
    return binary_entropy(x);
}

double linearized_entropy(const QubitPairDensity& rho) {
    rho.validate();
    return (4.0 / 3.0) * (1.0 - rho.purity());
}

bool teleport_useful(double s_linear, int n_levels) {
    if (n_levels < 2)
        throw std::domain_error("teleport_useful: n_levels must be >= 2, got " +
                                std::to_string(n_levels));
    if (!std::isfinite(s_linear) || s_linear < 0.0)
        throw std::domain_error("teleport_useful: s_linear must be finite and >= 0, got " +
                                std::to_string(s_linear));
    // (n - 1)(n + 2) / (n(n + 1)) == 1 - 2 / (n(n + 1)) with one rounding,
    // so the excluded boundary is the correctly rounded rational.
    const double n = n_levels;
    const double threshold = (n - 1.0) * (n + 2.0) / (n * (n + 1.0));
    return s_linear < threshold;
}

EntanglementReport make_report(const QubitPairDensity& rho) {
    rho.validate();
    EntanglementReport rep;
    const NptResult npt = npt_negativity(rho);
    rep.e_npt = npt.e_npt;
    rep.lambda_min = npt.lambda_min;
    rep.concurrence = concurrence(rho);
    rep.eof = eof(rep.concurrence);
    rep.purity = rho.purity();
    rep.s_linear = (4.0 / 3.0) * (1.0 - rep.purity);
    rep.teleport_useful = teleport_useful(rep.s_linear);
    return rep;
}

}  // namespace sqt
