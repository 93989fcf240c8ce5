#include "sqt/hilbert_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "sqt/errors.hpp"

namespace sqt {

namespace {

using std::complex;

constexpr complex<double> kI{0.0, 1.0};

void require_valid_tau(double tau, const char* who) {
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::domain_error(std::string(who) + ": tau must be finite and >= 0, got " +
                                std::to_string(tau));
}

}  // namespace

Eigen::Vector2cd ProductPreparation::qubit1() const {
    return {complex<double>(std::cos(alpha), 0.0), std::exp(kI * phi) * std::sin(alpha)};
}

Eigen::Vector2cd ProductPreparation::qubit2() const {
    return {complex<double>(std::cos(beta), 0.0), std::exp(kI * psi) * std::sin(beta)};
}

bool ProductPreparation::is_ground() const {
    return std::sin(alpha) == 0.0 && std::sin(beta) == 0.0;
}

double FullStateVector::max_cutoff_amplitude() const {
    const int nd = n_cut + 1;
    double worst = 0.0;
    for (int q = 0; q < 2; ++q) {
        const int edge = q * nd + n_cut;
        worst = std::max(worst, amps.row(edge).cwiseAbs().maxCoeff());
        worst = std::max(worst, amps.col(edge).cwiseAbs().maxCoeff());
    }
    return worst;
}

double FullStateVector::excitation() const {
    const int nd = n_cut + 1;
    double total = 0.0;
    for (int i = 0; i < amps.rows(); ++i) {
        const double row_exc = i / nd + i % nd;
        for (int j = 0; j < amps.cols(); ++j) {
            const double col_exc = j / nd + j % nd;
            total += std::norm(amps(i, j)) * (row_exc + col_exc);
        }
    }
    return total;
}

Eigen::MatrixXd build_pair_hamiltonian(int n_cut) {
    if (n_cut < 1)
        throw std::domain_error("build_pair_hamiltonian: n_cut must be >= 1, got " +
                                std::to_string(n_cut));
    const int nd = n_cut + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * nd, 2 * nd);
    // a sigma_+ couples |-, n> to |+, n-1> with matrix element sqrt(n).
    for (int n = 1; n <= n_cut; ++n) {
        const double g = std::sqrt(static_cast<double>(n));
        h(n, nd + n - 1) = g;
        h(nd + n - 1, n) = g;
    }
    return h;
}

HilbertOracle::HilbertOracle(SqueezedSpectrum s)
    : spectrum_(std::move(s)), n_cut_(spectrum_.n_max + 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_pair_hamiltonian(n_cut_));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("HilbertOracle: pair Hamiltonian eigendecomposition failed");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
}

FullStateVector HilbertOracle::initial_state(const ProductPreparation& p) const {
    const int nd = n_cut_ + 1;
    const Eigen::Vector2cd q1 = p.qubit1();
    const Eigen::Vector2cd q2 = p.qubit2();

    FullStateVector f;
    f.n_cut = n_cut_;
    f.amps = Eigen::MatrixXcd::Zero(2 * nd, 2 * nd);
    for (int n = 0; n <= spectrum_.n_max; ++n) {
        const double e = spectrum_.eta[static_cast<std::size_t>(n)];
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                f.amps(s * nd + n, t * nd + n) = q1(s) * q2(t) * e;
    }
    f.amps /= f.norm();  // absorb the truncated tail
    return f;
}

Eigen::MatrixXcd HilbertOracle::propagator(double tau) const {
    require_valid_tau(tau, "propagator");
    const Eigen::VectorXcd phases = (-kI * tau * evals_.array()).exp().matrix();
    return (evecs_ * phases.asDiagonal()) * evecs_.transpose();
}

void HilbertOracle::apply_pair1(FullStateVector& f, double tau) const {
    f.amps = propagator(tau) * f.amps;
}

void HilbertOracle::apply_pair2(FullStateVector& f, double tau) const {
    // The pair-2 propagator acts on column indices; H is symmetric so the
    // required transpose equals U itself.
    f.amps = f.amps * propagator(tau);
}

FullStateVector HilbertOracle::full_state(const ProductPreparation& p, double tau) const {
    require_valid_tau(tau, "full_state");
    FullStateVector f = initial_state(p);
    const Eigen::MatrixXcd u = propagator(tau);
    f.amps = u * f.amps;
    f.amps = f.amps * u;

    const double norm_err = std::abs(f.norm() - 1.0);
    if (norm_err > 1e-12)
        throw integrity_error("oracle state norm deviates from 1 by " + std::to_string(norm_err));
    const double buffer = f.max_cutoff_amplitude();
    if (buffer >= kCutoffAmplitudeTol)
        throw truncation_error("oracle state reached the Fock cutoff buffer (amplitude " +
                                   std::to_string(buffer) + ")",
                               buffer);
    return f;
}

QubitPairDensity HilbertOracle::reduce_to_qubits(const FullStateVector& f) const {
    const int nd = f.n_cut + 1;
    Matrix4cd rho;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const auto bra = f.amps.block(a * nd, b * nd, nd, nd);
                    const auto ket = f.amps.block(c * nd, d * nd, nd, nd);
                    rho(a * 2 + b, c * 2 + d) = (bra.array() * ket.array().conjugate()).sum();
                }
    return make_density(rho);
}

QubitPairDensity HilbertOracle::evolve(const ProductPreparation& p, double tau) const {
    return reduce_to_qubits(full_state(p, tau));
}

QubitPairDensity oracle_evolve(const SqueezedSpectrum& s, const ProductPreparation& p, double tau) {
    return HilbertOracle(s).evolve(p, tau);
}

}  // namespace sqt
