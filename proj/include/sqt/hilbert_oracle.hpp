#pragma once

#include <Eigen/Dense>

#include "sqt/density.hpp"
#include "sqt/squeezed_spectrum.hpp"

namespace sqt {

// Buffer amplitude above this value means the Fock cutoff was reached.
inline constexpr double kCutoffAmplitudeTol = 1e-6;

// Product preparation cos(alpha)|-> + e^{i phi} sin(alpha)|+> on qubit 1 and
// cos(beta)|-> + e^{i psi} sin(beta)|+> on qubit 2.
struct ProductPreparation {
    double alpha = 0.0;
    double beta = 0.0;
    double phi = 0.0;
    double psi = 0.0;

    Eigen::Vector2cd qubit1() const;
    Eigen::Vector2cd qubit2() const;
    bool is_ground() const;

    static ProductPreparation ground() { return {}; }
};

// Joint pure state of (qubit1 x mode_a) x (qubit2 x mode_b), matricized:
// row index q1 * (n_cut + 1) + n_a, column index q2 * (n_cut + 1) + n_b.
struct FullStateVector {
    int n_cut = 0;
    Eigen::MatrixXcd amps;

    double norm() const { return amps.norm(); }

    // Largest |amplitude| in the n = n_cut buffer level of either mode.
    double max_cutoff_amplitude() const;

    // Expectation of the conserved excitation number
    // (qubit flips counted from |-,->, plus photons in both modes).
    double excitation() const;
};

// Interaction a sigma_+ + a^dag sigma_- of one qubit-mode pair in units of
// the coupling rate, field truncated at n_cut. Real symmetric, dimension
// 2 (n_cut + 1); row index q * (n_cut + 1) + n.
Eigen::MatrixXd build_pair_hamiltonian(int n_cut);

// Reference propagator in the full qubit+field space. Eigendecomposes the
// pair interaction once per spectrum and applies exp(-i tau H) to each
// qubit-mode pair; shares nothing with the series/Kraus route beyond eta_n.
//
// The cutoff is n_max + 2: one qubit flip can raise a mode from n_max to
// n_max + 1, so the extra level keeps the top row exactly unreachable and
// any amplitude there flags a real defect rather than truncation noise.
class HilbertOracle {
public:
    explicit HilbertOracle(SqueezedSpectrum s);

    // Normalized truncated initial state |prep_1, prep_2> x sum eta_n |n,n>.
    FullStateVector initial_state(const ProductPreparation& p) const;

    // exp(-i tau H_pair) as a dense matrix.
    Eigen::MatrixXcd propagator(double tau) const;

    void apply_pair1(FullStateVector& f, double tau) const;
    void apply_pair2(FullStateVector& f, double tau) const;

    // initial_state + both propagators, with norm and cutoff-buffer checks.
    FullStateVector full_state(const ProductPreparation& p, double tau) const;

    // Partial trace over both field modes.
    QubitPairDensity reduce_to_qubits(const FullStateVector& f) const;

    // full_state + reduce_to_qubits.
    QubitPairDensity evolve(const ProductPreparation& p, double tau) const;

    int n_cut() const { return n_cut_; }
    const SqueezedSpectrum& spectrum() const { return spectrum_; }

private:
    SqueezedSpectrum spectrum_;
    int n_cut_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXd evecs_;
};

// One-shot helper for callers that do not reuse the eigendecomposition.
QubitPairDensity oracle_evolve(const SqueezedSpectrum& s, const ProductPreparation& p, double tau);

}  // namespace sqt
