#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sqt/entanglement_measures.hpp"
#include "sqt/errors.hpp"
#include "sqt/hilbert_oracle.hpp"
#include "sqt/transfer_dynamics.hpp"

using namespace sqt;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("oracle: pair interaction couples the expected doublets") {
    const Eigen::MatrixXd h = build_pair_hamiltonian(3);
    const int nd = 4;
    CHECK(h.rows() == 2 * nd);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h(1, nd + 0) == doctest::Approx(1.0));
    CHECK(h(2, nd + 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(h(3, nd + 2) == doctest::Approx(std::sqrt(3.0)));
    CHECK(h(0, nd + 0) == 0.0);  // vacuum is decoupled from |+, -1>
    CHECK(h.cwiseAbs().sum() == doctest::Approx(2.0 * (1.0 + std::sqrt(2.0) + std::sqrt(3.0))));
    CHECK_THROWS_AS(build_pair_hamiltonian(0), std::domain_error);
}

TEST_CASE("oracle: propagator rotates one doublet at rate sqrt(n)") {
    const HilbertOracle oracle(build_spectrum(0.3));
    const double tau = 0.8;
    const Eigen::MatrixXcd u = oracle.propagator(tau);
    const int nd = oracle.n_cut() + 1;
    // |-, 2> -> cos(tau sqrt 2)|-, 2> - i sin(tau sqrt 2)|+, 1>
    const double theta = tau * std::sqrt(2.0);
    CHECK(std::abs(u(2, 2) - std::cos(theta)) < 1e-12);
    CHECK(std::abs(u(nd + 1, 2) - std::complex<double>(0.0, -std::sin(theta))) < 1e-12);
    CHECK(std::abs(u(0, 0) - 1.0) < 1e-12);  // ground column untouched
    // unitary
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(2 * nd, 2 * nd)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("oracle: tau = 0 reduces to the prepared qubits") {
    const HilbertOracle oracle(build_spectrum(0.6));
    const QubitPairDensity rho = oracle.evolve(ProductPreparation::ground(), 0.0);
    CHECK(rho.m(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rho.m.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("oracle: matches the series route at the reproduction point") {
    const SqueezedSpectrum s = build_spectrum(0.86);
    const HilbertOracle oracle(s);
    const QubitPairDensity closed = assemble_density(coefficients(s, 1.5 * kPi));
    const QubitPairDensity full = oracle.evolve(ProductPreparation::ground(), 1.5 * kPi);
    CHECK(max_abs_diff(closed, full) < 1e-12);
}

TEST_CASE("oracle: frozen cross-checked value for the flipped preparation") {
    // Reference value from an independent dense expm implementation.
    ProductPreparation flipped;
    flipped.alpha = kPi / 2.0;
    flipped.beta = kPi / 2.0;
    const QubitPairDensity rho = oracle_evolve(build_spectrum(0.3), flipped, 1.7);
    CHECK(npt_negativity(rho).e_npt == doctest::Approx(0.23817158831469948).epsilon(1e-9));
}

TEST_CASE("oracle: conserved quantities and unreachable buffer") {
    ProductPreparation p;
    p.alpha = 1.1;
    p.beta = 0.4;
    p.phi = 0.9;
    p.psi = 2.2;
    const HilbertOracle oracle(build_spectrum(0.5));
    const FullStateVector before = oracle.initial_state(p);
    const FullStateVector after = oracle.full_state(p, 3.7);
    CHECK(std::abs(before.norm() - 1.0) < 1e-12);
    CHECK(std::abs(after.norm() - 1.0) < 1e-12);
    CHECK(std::abs(before.excitation() - after.excitation()) < 1e-10);
    // With two spare field levels the top one is exactly unreachable.
    CHECK(after.max_cutoff_amplitude() == 0.0);
}

TEST_CASE("oracle: preparation state vectors") {
    ProductPreparation p;
    p.alpha = 0.7;
    p.phi = 1.3;
    const Eigen::Vector2cd q = p.qubit1();
    CHECK(q(0).real() == doctest::Approx(std::cos(0.7)));
    CHECK(std::abs(q(1) - std::polar(std::sin(0.7), 1.3)) < 1e-15);
    CHECK(ProductPreparation::ground().is_ground());
    CHECK_FALSE(p.is_ground());
    CHECK((p.qubit2() - Eigen::Vector2cd(1.0, 0.0)).norm() == 0.0);
}

TEST_CASE("oracle: cutoff sits two levels above the spectrum") {
    const SqueezedSpectrum s = build_spectrum(0.86);
    CHECK(HilbertOracle(s).n_cut() == s.n_max + 2);
}

TEST_CASE("oracle: domain errors") {
    const HilbertOracle oracle(build_spectrum(0.4));
    CHECK_THROWS_AS(oracle.evolve(ProductPreparation::ground(), -1.0), std::domain_error);
    CHECK_THROWS_AS(oracle.propagator(std::nan("")), std::domain_error);
}
