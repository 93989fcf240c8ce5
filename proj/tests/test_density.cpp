#include <complex>

#include "doctest.h"
#include "sqt/density.hpp"
#include "sqt/errors.hpp"

using namespace sqt;
using std::complex;

namespace {

Matrix4cd bell_like() {
    // (|--> - |++>)/sqrt(2) as a projector
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    m(0, 3) = -0.5;
    m(3, 0) = -0.5;
    return m;
}

}  // namespace

TEST_CASE("density: valid states pass validation") {
    CHECK_NOTHROW(make_density(bell_like()));
    CHECK_NOTHROW(make_density(Matrix4cd::Identity() * 0.25));
}

TEST_CASE("density: purity") {
    CHECK(make_density(bell_like()).purity() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(make_density(Matrix4cd::Identity() * 0.25).purity() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("density: hermiticity violation is rejected") {
    Matrix4cd m = Matrix4cd::Identity() * 0.25;
    m(0, 1) = complex<double>(0.0, 1e-3);  // no conjugate partner
    CHECK_THROWS_AS(make_density(m), integrity_error);
}

TEST_CASE("density: trace violation is rejected") {
    Matrix4cd m = Matrix4cd::Identity() * 0.2501;
    CHECK_THROWS_AS(make_density(m), integrity_error);
}

TEST_CASE("density: negative eigenvalue is rejected") {
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = 0.6;
    m(1, 1) = 0.6;
    m(2, 2) = -0.1;
    m(3, 3) = -0.1;
    CHECK_THROWS_AS(make_density(m), integrity_error);
}

TEST_CASE("density: slightly negative rounding noise is tolerated") {
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = 1.0 + 5e-11;
    m(1, 1) = -5e-11;  // above the -1e-10 floor
    CHECK_NOTHROW(make_density(m));
}

TEST_CASE("density: max_abs_diff") {
    const QubitPairDensity a = make_density(bell_like());
    Matrix4cd shifted = bell_like();
    shifted(0, 3) += 1e-4;
    shifted(3, 0) += 1e-4;
    const QubitPairDensity b = make_density(shifted);
    CHECK(max_abs_diff(a, b) == doctest::Approx(1e-4).epsilon(1e-10));
    CHECK(max_abs_diff(a, a) == 0.0);
}
