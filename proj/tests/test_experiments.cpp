#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sqt/experiments.hpp"
#include "sqt/reporting.hpp"
#include "sqt/transfer_dynamics.hpp"
#include "sqt/version.hpp"

using namespace sqt;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPeakTau = 1.5 * kPi;

SweepSpec slice_at_r(double r, int tau_steps = 200) {
    SweepSpec spec;
    spec.r_min = r;
    spec.r_max = r;
    spec.r_steps = 1;
    spec.tau_steps = tau_steps;
    return spec;
}

}  // namespace

TEST_CASE("experiments: grid axis construction") {
    const std::vector<double> v = grid_axis(0.0, 2.0, 5);
    REQUIRE(v.size() == 5);
    CHECK(v.front() == 0.0);
    CHECK(v.back() == 2.0);
    CHECK(v[2] == doctest::Approx(1.0));
    CHECK(grid_axis(0.86, 0.86, 1) == std::vector<double>{0.86});
    CHECK_THROWS_AS(grid_axis(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(grid_axis(0.0, 1.0, 1), std::invalid_argument);  // unpinned single step
    CHECK_THROWS_AS(grid_axis(1.0, 0.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(grid_axis(1.0, 1.0, 3), std::invalid_argument);
}

TEST_CASE("experiments: sweep spec validation") {
    SweepSpec degenerate;
    degenerate.r_steps = 1;  // r range still [0, 2]
    CHECK_THROWS_AS(degenerate.validate(), std::invalid_argument);

    SweepSpec negative;
    negative.r_min = -0.5;
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);

    SweepSpec eps;
    eps.epsilon_tail = 0.0;
    CHECK_THROWS_AS(eps.validate(), std::invalid_argument);

    CHECK_NOTHROW(slice_at_r(0.86).validate());
}

TEST_CASE("experiments: sweep layout and provenance") {
    SweepSpec spec;
    spec.r_steps = 3;
    spec.r_min = 0.2;
    spec.r_max = 1.0;
    spec.tau_steps = 4;
    spec.tau_max = 2.0;
    const SweepResult res = sweep_ground(spec);
    CHECK(res.reports.size() == 12);
    CHECK(res.r_values.size() == 3);
    CHECK(res.tau_values.size() == 4);
    CHECK(res.code_version == kVersion);
    CHECK(res.epsilon_tail == spec.epsilon_tail);
    CHECK(res.max_n_max == build_spectrum(1.0).n_max);
    CHECK(res.config_hash == sweep_ground(spec).config_hash);

    SweepSpec other = spec;
    other.tau_max = 2.5;
    CHECK(res.config_hash != sweep_ground(other).config_hash);

    // row-major, r outer
    CHECK(res.at(1, 2).e_npt == res.reports[1 * 4 + 2].e_npt);
}

TEST_CASE("experiments: ground sweep rejects excited preparations") {
    SweepSpec spec;
    spec.preparation.alpha = 0.5;
    CHECK_THROWS_AS(sweep_ground(spec), std::invalid_argument);
}

TEST_CASE("experiments: frozen grid peak on the reproduction grid") {
    const SweepResult res = sweep_ground(SweepSpec{});  // 200x200 default
    const GridPeak p = find_peak(res);
    CHECK(p.i == 86);
    CHECK(p.j == 97);
    CHECK(p.r == doctest::Approx(0.86432160804020097).epsilon(1e-14));
    CHECK(p.tau == doctest::Approx(4.5939872472091947).epsilon(1e-14));
    CHECK(p.value == doctest::Approx(0.8677755947687984).epsilon(1e-9));
    // Regression note target: EoF at the peak.
    CHECK(res.at(p.i, p.j).eof == doctest::Approx(0.81368133864882264).epsilon(1e-9));
    CHECK(std::abs(res.at(p.i, p.j).eof - 0.82) <= 0.02);
}

TEST_CASE("experiments: tau slice at r = 0.86") {
    const SweepResult res = sweep_ground(slice_at_r(0.86));
    const GridPeak p = find_peak(res);
    CHECK(p.i == 0);
    CHECK(p.tau == doctest::Approx(4.5939872472091947).epsilon(1e-14));
    CHECK(p.value == doctest::Approx(0.86778823048752884).epsilon(1e-9));
    CHECK(std::abs(p.value - 0.87) <= 0.02);
    // Value at the grid point nearest 3pi/2.
    CHECK(res.at(0, 99).e_npt == doctest::Approx(0.85134594457057955).epsilon(1e-9));
}

TEST_CASE("experiments: r slice at tau = 3pi/2 is non-monotone with an interior peak") {
    SweepSpec spec;
    spec.tau_min = kPeakTau;
    spec.tau_max = kPeakTau;
    spec.tau_steps = 1;
    const SweepResult res = sweep_ground(spec);
    const GridPeak p = find_peak(res);
    CHECK(p.r == doctest::Approx(0.81407035175879394).epsilon(1e-14));
    CHECK(p.value == doctest::Approx(0.8425751862518791).epsilon(1e-9));
    CHECK(std::abs(p.r - 0.86) <= 0.05);
    // rises to the peak, falls past it
    CHECK(p.i > 0);
    CHECK(p.i + 1 < res.r_values.size());
    CHECK(res.at(p.i - 1, 0).e_npt < p.value);
    CHECK(res.at(p.i + 1, 0).e_npt < p.value);
    CHECK(res.at(res.r_values.size() - 1, 0).e_npt < p.value);
}

TEST_CASE("experiments: vacuum row never shows transfer") {
    SweepSpec spec = slice_at_r(0.0, 50);
    const SweepResult res = sweep_ground(spec);
    const GridPeak p = find_peak(res);
    CHECK(p.value <= 0.0);
}

TEST_CASE("experiments: single-point grid peak is that point") {
    SweepSpec spec = slice_at_r(0.86, 1);
    spec.tau_min = spec.tau_max = kPeakTau;
    const SweepResult res = sweep_ground(spec);
    const GridPeak p = find_peak(res);
    CHECK(p.i == 0);
    CHECK(p.j == 0);
    CHECK(p.r == 0.86);
    CHECK(p.tau == kPeakTau);
    CHECK(p.value == doctest::Approx(0.84070530739347937).epsilon(1e-12));
}

TEST_CASE("experiments: find_peak ties resolve to the first row-major point") {
    const SweepResult res = sweep_ground(slice_at_r(0.0, 5));  // all-zero row
    const GridPeak p = find_peak(res);
    CHECK(p.i == 0);
    CHECK(p.j == 0);
    CHECK(p.tau == 0.0);
}

TEST_CASE("experiments: find_peak knows every report field") {
    const SweepResult res = sweep_ground(slice_at_r(0.86, 30));
    for (const char* m : {"e_npt", "concurrence", "eof", "s_linear", "purity", "lambda_min"})
        CHECK_NOTHROW(find_peak(res, m));
    CHECK_THROWS_AS(find_peak(res, "negativity"), std::invalid_argument);
    CHECK(find_peak(res, "purity").value <= 1.0 + 1e-12);
}

TEST_CASE("experiments: oracle sweep agrees with the closed form for the ground preparation") {
    SweepSpec spec;
    spec.r_min = 0.2;
    spec.r_max = 1.2;
    spec.r_steps = 4;
    spec.tau_max = 7.0;
    spec.tau_steps = 5;
    const SweepResult closed = sweep_ground(spec);
    const SweepResult oracle = sweep_prepared(spec);
    for (std::size_t k = 0; k < closed.reports.size(); ++k)
        CHECK(std::abs(closed.reports[k].e_npt - oracle.reports[k].e_npt) < 1e-8);
}

TEST_CASE("experiments: averaged state at the reproduction point") {
    const QubitPairDensity avg = averaged_density(0.86, kPeakTau, 64);
    CHECK(avg.m(0, 0).real() == doctest::Approx(0.64045972536106577).epsilon(1e-9));
    CHECK(avg.m(1, 1).real() == doctest::Approx(0.038952460314463248).epsilon(1e-9));
    CHECK(avg.m(2, 2).real() == doctest::Approx(0.038952460314463248).epsilon(1e-9));
    CHECK(avg.m(3, 3).real() == doctest::Approx(0.28163535401000789).epsilon(1e-9));
    CHECK(avg.m(0, 3).real() == doctest::Approx(-0.085914457980743653).epsilon(1e-9));

    // X sparsity pattern to quadrature tolerance
    double off_pattern = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && i + j != 3) off_pattern = std::max(off_pattern, std::abs(avg.m(i, j)));
    CHECK(off_pattern < 1e-10);

    CHECK(npt_negativity(avg).e_npt == doctest::Approx(0.093923995332560753).epsilon(1e-9));
}

TEST_CASE("experiments: averaged state converges under grid doubling") {
    const double e16 = npt_negativity(averaged_density(0.7, 2.0, 16)).e_npt;
    const double e32 = npt_negativity(averaged_density(0.7, 2.0, 32)).e_npt;
    CHECK(std::abs(e32 - e16) < 1e-3);
}

TEST_CASE("experiments: averaged state at tau = 0 is separable") {
    CHECK(npt_negativity(averaged_density(0.5, 0.0, 16)).e_npt <= 1e-12);
}

TEST_CASE("experiments: averaged_density rejects coarse grids") {
    CHECK_THROWS_AS(averaged_density(0.5, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(averaged_density(0.5, 1.0, 15), std::invalid_argument);
}

TEST_CASE("experiments: preparation scan around the origin") {
    const PrepScanResult scan = preparation_scan(0.86, kPeakTau, 9, 9);
    REQUIRE(scan.alphas.size() == 9);
    REQUIRE(scan.betas.size() == 9);
    CHECK(scan.alphas.front() == 0.0);
    CHECK(scan.alphas.back() == doctest::Approx(2.0 * kPi));
    // Origin agrees with the closed form to the cross-route tolerance.
    CHECK(scan.at(0, 0) == doctest::Approx(0.84070530739347937).epsilon(1e-8));
    double vmax = scan.e_npt[0];
    for (double v : scan.e_npt) vmax = std::max(vmax, v);
    CHECK(scan.at(0, 0) >= vmax - 1e-12);
}

TEST_CASE("experiments: flipped preparation bump is positive but small") {
    const PrepScanResult scan = preparation_scan(0.6, 1.7, 5, 5);
    // alpha = beta = pi/2 is the (1, 1) node of the 5-point grid... it is
    // index 1 only for spacing pi/2, which a 5-point [0, 2pi] grid has.
    CHECK(scan.alphas[1] == doctest::Approx(kPi / 2.0));
    CHECK(scan.at(1, 1) == doctest::Approx(0.37702055525998912).epsilon(1e-9));
    CHECK(scan.at(1, 1) > 0.0);
    CHECK(scan.at(1, 1) < scan.at(0, 0));
}

TEST_CASE("experiments: preparation scan rejects degenerate grids") {
    CHECK_THROWS_AS(preparation_scan(0.5, 1.0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(preparation_scan(0.5, 1.0, 5, 0), std::invalid_argument);
}
