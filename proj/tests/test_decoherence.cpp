#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mesocat/decoherence.hpp"
#include "mesocat/jc.hpp"

using namespace mesocat;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

CoherentSuperposition canonical_four(double alpha_prime) {
    const double a2 = alpha_prime * alpha_prime;
    return four_component_superposition(alpha_prime, kPi * a2 / 2.0, kPi * a2 / 4.0);
}

double masked_contrast(const DyadSum& d, cplx center, double radius, bool mask_disc) {
    double lo = 1e300, hi = -1e300;
    const double step = 0.02;
    for (double y = -radius; y <= radius + 1e-12; y += step) {
        for (double x = -radius; x <= radius + 1e-12; x += step) {
            const cplx g = center + cplx(x, y);
            if (mask_disc && std::abs(g - center) > radius) continue;
            const double w = wigner(d, g);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
    }
    return hi - lo;
}
} // namespace

TEST_CASE("no damping reproduces the pure state") {
    const double ap = 2.0;
    const double eta1 = kPi * ap * ap / 2.0, eta2 = kPi * ap * ap / 4.0;
    const DyadSum d = analytic_decohered_state(ap, eta1, eta2, 0.0);
    REQUIRE(d.size() == 16);
    CHECK(std::abs(d.trace() - cplx(1.0, 0.0)) < 1e-10);
    CHECK(d.purity() == Approx(1.0).epsilon(1e-10));
    CHECK(d.hermiticity_defect() < 1e-14);

    const DensityMatrix lhs = d.to_density(40);
    const DensityMatrix rhs = superposition_to_density(canonical_four(ap), 40);
    CHECK((lhs.elems() - rhs.elems()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("full decay lands on the vacuum") {
    const DyadSum d = analytic_decohered_state(2.0, kPi * 2.0, kPi, 50.0);
    CHECK(std::abs(d.trace() - cplx(1.0, 0.0)) < 1e-10);
    const DensityMatrix rho = d.to_density(20);
    CHECK(fidelity(rho, FieldState::vacuum(20)) > 1.0 - 1e-6);
    for (const auto& dy : d.dyads()) CHECK(std::abs(dy.ket_center) < 1e-9);
}

TEST_CASE("dyad coefficient structure at a sample time") {
    const double ap = 2.0, kt = 0.3;
    const double eta1 = kPi * ap * ap / 2.0, eta2 = kPi * ap * ap / 4.0;
    const DyadSum d = analytic_decohered_state(ap, eta1, eta2, kt);
    const double u = 1.0 - std::exp(-kt);
    CHECK(d.hermiticity_defect() < 1e-14);

    // Diagonal dyads all share one magnitude; opposite pairs carry
    // e^{-2 a'^2 u}; adjacent pairs carry e^{-a'^2 u} in magnitude.
    const double diag = std::abs(d.dyads()[0].coeff);
    CHECK(std::abs(d.dyads()[5].coeff) == Approx(diag).epsilon(1e-12));
    CHECK(std::abs(d.dyads()[1].coeff) ==
          Approx(diag * std::exp(-2.0 * ap * ap * u)).epsilon(1e-12));
    CHECK(std::abs(d.dyads()[2].coeff) ==
          Approx(diag * std::exp(-ap * ap * u)).epsilon(1e-12));

    // Centers shrink by e^{-kt/2}.
    CHECK(std::abs(d.dyads()[0].ket_center - cplx(ap * std::exp(-0.5 * kt), 0.0)) < 1e-12);
}

TEST_CASE("lindblad: vacuum is stationary") {
    const DensityMatrix vac = to_density(FieldState::vacuum(20));
    const DensityMatrix out = lindblad_evolve(vac, 0.4, lindblad_steps(0.4, 20));
    CHECK((out.elems() - vac.elems()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("lindblad: coherent states stay coherent") {
    const double kt = 0.2;
    const DensityMatrix rho0 = to_density(coherent_state(cplx(2.0, 0.0), 30));
    const DensityMatrix rho = lindblad_evolve(rho0, kt, lindblad_steps(kt, 30));
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-8);
    const FieldState target = coherent_state(cplx(2.0 * std::exp(-0.5 * kt), 0.0), 30);
    CHECK(fidelity(rho, target) > 1.0 - 1e-6);
}

TEST_CASE("lindblad step guard") {
    const DensityMatrix rho0 = to_density(FieldState::vacuum(40));
    CHECK_THROWS_AS(lindblad_evolve(rho0, 1.0, 5), guard_error);
    CHECK_THROWS_AS(lindblad_evolve(rho0, -0.1, 10), config_error);
}

TEST_CASE("analytic dyad solution matches the integrator elementwise") {
    struct Sample {
        double ap, kt;
        int n_max;
    };
    for (const Sample s : {Sample{2.0, 0.25, 40}, Sample{2.0, 0.01, 40},
                           Sample{4.0, 0.01, 58}}) {
        const double eta1 = kPi * s.ap * s.ap / 2.0, eta2 = kPi * s.ap * s.ap / 4.0;
        const DensityMatrix numeric =
            lindblad_evolve(superposition_to_density(canonical_four(s.ap), s.n_max), s.kt,
                            lindblad_steps(s.kt, s.n_max));
        const DensityMatrix analytic =
            analytic_decohered_state(s.ap, eta1, eta2, s.kt).to_density(s.n_max);
        CHECK((numeric.elems() - analytic.elems()).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("trace, purity, positivity along the damping trajectory") {
    const double ap = 2.0;
    const int n_max = 40;
    const DensityMatrix rho0 = superposition_to_density(canonical_four(ap), n_max);
    double prev_purity = 1.0 + 1e-12;
    for (const double kt : {0.0, 0.05, 0.125, 0.25, 0.5}) {
        const DensityMatrix rho =
            kt == 0.0 ? rho0 : lindblad_evolve(rho0, kt, lindblad_steps(kt, n_max));
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-8);
        CHECK(rho.hermiticity_defect() < 1e-10);
        CHECK(rho.min_eigenvalue() > -1e-7);
        CHECK(rho.purity() <= prev_purity + 1e-9);
        prev_purity = rho.purity();
    }
}

TEST_CASE("damped snapshots stay bounded and normalized in phase space") {
    const DyadSum d = analytic_decohered_state(4.0, kPi * 8.0, kPi * 4.0, 1.0 / 16.0);
    const PhaseSpaceGrid grid = wigner_grid(d, GridSpec::square(6.4, 0.05), 2);
    CHECK(grid.max_value() <= 2.0 / kPi + 1e-10);
    CHECK(grid.min_value() >= -2.0 / kPi - 1e-10);
    CHECK(grid.integral() == Approx(1.0).epsilon(1e-3));
}

TEST_CASE("cross-term closed form: pinned values and ray degeneracy") {
    CHECK(cross_term_wigner(0.7, 2.0, 0.0, cplx(0.0, 0.0)) ==
          Approx(2.0 * std::cos(0.7) / (4.0 * kPi)).epsilon(1e-14));

    // Along the pi/4 ray both cosines coincide.
    const cplx g = std::polar(0.9, kPi / 4.0);
    const double pref = std::exp(-2.0 * std::norm(g)) / (4.0 * kPi);
    CHECK(cross_term_wigner(1.1, 2.0, 0.0, g) ==
          Approx(2.0 * pref * std::cos(1.1 + 2.0 * 2.0 * g.real())).epsilon(1e-12));

    // Amplitude ratio between kt = 1/16 and kt = 0 at |alpha| = 4.
    const double ratio = cross_term_wigner(0.3, 4.0, 1.0 / 16.0, cplx(0.0, 0.0)) /
                         cross_term_wigner(0.3, 4.0, 0.0, cplx(0.0, 0.0));
    CHECK(ratio == Approx(std::exp(-32.0 * (1.0 - std::exp(-1.0 / 16.0)))).epsilon(1e-12));
    CHECK(ratio == Approx(std::exp(-1.9388)).epsilon(1e-4));
}

TEST_CASE("decay rate diagnostic: exact ratio two, pinned central rate") {
    const DecayRates r3 = decay_rate_diagnostic(3.0, {0.01, 0.03, 0.05, 0.09});
    CHECK(r3.rate_central / r3.rate_adjacent == Approx(2.0).epsilon(1e-12));
    CHECK(r3.rate_central == Approx(2.0 * 9.0).epsilon(1e-9));

    const DecayRates r4 = decay_rate_diagnostic(4.0, {0.02, 0.04, 0.08});
    CHECK(r4.rate_central == Approx(32.0).epsilon(1e-8));

    CHECK_THROWS_AS(decay_rate_diagnostic(3.0, {0.01, 0.02}), config_error);
}

TEST_CASE("integrator recovers the two-to-one rate structure") {
    // Needs well-separated components: the coherent-probe extraction of the
    // cross coefficients picks up overlap contamination ~e^{-a'^2} otherwise.
    const double ap = 3.0;
    const int n_max = 50;
    const DensityMatrix rho0 = superposition_to_density(canonical_four(ap), n_max);
    std::vector<double> u, log_opp, log_adj;
    for (const double kt : {0.04, 0.1, 0.15, 0.2}) {
        const DensityMatrix rho = lindblad_evolve(rho0, kt, lindblad_steps(kt, n_max));
        const cplx at(ap * std::exp(-0.5 * kt), 0.0);
        u.push_back(1.0 - std::exp(-kt));
        log_opp.push_back(std::log(coherence_magnitude(rho, at, -at)));
        log_adj.push_back(std::log(coherence_magnitude(rho, at, at * cplx(0.0, 1.0))));
    }
    const double ratio = least_squares_slope(u, log_opp) / least_squares_slope(u, log_adj);
    CHECK(std::abs(ratio - 2.0) < 0.05);
}

TEST_CASE("central interference dies before the adjacent fringes") {
    // Pick kt with e^{-2 nbar u} < 1e-3 while e^{-nbar u} > 0.03 (nbar = 16).
    const double u = 0.2175;
    const double kt = -std::log(1.0 - u);
    const DyadSum d = analytic_decohered_state(4.0, kPi * 8.0, kPi * 4.0, kt);
    CHECK(std::exp(-32.0 * u) < 1e-3);
    CHECK(std::exp(-16.0 * u) > 0.03);

    const double central = masked_contrast(d, cplx(0.0, 0.0), 0.7, true);
    const double at = 4.0 * std::exp(-0.5 * kt);
    const double adjacent =
        masked_contrast(d, cplx(at / 2.0, at / 2.0), 0.7, false);
    CHECK(central < 0.1 * adjacent);
}
