#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mesocat/fock.hpp"
#include "mesocat/jc.hpp"

using namespace mesocat;
using doctest::Approx;

namespace {

// Brute-force displacement oracle: exponentiate beta a^dag - beta^* a on a
// truncated space through a Hermitian eigendecomposition.
Eigen::MatrixXcd displacement_by_exponential(int dim, cplx beta) {
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double root = std::sqrt(static_cast<double>(n) + 1.0);
        gen(n + 1, n) += beta * root;          // beta a^dag
        gen(n, n + 1) -= std::conj(beta) * root;  // -beta^* a
    }
    // gen is anti-Hermitian: gen = i H with H Hermitian.
    const Eigen::MatrixXcd h = cplx(0.0, -1.0) * gen;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const auto& lambda = solver.eigenvalues();
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, lambda(i));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace

TEST_CASE("coherent state: vacuum, normalization, closed-form amplitude") {
    const FieldState vac = coherent_state(cplx(0.0, 0.0), 10);
    CHECK(vac.amp(0).real() == Approx(1.0).epsilon(1e-14));
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(vac.amp(n)) == 0.0);

    const auto raw = coherent_amplitudes(cplx(2.0, 0.0), 40);
    double sum = 0.0;
    for (const auto& a : raw) sum += std::norm(a);
    CHECK(std::abs(sum - 1.0) < 1e-10);

    // High-precision oracle for c_2 = alpha^2 e^{-|alpha|^2/2} / sqrt(2).
    const long double oracle = 4.0L * std::exp(-2.0L) / std::sqrt(2.0L);
    const FieldState st = coherent_state(cplx(2.0, 0.0), 40);
    CHECK(st.amp(2).real() == Approx(static_cast<double>(oracle)).epsilon(1e-12));
    CHECK(st.amp(2).imag() == 0.0);
}

TEST_CASE("coherent state: truncation guard and tail behavior") {
    CHECK_THROWS_AS(coherent_state(cplx(4.0, 0.0), 20), guard_error);
    CHECK(default_n_max(cplx(4.0, 0.0)) == 58);

    // Raw norm grows toward 1 with the truncation.
    double prev = 0.0;
    for (int n_max : {8, 12, 16, 24, 40}) {
        const auto c = coherent_amplitudes(cplx(2.0, 0.0), n_max);
        double s = 0.0;
        for (const auto& a : c) s += std::norm(a);
        CHECK(s >= prev);
        prev = s;
    }
    CHECK(prev == Approx(1.0).epsilon(1e-12));

    // Monotone amplitude decay beyond n = |alpha|^2 + |alpha|.
    const auto c = coherent_amplitudes(cplx(2.0, 0.0), 40);
    for (int n = 7; n < 40; ++n) CHECK(std::abs(c[n + 1]) < std::abs(c[n]));
}

TEST_CASE("displacement element: pinned values and delta at beta = 0") {
    CHECK(displacement_element(0, 0, cplx(1.0, 0.0)).real() ==
          Approx(std::exp(-0.5)).epsilon(1e-14));
    CHECK(displacement_element(1, 0, cplx(1.0, 0.0)).real() ==
          Approx(std::exp(-0.5)).epsilon(1e-14));
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            CHECK(std::abs(displacement_element(m, n, cplx(0.0, 0.0)) -
                           cplx(m == n ? 1.0 : 0.0, 0.0)) == 0.0);
}

TEST_CASE("displacement element: unitarity column sums") {
    const cplx beta(1.3, 0.4);
    for (int n = 0; n < 4; ++n) {
        double sum = 0.0;
        for (int m = 0; m < 60; ++m) sum += std::norm(displacement_element(m, n, beta));
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("displacement matrix vs matrix-exponential oracle") {
    const cplx beta(0.7, -0.3);
    const int dim = 30;
    const Eigen::MatrixXcd oracle = displacement_by_exponential(dim, beta);
    const Eigen::MatrixXcd ours = displacement_matrix(dim - 1, beta);
    // Compare away from the truncation edge.
    for (int m = 0; m < 13; ++m)
        for (int n = 0; n < 13; ++n) CHECK(std::abs(ours(m, n) - oracle(m, n)) < 1e-9);
}

TEST_CASE("displacement matrix: D(beta) D(-beta) = 1 on the inner block") {
    // A displaced Fock state |m> spreads over ~2 sqrt(m) |beta| levels, so a
    // 10-level margin supports the 1e-8 identity only for small |beta|; a
    // unit-size displacement gets a wider margin below.
    {
        const cplx beta(0.25, 0.1);
        const int n_max = 40;
        const Eigen::MatrixXcd prod =
            displacement_matrix(n_max, beta) * displacement_matrix(n_max, -beta);
        const int inner = n_max - 10;
        for (int m = 0; m <= inner; ++m)
            for (int n = 0; n <= inner; ++n)
                CHECK(std::abs(prod(m, n) - cplx(m == n ? 1.0 : 0.0, 0.0)) < 1e-8);
    }
    {
        const cplx beta(0.9, 0.45);
        const int n_max = 60;
        const Eigen::MatrixXcd prod =
            displacement_matrix(n_max, beta) * displacement_matrix(n_max, -beta);
        const int inner = n_max - 30;
        for (int m = 0; m <= inner; ++m)
            for (int n = 0; n <= inner; ++n)
                CHECK(std::abs(prod(m, n) - cplx(m == n ? 1.0 : 0.0, 0.0)) < 1e-8);
    }
}

TEST_CASE("overlaps: identities and cross-representation consistency") {
    const FieldState st = coherent_state(cplx(1.2, -0.7), 40);
    CHECK(std::abs(overlap(st, st) - cplx(1.0, 0.0)) < 1e-12);

    CHECK(std::abs(coherent_overlap(cplx(2.0, 0.0), cplx(-2.0, 0.0)) - std::exp(-8.0)) <
          1e-15);

    const FieldState rendered = coherent_state(cplx(1.5, 0.0), 40);
    const CoherentSuperposition single(
        {CoherentSuperposition::Term{cplx(1.0, 0.0), cplx(1.5, 0.0)}});
    CHECK(std::abs(overlap(rendered, single) - cplx(1.0, 0.0)) < 1e-8);

    // Conjugate symmetry across representations.
    const FieldState other = coherent_state(cplx(0.4, 0.9), 40);
    CHECK(std::abs(overlap(st, other) - std::conj(overlap(other, st))) < 1e-14);
    CHECK(std::abs(overlap(st, single) - std::conj(overlap(single, st))) < 1e-14);

    CHECK_THROWS_AS(overlap(st, coherent_state(cplx(1.0, 0.0), 30)), config_error);
}

TEST_CASE("density matrices: vacuum, purity, superposition trace") {
    const DensityMatrix vac = to_density(FieldState::vacuum(8));
    CHECK(vac.elems()(0, 0).real() == Approx(1.0));
    CHECK(vac.elems().cwiseAbs().sum() == Approx(1.0));

    const DensityMatrix rho = to_density(coherent_state(cplx(1.7, 0.4), 40));
    CHECK((rho.elems() * rho.elems() - rho.elems()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(rho.hermiticity_defect() < 1e-14);
    CHECK(rho.purity() == Approx(1.0).epsilon(1e-10));

    const CoherentSuperposition s =
        approximate_superposition(cplx(4.0, 0.0), {3.7 * M_PI, 1.9 * M_PI});
    const DensityMatrix rho_s = superposition_to_density(s, 58);
    CHECK(std::abs(rho_s.trace() - cplx(1.0, 0.0)) < 1e-10);
    CHECK(rho_s.min_eigenvalue() > -1e-12);
}

TEST_CASE("field state invariants: tail mass and embedding") {
    const FieldState st = coherent_state(cplx(3.0, 0.0), default_n_max(3.0));
    CHECK(st.tail_mass() < 1e-10);
    const FieldState wide = st.embedded(80);
    CHECK(wide.n_max() == 80);
    CHECK(std::abs(wide.norm() - 1.0) < 1e-12);
    for (int n = 0; n <= st.n_max(); ++n) CHECK(wide.amp(n) == st.amp(n));
    CHECK_THROWS_AS(st.embedded(10), config_error);
}
