#include "mesocat/decoherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mesocat/jc.hpp"

namespace mesocat {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kImagResidue = 1e-10;
}

cplx DyadSum::trace() const {
    cplx t(0.0, 0.0);
    for (const auto& d : dyads_) t += d.coeff * coherent_overlap(d.bra_center, d.ket_center);
    return t;
}

DyadSum DyadSum::trace_normalized() const {
    const double t = trace().real();
    if (!(t > 0.0) || !std::isfinite(t))
        throw guard_error("dyad sum has non-positive trace");
    std::vector<Dyad> out = dyads_;
    for (auto& d : out) d.coeff /= t;
    return DyadSum(std::move(out));
}

double DyadSum::purity() const {
    cplx p(0.0, 0.0);
    for (const auto& a : dyads_)
        for (const auto& b : dyads_)
            p += a.coeff * b.coeff * coherent_overlap(a.bra_center, b.ket_center) *
                 coherent_overlap(b.bra_center, a.ket_center);
    return p.real();
}

double DyadSum::hermiticity_defect() const {
    double defect = 0.0;
    for (const auto& a : dyads_) {
        double best = std::numeric_limits<double>::infinity();
        cplx mirror(0.0, 0.0);
        for (const auto& b : dyads_) {
            const double dist =
                std::abs(b.ket_center - a.bra_center) + std::abs(b.bra_center - a.ket_center);
            if (dist < best) {
                best = dist;
                mirror = b.coeff;
            }
        }
        defect = std::max(defect, best > 1e-9 ? std::abs(a.coeff)
                                              : std::abs(mirror - std::conj(a.coeff)));
    }
    return defect;
}

DensityMatrix DyadSum::to_density(int n_max) const {
    const int dim = n_max + 1;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& d : dyads_) {
        const auto ket = coherent_amplitudes(d.ket_center, n_max);
        const auto bra = coherent_amplitudes(d.bra_center, n_max);
        Eigen::VectorXcd vk(dim), vb(dim);
        for (int n = 0; n < dim; ++n) {
            vk(n) = ket[static_cast<std::size_t>(n)];
            vb(n) = bra[static_cast<std::size_t>(n)];
        }
        rho += d.coeff * (vk * vb.adjoint());
    }
    return DensityMatrix(std::move(rho));
}

DyadSum damp_superposition(const CoherentSuperposition& s, double kappa_t) {
    if (kappa_t < 0.0) throw config_error("kappa_t must be >= 0");
    const double u = 1.0 - std::exp(-kappa_t);
    const double shrink = std::exp(-0.5 * kappa_t);
    std::vector<DyadSum::Dyad> dyads;
    dyads.reserve(s.size() * s.size());
    for (const auto& ket : s.terms()) {
        for (const auto& bra : s.terms()) {
            const cplx mu = ket.center, nu = bra.center;
            const cplx decay =
                std::exp(u * (std::conj(nu) * mu - 0.5 * (std::norm(mu) + std::norm(nu))));
            dyads.push_back({ket.weight * std::conj(bra.weight) * decay, mu * shrink,
                             nu * shrink});
        }
    }
    return DyadSum(std::move(dyads));
}

DyadSum analytic_decohered_state(double alpha_prime, double eta1, double eta2,
                                 double kappa_t) {
    if (!(alpha_prime > 0.0)) throw config_error("alpha_prime must be > 0");
    return damp_superposition(four_component_superposition(alpha_prime, eta1, eta2), kappa_t)
        .trace_normalized();
}

double wigner(const DyadSum& d, cplx gamma) {
    cplx acc(0.0, 0.0);
    for (const auto& dy : d.dyads())
        acc += wigner_dyad(dy.coeff, dy.ket_center, dy.bra_center, gamma);
    if (std::abs(acc.imag()) >= kImagResidue)
        throw guard_error("dyad wigner sum has imaginary residue " +
                          std::to_string(acc.imag()));
    return acc.real();
}

double q_function(const DyadSum& d, cplx gamma) {
    cplx acc(0.0, 0.0);
    for (const auto& dy : d.dyads())
        acc += dy.coeff * coherent_overlap(gamma, dy.ket_center) *
               coherent_overlap(dy.bra_center, gamma);
    return acc.real() / kPi;
}

PhaseSpaceGrid wigner_grid(const DyadSum& d, const GridSpec& spec, int threads) {
    return evaluate_grid([&d](cplx g) { return wigner(d, g); }, spec, threads);
}

PhaseSpaceGrid q_grid(const DyadSum& d, const GridSpec& spec, int threads) {
    return evaluate_grid([&d](cplx g) { return q_function(d, g); }, spec, threads);
}

int lindblad_steps(double kappa_t, int n_max) {
    return std::max(1, static_cast<int>(std::ceil(kappa_t * n_max / 0.05)));
}

DensityMatrix lindblad_evolve(const DensityMatrix& rho0, double kappa_t, int steps) {
    if (kappa_t < 0.0) throw config_error("kappa_t must be >= 0");
    if (steps < 1) throw config_error("steps must be >= 1");
    const int n_max = rho0.n_max();
    const double h = kappa_t / steps;
    if (h * n_max >= 0.1)
        throw guard_error("lindblad step guard: kappa dt * n_max = " +
                          std::to_string(h * n_max) + " must stay below 0.1");
    if (kappa_t == 0.0) return rho0;

    const int dim = n_max + 1;
    Eigen::VectorXd root(dim);
    for (int n = 0; n < dim; ++n) root(n) = std::sqrt(static_cast<double>(n) + 1.0);

    auto rhs = [&](const Eigen::MatrixXcd& r) {
        Eigen::MatrixXcd out(dim, dim);
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n)
                out(m, n) = -0.5 * static_cast<double>(m + n) * r(m, n);
        for (int m = 0; m + 1 < dim; ++m)
            for (int n = 0; n + 1 < dim; ++n)
                out(m, n) += root(m) * root(n) * r(m + 1, n + 1);
        return out;
    };

    Eigen::MatrixXcd r = rho0.elems();
    for (int s = 0; s < steps; ++s) {
        const Eigen::MatrixXcd k1 = rhs(r);
        const Eigen::MatrixXcd k2 = rhs(r + (0.5 * h) * k1);
        const Eigen::MatrixXcd k3 = rhs(r + (0.5 * h) * k2);
        const Eigen::MatrixXcd k4 = rhs(r + h * k3);
        r += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return DensityMatrix(std::move(r));
}

double cross_term_wigner(double eta1, double alpha_prime, double kappa_t, cplx gamma) {
    const double u = 1.0 - std::exp(-kappa_t);
    const double pref =
        std::exp(-2.0 * std::norm(gamma) - 2.0 * alpha_prime * alpha_prime * u) / (4.0 * kPi);
    return pref * (std::cos(eta1 + 2.0 * alpha_prime * gamma.imag()) +
                   std::cos(eta1 + 2.0 * alpha_prime * gamma.real()));
}

double coherence_magnitude(const DensityMatrix& rho, cplx ket_center, cplx bra_center) {
    const int dim = rho.n_max() + 1;
    const auto ket = coherent_amplitudes(ket_center, rho.n_max());
    const auto bra = coherent_amplitudes(bra_center, rho.n_max());
    Eigen::VectorXcd vk(dim), vb(dim);
    for (int n = 0; n < dim; ++n) {
        vk(n) = ket[static_cast<std::size_t>(n)];
        vb(n) = bra[static_cast<std::size_t>(n)];
    }
    return std::abs((vk.adjoint() * rho.elems() * vb)(0, 0));
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw config_error("slope fit needs matching samples, at least 2");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    if (den == 0.0) throw config_error("slope fit needs distinct abscissae");
    return num / den;
}

DecayRates decay_rate_diagnostic(double alpha_prime,
                                 const std::vector<double>& kappa_t_samples) {
    if (kappa_t_samples.size() < 3)
        throw config_error("decay_rate_diagnostic needs at least 3 kappa_t samples");
    const double eta1 = kPi * alpha_prime * alpha_prime / 2.0;
    const double eta2 = kPi * alpha_prime * alpha_prime / 4.0;

    std::vector<double> u, log_opp, log_adj;
    for (double kt : kappa_t_samples) {
        const DyadSum d = analytic_decohered_state(alpha_prime, eta1, eta2, kt);
        // Term order in four_component_superposition is +a', -a', +ia', -ia'
        // and damp_superposition is ket-major, so dyad 1 is |a'><-a'| and
        // dyad 2 is |a'><i a'|.
        u.push_back(1.0 - std::exp(-kt));
        log_opp.push_back(std::log(std::abs(d.dyads()[1].coeff)));
        log_adj.push_back(std::log(std::abs(d.dyads()[2].coeff)));
    }
    return DecayRates{-least_squares_slope(u, log_opp), -least_squares_slope(u, log_adj)};
}

} // namespace mesocat
