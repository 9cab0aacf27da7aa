#ifndef MESOCAT_DECOHERENCE_HPP
#define MESOCAT_DECOHERENCE_HPP

// Cavity damping at zero temperature: the exact dyad-sum solution for
// coherent superpositions, a Fock-basis master-equation integrator as the
// independent witness, and decay-rate diagnostics.

#include <vector>

#include "mesocat/fock.hpp"
#include "mesocat/phase_space.hpp"

namespace mesocat {

// sum_jk c_jk |mu_j><nu_k| with coherent (unnormalized-overlap) dyads.
class DyadSum {
public:
    struct Dyad {
        cplx coeff;
        cplx ket_center;
        cplx bra_center;
    };

    DyadSum() = default;
    explicit DyadSum(std::vector<Dyad> dyads) : dyads_(std::move(dyads)) {}

    const std::vector<Dyad>& dyads() const { return dyads_; }
    std::size_t size() const { return dyads_.size(); }

    cplx trace() const;
    DyadSum trace_normalized() const;
    double purity() const;
    // Worst |c_jk - conj(c_kj)| over mirror pairs; 0 for a Hermitian sum.
    double hermiticity_defect() const;
    DensityMatrix to_density(int n_max) const;

private:
    std::vector<Dyad> dyads_;
};

// Exact damping of a pure superposition: each dyad |mu><nu| picks up
// exp[(1 - e^{-kt})(nu^* mu - (|mu|^2 + |nu|^2)/2)] and its centers decay
// by e^{-kt/2}. Dyads are ordered ket-major over the input terms.
DyadSum damp_superposition(const CoherentSuperposition& s, double kappa_t);

// Damped four-component superposition (components on the axes), trace
// renormalized: 4 diagonal dyads, 4 opposite-pair dyads decaying with
// e^{-2 a'^2 (1-e^{-kt})}, 8 adjacent-pair dyads with e^{-a'^2 (1 -+ i)(1-e^{-kt})}.
DyadSum analytic_decohered_state(double alpha_prime, double eta1, double eta2,
                                 double kappa_t);

double wigner(const DyadSum& d, cplx gamma);
double q_function(const DyadSum& d, cplx gamma);
PhaseSpaceGrid wigner_grid(const DyadSum& d, const GridSpec& spec, int threads = 0);
PhaseSpaceGrid q_grid(const DyadSum& d, const GridSpec& spec, int threads = 0);

// Fixed-step RK4 integration of rho' = -(1/2)(N rho + rho N) + a rho a^dag
// in scaled time kappa*t. Guard: (kappa_t/steps) * n_max < 0.1.
DensityMatrix lindblad_evolve(const DensityMatrix& rho0, double kappa_t, int steps);

// Smallest step count satisfying the integrator guard with margin.
int lindblad_steps(double kappa_t, int n_max);

// Central-interference Wigner contribution of the opposite-pair coherences,
// in the closed form (prefactor e^{-2|g|^2 - 2 a'^2 (1-e^{-kt})} / (4 pi)).
double cross_term_wigner(double eta1, double alpha_prime, double kappa_t, cplx gamma);

// |<ket|rho|bra>| between coherent probes; for well-separated components this
// reads off the corresponding dyad coefficient magnitude.
double coherence_magnitude(const DensityMatrix& rho, cplx ket_center, cplx bra_center);

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

struct DecayRates {
    double rate_central = 0.0;    // opposite-pair coefficient decay per (1-e^{-kt})
    double rate_adjacent = 0.0;   // adjacent-pair ditto; central/adjacent = 2 exactly
};

// Fits log coefficient magnitudes from analytic_decohered_state against
// (1 - e^{-kt}). Needs >= 3 samples.
DecayRates decay_rate_diagnostic(double alpha_prime,
                                 const std::vector<double>& kappa_t_samples);

} // namespace mesocat

#endif
