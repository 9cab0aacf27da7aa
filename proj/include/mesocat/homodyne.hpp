#ifndef MESOCAT_HOMODYNE_HPP
#define MESOCAT_HOMODYNE_HPP

// Probe-atom detection protocol: inject a resonant reference field through
// the displacement operator, pass a probe atom, record P_g as a function of
// the reference phase.

#include <vector>

#include "mesocat/fock.hpp"

namespace mesocat {

struct ProbeScan {
    std::vector<double> phis;   // radians, uniform over [0, 2 pi)
    std::vector<double> probs;  // P_g(phi)
    double beta_mag = 0.0;
    double gt_p = 0.0;
};

// amps'[m] = sum_n <m|D(beta)|n> amps[n]. The truncated displacement must
// stay unitary on the state: norm preserved to 1e-8, else guard_error.
FieldState inject_field(const FieldState& state, cplx beta);

// sum_m |amps[m]|^2 cos^2(gt_p sqrt(m)) for a normalized state.
double probe_probability(const FieldState& state, double gt_p);

// P_g over n_phi uniformly spaced phases. The state is embedded into a
// truncation large enough for the displaced field before scanning.
ProbeScan phase_scan(const FieldState& prepared, double beta_mag, double gt_p, int n_phi,
                     int threads = 0);

struct Peak {
    double phi = 0.0;
    double prob = 0.0;
};

// Local maxima of the scan after a centered 5-sample moving average,
// filtered by topographic prominence >= prominence_frac * (max - min).
// Returned sorted by prob descending. Requires n_phi >= 64.
std::vector<Peak> find_peaks(const ProbeScan& scan, double prominence_frac = 0.25);

} // namespace mesocat

#endif
