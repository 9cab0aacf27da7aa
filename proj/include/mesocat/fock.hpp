#ifndef MESOCAT_FOCK_HPP
#define MESOCAT_FOCK_HPP

// Truncated-Fock-space primitives: coherent states, displacement-operator
// matrix elements, overlaps, density matrices. Conventions used throughout:
// hbar = 1, times enter only as dimensionless g*t, D(beta)|0> = |beta>.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mesocat/errors.hpp"

namespace mesocat {

using cplx = std::complex<double>;

// Truncation rule: covers > 8 Poisson standard deviations for |alpha| <= 8.
int default_n_max(double alpha_mag);
int default_n_max(cplx alpha);

// Pure cavity state as amplitudes over photon numbers 0..n_max.
class FieldState {
public:
    explicit FieldState(std::vector<cplx> amps);
    static FieldState vacuum(int n_max);

    int n_max() const { return static_cast<int>(amps_.size()) - 1; }
    const std::vector<cplx>& amps() const { return amps_; }
    cplx amp(int n) const { return amps_[static_cast<std::size_t>(n)]; }

    double norm() const;                 // sqrt(sum |a_n|^2)
    FieldState normalized() const;
    FieldState embedded(int new_n_max) const;  // zero-pad into a larger truncation
    double mean_photon() const;
    double tail_mass() const;            // sum_{n > n_max-5} |a_n|^2

private:
    std::vector<cplx> amps_;
};

// Unnormalized-exact coherent amplitudes c_n = alpha^n e^{-|alpha|^2/2}/sqrt(n!),
// by the stable recurrence c_n = c_{n-1} * alpha / sqrt(n).
std::vector<cplx> coherent_amplitudes(cplx alpha, int n_max);

// Coherent state in the truncated basis. Throws guard_error when the
// truncation cannot hold the tail-mass invariant (< 1e-10 above n_max-5).
FieldState coherent_state(cplx alpha, int n_max);

// <m|D(beta)|n> with D(beta) = exp(beta a^dag - beta^* a), evaluated through
// the associated-Laguerre closed form with a scaled recurrence (no factorials).
cplx displacement_element(int m, int n, cplx beta);

// Dense (n_max+1)^2 matrix of <m|D(beta)|n>.
Eigen::MatrixXcd displacement_matrix(int n_max, cplx beta);

// Sum of coherent components  sum_k w_k |mu_k>.
class CoherentSuperposition {
public:
    struct Term {
        cplx weight;
        cplx center;
    };

    CoherentSuperposition() = default;
    explicit CoherentSuperposition(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    double norm_squared() const;   // <psi|psi> via exact coherent overlaps
    double norm() const;
    CoherentSuperposition normalized() const;

private:
    std::vector<Term> terms_;
};

// Exact Gaussian overlap <a|b> between coherent states.
cplx coherent_overlap(cplx a, cplx b);

cplx overlap(const FieldState& a, const FieldState& b);
cplx overlap(const FieldState& a, const CoherentSuperposition& b);
cplx overlap(const CoherentSuperposition& a, const FieldState& b);
cplx overlap(const CoherentSuperposition& a, const CoherentSuperposition& b);

// Complex Hermitian matrix in the truncated Fock basis.
class DensityMatrix {
public:
    explicit DensityMatrix(Eigen::MatrixXcd elems);

    int n_max() const { return static_cast<int>(elems_.rows()) - 1; }
    const Eigen::MatrixXcd& elems() const { return elems_; }

    cplx trace() const { return elems_.trace(); }
    DensityMatrix trace_normalized() const;
    double purity() const;               // Tr(rho^2)
    double hermiticity_defect() const;   // max |rho - rho^dag|
    double min_eigenvalue() const;

private:
    Eigen::MatrixXcd elems_;
};

DensityMatrix to_density(const FieldState& state);

// Render a superposition into Fock amplitudes (normalized). Throws
// guard_error when the truncation cannot hold the rendered tail.
FieldState to_field_state(const CoherentSuperposition& s, int n_max);
DensityMatrix superposition_to_density(const CoherentSuperposition& s, int n_max);

double fidelity(const FieldState& a, const FieldState& b);   // |<a|b>|^2
double fidelity(const DensityMatrix& rho, const FieldState& psi); // <psi|rho|psi>

} // namespace mesocat

#endif
