#ifndef MESOCAT_PHASE_SPACE_HPP
#define MESOCAT_PHASE_SPACE_HPP

// Wigner and Husimi-Q evaluation on phase-space grids, plus the Q-zero
// nonclassicality analysis. Normalization: integral of W (and Q) over the
// plane is 1; vacuum W(0) = 2/pi, coherent-state Q maximum is 1/pi.

#include <functional>
#include <vector>

#include "mesocat/fock.hpp"

namespace mesocat {

struct GridSpec {
    double re_min = 0.0, re_max = 0.0;
    double im_min = 0.0, im_max = 0.0;
    double step = 0.0;

    static GridSpec square(double half_width, double step);
    int nx() const;
    int ny() const;
    std::size_t points() const;
    void validate() const;
};

// Dense real values over gamma = x + iy; rows run over y, columns over x.
class PhaseSpaceGrid {
public:
    PhaseSpaceGrid(GridSpec spec, std::vector<double> values);

    const GridSpec& spec() const { return spec_; }
    const std::vector<double>& values() const { return values_; }
    double at(int iy, int ix) const;
    double x_at(int ix) const { return spec_.re_min + ix * spec_.step; }
    double y_at(int iy) const { return spec_.im_min + iy * spec_.step; }

    double min_value() const;
    double max_value() const;
    double integral() const;   // midpoint quadrature: sum * step^2

private:
    GridSpec spec_;
    std::vector<double> values_;
};

// Wigner value of a single coherent dyad coeff * |ket><bra| (complex
// contribution; sums over Hermitian dyad sets come out real).
cplx wigner_dyad(cplx coeff, cplx ket_center, cplx bra_center, cplx gamma);

// W(gamma) from the Fock-basis density matrix through the displaced-parity
// kernel (2/pi) sum_{n,m} rho_{nm} (-1)^n <m|D(2 gamma)|n>. Guard: requires
// |gamma| < sqrt(n_max); throws guard_error otherwise.
double wigner(const DensityMatrix& rho, cplx gamma);

// W(gamma) as an exact finite sum of Gaussian dyads; no truncation. The
// superposition is normalized internally.
double wigner(const CoherentSuperposition& s, cplx gamma);

double q_function(const FieldState& state, cplx gamma);
double q_function(const CoherentSuperposition& s, cplx gamma);
double q_function(const DensityMatrix& rho, cplx gamma);

// Dense evaluation, parallel over rows; output is independent of the worker
// count. Resource guard: at most 4e6 points. threads <= 0 picks the
// hardware concurrency.
PhaseSpaceGrid evaluate_grid(const std::function<double(cplx)>& f, const GridSpec& spec,
                             int threads = 0);

PhaseSpaceGrid wigner_grid(const DensityMatrix& rho, const GridSpec& spec, int threads = 0);
PhaseSpaceGrid wigner_grid(const CoherentSuperposition& s, const GridSpec& spec,
                           int threads = 0);
PhaseSpaceGrid q_grid(const FieldState& state, const GridSpec& spec, int threads = 0);
PhaseSpaceGrid q_grid(const CoherentSuperposition& s, const GridSpec& spec, int threads = 0);
PhaseSpaceGrid q_grid(const DensityMatrix& rho, const GridSpec& spec, int threads = 0);

// Number of 4-connected components with value strictly above the threshold.
int components_above(const PhaseSpaceGrid& grid, double threshold);

// Closed-form Q-zero of the canonical four-component superposition along the
// pi/4 ray: alpha'^2 = 2(n1-n2), |gamma| = pi (3 n2 - n1 + 1) / (2 sqrt(n1-n2)).
struct QZero {
    int n1 = 0;
    int n2 = 0;
    double gamma_mag = 0.0;
    double ray_angle = 0.0;     // pi/4
    double alpha_prime = 0.0;   // sqrt(2 (n1 - n2))
};

QZero q_zero_closed_form(int n1, int n2);

// All r in (0, r_max] with Q(r e^{i ray_angle}) = 0, found by bracketing
// local minima of |A(r)|^2 on a 0.01 mesh and bisecting d|A|^2/dr; a
// candidate is accepted when |A|^2 < 1e-20. Empty result is valid.
std::vector<double> q_zero_scan(const CoherentSuperposition& s, double ray_angle,
                                double r_max);

} // namespace mesocat

#endif
