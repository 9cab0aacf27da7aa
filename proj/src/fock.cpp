#include "mesocat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mesocat {

namespace {

constexpr double kTailBudget = 1e-10;

// T_k = sqrt(k!/(k+d)!) * L_k^{(d)}(x), advanced by the three-term Laguerre
// recurrence with the factorial ratio folded in so nothing overflows.
class ScaledLaguerre {
public:
    ScaledLaguerre(int d, double x) : d_(d), x_(x) {
        t_prev_ = 0.0;
        t_curr_ = std::exp(-0.5 * std::lgamma(static_cast<double>(d) + 1.0));
        k_ = 0;
    }

    double value() const { return t_curr_; }

    void advance() {
        const double k = static_cast<double>(k_);
        const double d = static_cast<double>(d_);
        const double a = std::sqrt((k + 1.0) / (k + 1.0 + d));
        double next = (2.0 * k + 1.0 + d - x_) * a * t_curr_;
        if (k_ > 0) {
            const double b = std::sqrt((k + 1.0) * k / ((k + 1.0 + d) * (k + d)));
            next -= (k + d) * b * t_prev_;
        }
        next /= (k + 1.0);
        t_prev_ = t_curr_;
        t_curr_ = next;
        ++k_;
    }

private:
    int d_;
    double x_;
    double t_prev_;
    double t_curr_;
    int k_;
};

} // namespace

int default_n_max(double alpha_mag) {
    const double a = std::abs(alpha_mag);
    return static_cast<int>(std::ceil(a * a + 8.0 * a + 10.0));
}

int default_n_max(cplx alpha) { return default_n_max(std::abs(alpha)); }

FieldState::FieldState(std::vector<cplx> amps) : amps_(std::move(amps)) {
    if (amps_.empty())
        throw config_error("FieldState needs at least the n=0 amplitude");
}

FieldState FieldState::vacuum(int n_max) {
    if (n_max < 0) throw config_error("n_max must be >= 0");
    std::vector<cplx> a(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
    a[0] = 1.0;
    return FieldState(std::move(a));
}

double FieldState::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

FieldState FieldState::normalized() const {
    const double n = norm();
    if (n <= 0.0 || !std::isfinite(n))
        throw guard_error("cannot normalize a zero-norm state");
    std::vector<cplx> a = amps_;
    for (auto& v : a) v /= n;
    return FieldState(std::move(a));
}

FieldState FieldState::embedded(int new_n_max) const {
    if (new_n_max < n_max())
        throw config_error("embedded() only grows the truncation");
    std::vector<cplx> a = amps_;
    a.resize(static_cast<std::size_t>(new_n_max) + 1, cplx(0.0, 0.0));
    return FieldState(std::move(a));
}

double FieldState::mean_photon() const {
    double s = 0.0, w = 0.0;
    for (std::size_t n = 0; n < amps_.size(); ++n) {
        const double p = std::norm(amps_[n]);
        s += static_cast<double>(n) * p;
        w += p;
    }
    return w > 0.0 ? s / w : 0.0;
}

double FieldState::tail_mass() const {
    const int start = std::max(0, n_max() - 4);
    double s = 0.0;
    for (std::size_t n = static_cast<std::size_t>(start); n < amps_.size(); ++n)
        s += std::norm(amps_[n]);
    return s;
}

std::vector<cplx> coherent_amplitudes(cplx alpha, int n_max) {
    if (n_max < 0) throw config_error("n_max must be >= 0");
    std::vector<cplx> c(static_cast<std::size_t>(n_max) + 1);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= n_max; ++n)
        c[static_cast<std::size_t>(n)] =
            c[static_cast<std::size_t>(n) - 1] * alpha / std::sqrt(static_cast<double>(n));
    return c;
}

FieldState coherent_state(cplx alpha, int n_max) {
    FieldState st(coherent_amplitudes(alpha, n_max));
    if (st.tail_mass() >= kTailBudget)
        throw guard_error("truncation too small: coherent tail mass " +
                          std::to_string(st.tail_mass()) + " at n_max " +
                          std::to_string(n_max) + " (need n_max >= " +
                          std::to_string(default_n_max(alpha)) + ")");
    return st.normalized();
}

cplx displacement_element(int m, int n, cplx beta) {
    if (m < 0 || n < 0) throw config_error("photon indices must be >= 0");
    const double x = std::norm(beta);
    if (x == 0.0) return m == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);

    const int k = std::min(m, n);
    const int d = std::abs(m - n);
    // <m|D|n> (m>=n) carries beta^{m-n}; the transpose carries (-beta^*)^{n-m}.
    const cplx base = (m >= n) ? beta : -std::conj(beta);

    ScaledLaguerre lag(d, x);
    for (int i = 0; i < k; ++i) lag.advance();

    const double mag = std::exp(static_cast<double>(d) * std::log(std::abs(base)) - 0.5 * x);
    const cplx phase = std::polar(1.0, static_cast<double>(d) * std::arg(base));
    return lag.value() * mag * phase;
}

Eigen::MatrixXcd displacement_matrix(int n_max, cplx beta) {
    if (n_max < 0) throw config_error("n_max must be >= 0");
    const int dim = n_max + 1;
    Eigen::MatrixXcd out(dim, dim);
    const double x = std::norm(beta);
    if (x == 0.0) {
        out.setIdentity();
        return out;
    }
    const double ex = std::exp(-0.5 * x);
    // One scaled-Laguerre walk per diagonal serves both triangles.
    for (int d = 0; d <= n_max; ++d) {
        const double mag = std::exp(static_cast<double>(d) * std::log(std::abs(beta)));
        const cplx lower = mag * std::polar(ex, static_cast<double>(d) * std::arg(beta));
        const cplx upper = mag * std::polar(ex, static_cast<double>(d) * std::arg(-std::conj(beta)));
        ScaledLaguerre lag(d, x);
        for (int kk = 0; kk + d <= n_max; ++kk) {
            out(kk + d, kk) = lag.value() * lower;
            if (d > 0) out(kk, kk + d) = lag.value() * upper;
            lag.advance();
        }
    }
    return out;
}

double CoherentSuperposition::norm_squared() const {
    cplx s(0.0, 0.0);
    for (const auto& a : terms_)
        for (const auto& b : terms_)
            s += std::conj(a.weight) * b.weight * coherent_overlap(a.center, b.center);
    return s.real();
}

double CoherentSuperposition::norm() const { return std::sqrt(norm_squared()); }

CoherentSuperposition CoherentSuperposition::normalized() const {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw guard_error("cannot normalize a zero-norm superposition");
    std::vector<Term> t = terms_;
    for (auto& term : t) term.weight /= n;
    return CoherentSuperposition(std::move(t));
}

cplx coherent_overlap(cplx a, cplx b) {
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

cplx overlap(const FieldState& a, const FieldState& b) {
    if (a.n_max() != b.n_max())
        throw config_error("overlap needs matching truncations; embed() the smaller state");
    cplx s(0.0, 0.0);
    for (int n = 0; n <= a.n_max(); ++n) s += std::conj(a.amp(n)) * b.amp(n);
    return s;
}

cplx overlap(const FieldState& a, const CoherentSuperposition& b) {
    cplx s(0.0, 0.0);
    for (const auto& term : b.terms()) {
        const auto c = coherent_amplitudes(term.center, a.n_max());
        cplx inner(0.0, 0.0);
        for (int n = 0; n <= a.n_max(); ++n)
            inner += std::conj(a.amp(n)) * c[static_cast<std::size_t>(n)];
        s += term.weight * inner;
    }
    return s;
}

cplx overlap(const CoherentSuperposition& a, const FieldState& b) {
    return std::conj(overlap(b, a));
}

cplx overlap(const CoherentSuperposition& a, const CoherentSuperposition& b) {
    cplx s(0.0, 0.0);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            s += std::conj(ta.weight) * tb.weight * coherent_overlap(ta.center, tb.center);
    return s;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd elems) : elems_(std::move(elems)) {
    if (elems_.rows() != elems_.cols() || elems_.rows() < 1)
        throw config_error("density matrix must be square and non-empty");
}

DensityMatrix DensityMatrix::trace_normalized() const {
    const double t = trace().real();
    if (!(t > 0.0) || !std::isfinite(t))
        throw guard_error("cannot normalize a density matrix with non-positive trace");
    return DensityMatrix(elems_ / t);
}

double DensityMatrix::purity() const {
    return (elems_ * elems_).trace().real();
}

double DensityMatrix::hermiticity_defect() const {
    return (elems_ - elems_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        0.5 * (elems_ + elems_.adjoint()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix to_density(const FieldState& state) {
    const int dim = state.n_max() + 1;
    Eigen::VectorXcd v(dim);
    for (int n = 0; n < dim; ++n) v(n) = state.amp(n);
    return DensityMatrix(v * v.adjoint());
}

FieldState to_field_state(const CoherentSuperposition& s, int n_max) {
    if (s.size() == 0) throw config_error("empty superposition");
    std::vector<cplx> amps(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
    for (const auto& term : s.terms()) {
        const auto c = coherent_amplitudes(term.center, n_max);
        for (std::size_t n = 0; n < amps.size(); ++n) amps[n] += term.weight * c[n];
    }
    FieldState st(std::move(amps));
    const double n2 = st.norm() * st.norm();
    if (n2 <= 0.0)
        throw guard_error("superposition renders to zero norm at this truncation");
    if (st.tail_mass() / n2 >= kTailBudget)
        throw guard_error("truncation too small to render superposition (tail mass " +
                          std::to_string(st.tail_mass() / n2) + ")");
    return st.normalized();
}

DensityMatrix superposition_to_density(const CoherentSuperposition& s, int n_max) {
    return to_density(to_field_state(s, n_max));
}

double fidelity(const FieldState& a, const FieldState& b) {
    return std::norm(overlap(a, b));
}

double fidelity(const DensityMatrix& rho, const FieldState& psi) {
    if (rho.n_max() != psi.n_max())
        throw config_error("fidelity needs matching truncations");
    const int dim = psi.n_max() + 1;
    Eigen::VectorXcd v(dim);
    for (int n = 0; n < dim; ++n) v(n) = psi.amp(n);
    return (v.adjoint() * rho.elems() * v)(0, 0).real();
}

} // namespace mesocat
