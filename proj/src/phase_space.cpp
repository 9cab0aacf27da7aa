#include "mesocat/phase_space.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <queue>
#include <thread>

namespace mesocat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxGridPoints = 4'000'000;
constexpr double kImagResidue = 1e-10;

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

double parity(int n) { return (n & 1) ? -1.0 : 1.0; }

// Displaced-parity kernel with the Laguerre recurrence coefficients
// precomputed once, so grid evaluation and the scalar path share the exact
// same arithmetic.
class WignerKernel {
public:
    explicit WignerKernel(const DensityMatrix& rho)
        : rho_(&rho.elems()), n_max_(rho.n_max()) {
        const int dim = n_max_ + 1;
        t0_.resize(static_cast<std::size_t>(dim));
        offset_.resize(static_cast<std::size_t>(dim));
        std::size_t total = 0;
        for (int d = 0; d < dim; ++d) {
            offset_[static_cast<std::size_t>(d)] = total;
            t0_[static_cast<std::size_t>(d)] =
                std::exp(-0.5 * std::lgamma(static_cast<double>(d) + 1.0));
            total += static_cast<std::size_t>(n_max_ - d);
        }
        p_.resize(total);
        q_.resize(total);
        for (int d = 0; d < dim; ++d) {
            for (int k = 0; k + d < n_max_; ++k) {
                const double kk = k, dd = d;
                const std::size_t i = offset_[static_cast<std::size_t>(d)] +
                                      static_cast<std::size_t>(k);
                p_[i] = std::sqrt((kk + 1.0) / (kk + 1.0 + dd)) / (kk + 1.0);
                q_[i] = (k > 0) ? std::sqrt((kk + 1.0) * kk / ((kk + 1.0 + dd) * (kk + dd))) *
                                      (kk + dd) / (kk + 1.0)
                                : 0.0;
            }
        }
    }

    double eval(cplx gamma) const {
        if (std::norm(gamma) >= static_cast<double>(n_max_))
            throw guard_error("wigner guard: need |gamma| < sqrt(n_max); got |gamma| = " +
                              std::to_string(std::abs(gamma)) + " with n_max " +
                              std::to_string(n_max_));
        const auto& rho = *rho_;
        const cplx beta = 2.0 * gamma;
        const double x = std::norm(beta);
        cplx acc(0.0, 0.0);
        if (x == 0.0) {
            for (int n = 0; n <= n_max_; ++n) acc += parity(n) * rho(n, n);
        } else {
            const double logb = std::log(std::abs(beta));
            const double argb = std::arg(beta);
            const double argu = std::arg(-std::conj(beta));
            for (int d = 0; d <= n_max_; ++d) {
                const double mag = std::exp(static_cast<double>(d) * logb - 0.5 * x);
                const cplx lower = mag * std::polar(1.0, static_cast<double>(d) * argb);
                const cplx upper = mag * std::polar(1.0, static_cast<double>(d) * argu);
                const std::size_t base = offset_[static_cast<std::size_t>(d)];
                double tp = 0.0;
                double tc = t0_[static_cast<std::size_t>(d)];
                for (int k = 0; k + d <= n_max_; ++k) {
                    if (d == 0) {
                        acc += parity(k) * rho(k, k) * (tc * lower);
                    } else {
                        acc += parity(k) * rho(k, k + d) * (tc * lower);
                        acc += parity(k + d) * rho(k + d, k) * (tc * upper);
                    }
                    if (k + d < n_max_) {
                        const std::size_t i = base + static_cast<std::size_t>(k);
                        const double next =
                            (2.0 * k + 1.0 + d - x) * p_[i] * tc - q_[i] * tp;
                        tp = tc;
                        tc = next;
                    }
                }
            }
        }
        const cplx w = (2.0 / kPi) * acc;
        if (std::abs(w.imag()) >= kImagResidue)
            throw guard_error("wigner sum has imaginary residue " +
                              std::to_string(w.imag()) + "; density matrix not Hermitian?");
        return w.real();
    }

private:
    const Eigen::MatrixXcd* rho_;
    int n_max_;
    std::vector<double> t0_;
    std::vector<std::size_t> offset_;
    std::vector<double> p_, q_;
};

// Running coherent-amplitude inner product <gamma|psi> without allocations.
cplx coherent_projection(const FieldState& state, cplx gamma) {
    cplx coeff = std::exp(-0.5 * std::norm(gamma));
    const cplx gc = std::conj(gamma);
    cplx acc = coeff * state.amp(0);
    for (int n = 1; n <= state.n_max(); ++n) {
        coeff *= gc / std::sqrt(static_cast<double>(n));
        acc += coeff * state.amp(n);
    }
    return acc;
}

} // namespace

GridSpec GridSpec::square(double half_width, double step) {
    return GridSpec{-half_width, half_width, -half_width, half_width, step};
}

void GridSpec::validate() const {
    if (!(step > 0.0)) throw config_error("grid step must be > 0");
    if (re_max < re_min || im_max < im_min)
        throw config_error("grid ranges must have max >= min");
}

int GridSpec::nx() const {
    return static_cast<int>(std::llround((re_max - re_min) / step)) + 1;
}

int GridSpec::ny() const {
    return static_cast<int>(std::llround((im_max - im_min) / step)) + 1;
}

std::size_t GridSpec::points() const {
    return static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny());
}

PhaseSpaceGrid::PhaseSpaceGrid(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    spec_.validate();
    if (values_.size() != spec_.points())
        throw config_error("grid value count does not match the grid dimensions");
}

double PhaseSpaceGrid::at(int iy, int ix) const {
    return values_[static_cast<std::size_t>(iy) * static_cast<std::size_t>(spec_.nx()) +
                   static_cast<std::size_t>(ix)];
}

double PhaseSpaceGrid::min_value() const {
    double m = values_[0];
    for (double v : values_) m = std::min(m, v);
    return m;
}

double PhaseSpaceGrid::max_value() const {
    double m = values_[0];
    for (double v : values_) m = std::max(m, v);
    return m;
}

double PhaseSpaceGrid::integral() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s * spec_.step * spec_.step;
}

cplx wigner_dyad(cplx coeff, cplx ket_center, cplx bra_center, cplx gamma) {
    const cplx mu = ket_center, nu = bra_center;
    const cplx expo = -2.0 * std::norm(gamma) + 2.0 * std::conj(gamma) * mu +
                      2.0 * std::conj(nu) * gamma - std::conj(nu) * mu -
                      0.5 * (std::norm(mu) + std::norm(nu));
    return coeff * (2.0 / kPi) * std::exp(expo);
}

double wigner(const DensityMatrix& rho, cplx gamma) {
    return WignerKernel(rho).eval(gamma);
}

double wigner(const CoherentSuperposition& s, cplx gamma) {
    const double n2 = s.norm_squared();
    if (!(n2 > 0.0)) throw guard_error("zero-norm superposition");
    cplx acc(0.0, 0.0);
    for (const auto& a : s.terms())
        for (const auto& b : s.terms())
            acc += wigner_dyad(a.weight * std::conj(b.weight), a.center, b.center, gamma);
    acc /= n2;
    if (std::abs(acc.imag()) >= kImagResidue)
        throw guard_error("dyad wigner sum has imaginary residue " +
                          std::to_string(acc.imag()));
    return acc.real();
}

double q_function(const FieldState& state, cplx gamma) {
    return std::norm(coherent_projection(state, gamma)) / kPi;
}

double q_function(const CoherentSuperposition& s, cplx gamma) {
    const double n2 = s.norm_squared();
    if (!(n2 > 0.0)) throw guard_error("zero-norm superposition");
    cplx a(0.0, 0.0);
    for (const auto& t : s.terms()) a += t.weight * coherent_overlap(gamma, t.center);
    return std::norm(a) / (kPi * n2);
}

double q_function(const DensityMatrix& rho, cplx gamma) {
    const int dim = rho.n_max() + 1;
    Eigen::VectorXcd v(dim);
    cplx coeff = std::exp(-0.5 * std::norm(gamma));
    v(0) = coeff;
    for (int n = 1; n < dim; ++n) {
        coeff *= gamma / std::sqrt(static_cast<double>(n));
        v(n) = coeff;
    }
    const cplx q = (v.adjoint() * rho.elems() * v)(0, 0);
    return q.real() / kPi;
}

PhaseSpaceGrid evaluate_grid(const std::function<double(cplx)>& f, const GridSpec& spec,
                             int threads) {
    spec.validate();
    if (spec.points() > kMaxGridPoints)
        throw guard_error("grid has " + std::to_string(spec.points()) +
                          " points; resource guard is 4e6");
    const int nx = spec.nx(), ny = spec.ny();
    std::vector<double> values(spec.points());

    const int workers = std::min(resolve_threads(threads), ny);
    std::atomic<int> next_row{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;

    auto run = [&]() {
        try {
            for (;;) {
                const int iy = next_row.fetch_add(1);
                if (iy >= ny) break;
                const double y = spec.im_min + iy * spec.step;
                double* row = values.data() + static_cast<std::size_t>(iy) * nx;
                for (int ix = 0; ix < nx; ++ix)
                    row[ix] = f(cplx(spec.re_min + ix * spec.step, y));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return PhaseSpaceGrid(spec, std::move(values));
}

PhaseSpaceGrid wigner_grid(const DensityMatrix& rho, const GridSpec& spec, int threads) {
    WignerKernel kernel(rho);
    return evaluate_grid([&kernel](cplx g) { return kernel.eval(g); }, spec, threads);
}

PhaseSpaceGrid wigner_grid(const CoherentSuperposition& s, const GridSpec& spec,
                           int threads) {
    const CoherentSuperposition sn = s.normalized();
    return evaluate_grid([&sn](cplx g) { return wigner(sn, g); }, spec, threads);
}

PhaseSpaceGrid q_grid(const FieldState& state, const GridSpec& spec, int threads) {
    return evaluate_grid([&state](cplx g) { return q_function(state, g); }, spec, threads);
}

PhaseSpaceGrid q_grid(const CoherentSuperposition& s, const GridSpec& spec, int threads) {
    const CoherentSuperposition sn = s.normalized();
    return evaluate_grid([&sn](cplx g) { return q_function(sn, g); }, spec, threads);
}

PhaseSpaceGrid q_grid(const DensityMatrix& rho, const GridSpec& spec, int threads) {
    return evaluate_grid([&rho](cplx g) { return q_function(rho, g); }, spec, threads);
}

int components_above(const PhaseSpaceGrid& grid, double threshold) {
    const int nx = grid.spec().nx(), ny = grid.spec().ny();
    std::vector<char> seen(grid.values().size(), 0);
    auto idx = [nx](int iy, int ix) {
        return static_cast<std::size_t>(iy) * nx + static_cast<std::size_t>(ix);
    };
    int count = 0;
    std::queue<std::pair<int, int>> frontier;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            if (seen[idx(iy, ix)] || !(grid.at(iy, ix) > threshold)) continue;
            ++count;
            seen[idx(iy, ix)] = 1;
            frontier.emplace(iy, ix);
            while (!frontier.empty()) {
                auto [cy, cx] = frontier.front();
                frontier.pop();
                const int dy[4] = {1, -1, 0, 0};
                const int dx[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ny2 = cy + dy[k], nx2 = cx + dx[k];
                    if (ny2 < 0 || ny2 >= ny || nx2 < 0 || nx2 >= nx) continue;
                    if (seen[idx(ny2, nx2)] || !(grid.at(ny2, nx2) > threshold)) continue;
                    seen[idx(ny2, nx2)] = 1;
                    frontier.emplace(ny2, nx2);
                }
            }
        }
    }
    return count;
}

QZero q_zero_closed_form(int n1, int n2) {
    if (n2 < 1 || n1 <= n2)
        throw config_error("q_zero_closed_form needs n1 > n2 >= 1");
    if (3 * n2 - n1 + 1 <= 0)
        throw config_error("q_zero_closed_form needs 3 n2 - n1 + 1 > 0 (got " +
                           std::to_string(3 * n2 - n1 + 1) + ", degenerate |gamma|)");
    QZero z;
    z.n1 = n1;
    z.n2 = n2;
    z.alpha_prime = std::sqrt(2.0 * (n1 - n2));
    z.gamma_mag = kPi * (3.0 * n2 - n1 + 1.0) / (2.0 * std::sqrt(static_cast<double>(n1 - n2)));
    z.ray_angle = kPi / 4.0;
    return z;
}

std::vector<double> q_zero_scan(const CoherentSuperposition& s, double ray_angle,
                                double r_max) {
    if (!(r_max > 0.0)) throw config_error("r_max must be > 0");
    const CoherentSuperposition sn = s.normalized();
    const cplx dir = std::polar(1.0, -ray_angle);  // multiplies centers in conj(gamma)*mu

    auto amplitude = [&](double r) {
        cplx a(0.0, 0.0);
        for (const auto& t : sn.terms())
            a += t.weight *
                 std::exp(cplx(-0.5 * r * r - 0.5 * std::norm(t.center), 0.0) + r * dir * t.center);
        return a;
    };
    auto slope = [&](double r) {  // d|A|^2/dr
        cplx a(0.0, 0.0), da(0.0, 0.0);
        for (const auto& t : sn.terms()) {
            const cplx e =
                t.weight *
                std::exp(cplx(-0.5 * r * r - 0.5 * std::norm(t.center), 0.0) + r * dir * t.center);
            a += e;
            da += (dir * t.center - r) * e;
        }
        return 2.0 * (std::conj(a) * da).real();
    };

    constexpr double kMeshStep = 0.01;
    constexpr double kAccept = 1e-20;
    std::vector<double> mesh;
    for (double r = kMeshStep; r < r_max + 0.5 * kMeshStep; r += kMeshStep)
        mesh.push_back(std::min(r, r_max));
    if (mesh.empty()) return {};

    std::vector<double> mags(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) mags[i] = std::norm(amplitude(mesh[i]));

    std::vector<double> roots;
    auto refine = [&](double lo, double hi) {
        // Strict signs: an underflowed-|A|^2 plateau is not a zero crossing.
        double flo = slope(lo), fhi = slope(hi);
        if (!(flo < 0.0 && fhi > 0.0)) return;
        for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = slope(mid);
            if (fm <= 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        const double r = 0.5 * (lo + hi);
        if (std::norm(amplitude(r)) < kAccept) {
            if (roots.empty() || std::abs(roots.back() - r) > 1e-9) roots.push_back(r);
        }
    };

    // Only bracketed interior minima qualify; a decaying tail against the
    // r_max boundary is not a zero, just an exponentially small amplitude.
    for (std::size_t i = 1; i + 1 < mesh.size(); ++i)
        if (mags[i] <= mags[i - 1] && mags[i] <= mags[i + 1] &&
            (mags[i] < mags[i - 1] || mags[i] < mags[i + 1]))
            refine(mesh[i - 1], mesh[i + 1]);

    return roots;
}

} // namespace mesocat
