#include "mesocat/homodyne.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

namespace mesocat {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNormDrift = 1e-8;

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}
} // namespace

FieldState inject_field(const FieldState& state, cplx beta) {
    if (beta == cplx(0.0, 0.0)) return state;
    const int dim = state.n_max() + 1;
    Eigen::VectorXcd v(dim);
    for (int n = 0; n < dim; ++n) v(n) = state.amp(n);
    const Eigen::VectorXcd y = displacement_matrix(state.n_max(), beta) * v;
    const double n_in = v.norm(), n_out = y.norm();
    if (std::abs(n_out - n_in) > kNormDrift * std::max(1.0, n_in)) {
        const double nbar = state.mean_photon();
        const int suggest = static_cast<int>(
            std::ceil(std::pow(std::sqrt(nbar) + std::abs(beta) + 2.8, 2.0)));
        throw guard_error("truncation inadequate for injection: norm drifted from " +
                          std::to_string(n_in) + " to " + std::to_string(n_out) +
                          "; embed the state to n_max >= " + std::to_string(suggest));
    }
    std::vector<cplx> out(static_cast<std::size_t>(dim));
    for (int n = 0; n < dim; ++n) out[static_cast<std::size_t>(n)] = y(n);
    return FieldState(std::move(out));
}

double probe_probability(const FieldState& state, double gt_p) {
    double p = 0.0;
    for (int m = 0; m <= state.n_max(); ++m)
        p += std::norm(state.amp(m)) *
             std::pow(std::cos(gt_p * std::sqrt(static_cast<double>(m))), 2.0);
    return p;
}

ProbeScan phase_scan(const FieldState& prepared, double beta_mag, double gt_p, int n_phi,
                     int threads) {
    if (!(beta_mag > 0.0)) throw config_error("beta_mag must be > 0");
    if (n_phi < 1) throw config_error("n_phi must be >= 1");

    const double nbar = prepared.mean_photon();
    const int needed = static_cast<int>(std::ceil(std::pow(std::sqrt(nbar) + beta_mag + 2.8, 2.0)));
    const FieldState work =
        needed > prepared.n_max() ? prepared.embedded(needed) : prepared;

    ProbeScan scan;
    scan.beta_mag = beta_mag;
    scan.gt_p = gt_p;
    scan.phis.resize(static_cast<std::size_t>(n_phi));
    scan.probs.resize(static_cast<std::size_t>(n_phi));
    for (int j = 0; j < n_phi; ++j)
        scan.phis[static_cast<std::size_t>(j)] = 2.0 * kPi * j / n_phi;

    std::atomic<int> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    auto run = [&]() {
        try {
            for (;;) {
                const int j = next.fetch_add(1);
                if (j >= n_phi) break;
                const cplx beta = std::polar(beta_mag, scan.phis[static_cast<std::size_t>(j)]);
                scan.probs[static_cast<std::size_t>(j)] =
                    probe_probability(inject_field(work, beta), gt_p);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    const int workers = std::min(resolve_threads(threads), n_phi);
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return scan;
}

std::vector<Peak> find_peaks(const ProbeScan& scan, double prominence_frac) {
    const int n = static_cast<int>(scan.probs.size());
    if (n < 64) throw config_error("find_peaks needs at least 64 scan points");

    // Circular 5-sample moving average.
    std::vector<double> smooth(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = -2; k <= 2; ++k) s += scan.probs[static_cast<std::size_t>((i + k + n) % n)];
        smooth[static_cast<std::size_t>(i)] = s / 5.0;
    }

    const double smax = *std::max_element(smooth.begin(), smooth.end());
    const double smin = *std::min_element(smooth.begin(), smooth.end());
    const double threshold = prominence_frac * (smax - smin);

    std::vector<Peak> peaks;
    for (int i = 0; i < n; ++i) {
        const double v = smooth[static_cast<std::size_t>(i)];
        const double left = smooth[static_cast<std::size_t>((i - 1 + n) % n)];
        const double right = smooth[static_cast<std::size_t>((i + 1) % n)];
        if (!(v > left && v > right)) continue;

        // Topographic prominence on the circle: min on each side until a
        // strictly higher sample appears; no higher sample means the walk
        // returns and the reference is the global minimum.
        double saddle = smin;
        bool found_higher = false;
        for (int side = 0; side < 2; ++side) {
            const int stride = side == 0 ? -1 : 1;
            double path_min = v;
            for (int step = 1; step < n; ++step) {
                const double w = smooth[static_cast<std::size_t>((i + stride * step + n) % n)];
                if (w > v) {
                    saddle = std::max(saddle, path_min);
                    found_higher = true;
                    break;
                }
                path_min = std::min(path_min, w);
            }
        }
        const double prominence = found_higher ? v - saddle : v - smin;
        if (prominence >= threshold && prominence > 0.0)
            peaks.push_back({scan.phis[static_cast<std::size_t>(i)],
                             scan.probs[static_cast<std::size_t>(i)]});
    }

    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.prob != b.prob) return a.prob > b.prob;
        return a.phi < b.phi;
    });
    return peaks;
}

} // namespace mesocat
