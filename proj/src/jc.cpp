#include "mesocat/jc.hpp"

#include <cmath>

namespace mesocat {

namespace {
constexpr double kZeroNormThreshold = 1e-14;
}

ApproxParams ApproxParams::from(double gt, double nbar) {
    if (!(nbar > 0.0)) throw config_error("nbar must be > 0");
    return ApproxParams{gt * std::sqrt(nbar) / 2.0, gt / (2.0 * std::sqrt(nbar)), nbar};
}

ProjectionResult project_atom(const FieldState& state, const AtomPassage& passage) {
    if (!std::isfinite(passage.gt) || passage.gt < 0.0)
        throw config_error("gt must be finite and >= 0");

    const int n_max = state.n_max();
    std::vector<cplx> out;
    double prob = 0.0;

    if (passage.detected == Detected::ground) {
        out.resize(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            const double c = std::cos(passage.gt * std::sqrt(static_cast<double>(n)));
            out[static_cast<std::size_t>(n)] = state.amp(n) * c;
            prob += std::norm(out[static_cast<std::size_t>(n)]);
        }
    } else {
        out.assign(static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
        for (int n = 1; n <= n_max; ++n) {
            const double s = std::sin(passage.gt * std::sqrt(static_cast<double>(n)));
            out[static_cast<std::size_t>(n) - 1] = cplx(0.0, -1.0) * s * state.amp(n);
            prob += std::norm(out[static_cast<std::size_t>(n) - 1]);
        }
    }

    if (prob < kZeroNormThreshold)
        throw zero_norm_projection("conditional detection probability " +
                                   std::to_string(prob) + " below 1e-14");

    FieldState projected{std::move(out)};
    return ProjectionResult{projected.normalized(), prob};
}

BranchProbabilities detection_probabilities(const FieldState& state, double gt) {
    if (!std::isfinite(gt) || gt < 0.0) throw config_error("gt must be finite and >= 0");
    BranchProbabilities p;
    for (int n = 0; n <= state.n_max(); ++n) {
        const double phase = gt * std::sqrt(static_cast<double>(n));
        const double w = std::norm(state.amp(n));
        const double c = std::cos(phase);
        const double s = std::sin(phase);
        p.ground += w * c * c;
        p.excited += w * s * s;
    }
    return p;
}

SequenceResult multi_atom_sequence(cplx alpha, const std::vector<AtomPassage>& passages,
                                   int n_max) {
    if (passages.empty()) throw config_error("need at least one passage");
    for (const auto& p : passages)
        if (p.detected != Detected::ground)
            throw config_error("multi_atom_sequence expects ground detections only");
    if (n_max < 0) n_max = default_n_max(alpha);

    FieldState st = coherent_state(alpha, n_max);
    double joint = 1.0;
    std::vector<double> conditionals;
    conditionals.reserve(passages.size());
    for (const auto& p : passages) {
        auto r = project_atom(st, p);
        st = std::move(r.state);
        joint *= r.success_prob;
        conditionals.push_back(r.success_prob);
    }
    return SequenceResult{std::move(st), joint, std::move(conditionals)};
}

double sqrt_expansion(int n, double nbar) {
    if (!(nbar > 0.0)) throw config_error("nbar must be > 0");
    const double dn = static_cast<double>(n) - nbar;
    const double rt = std::sqrt(nbar);
    return rt + dn / (2.0 * rt) - dn * dn / (8.0 * nbar * rt);
}

CoherentSuperposition approximate_superposition(cplx alpha, const std::vector<double>& gts) {
    if (std::abs(alpha) <= 0.0) throw config_error("|alpha| must be > 0");
    if (gts.empty()) throw config_error("need at least one interaction time");
    const double nbar = std::norm(alpha);
    const std::size_t n_atoms = gts.size();
    if (n_atoms > 20) throw config_error("too many passages for 2^N expansion");

    std::vector<ApproxParams> params;
    params.reserve(n_atoms);
    for (double gt : gts) params.push_back(ApproxParams::from(gt, nbar));

    const double weight_mag = std::pow(2.0, -static_cast<double>(n_atoms));
    std::vector<CoherentSuperposition::Term> terms;
    terms.reserve(std::size_t{1} << n_atoms);
    for (std::size_t bits = 0; bits < (std::size_t{1} << n_atoms); ++bits) {
        double eta_sum = 0.0, theta_sum = 0.0;
        for (std::size_t k = 0; k < n_atoms; ++k) {
            const double sgn = (bits >> k) & 1 ? 1.0 : -1.0;
            eta_sum += sgn * params[k].eta;
            theta_sum += sgn * params[k].theta;
        }
        terms.push_back({std::polar(weight_mag, eta_sum), alpha * std::polar(1.0, theta_sum)});
    }
    return CoherentSuperposition(std::move(terms));
}

CoherentSuperposition four_component_superposition(double alpha_prime, double eta1,
                                                   double eta2) {
    if (!(alpha_prime > 0.0)) throw config_error("alpha_prime must be > 0");
    const double a = alpha_prime;
    std::vector<CoherentSuperposition::Term> terms = {
        {0.25 * std::polar(1.0, -(eta1 - eta2)), cplx(a, 0.0)},
        {0.25 * std::polar(1.0, eta1 + eta2), cplx(-a, 0.0)},
        {0.25 * std::polar(1.0, eta1 - eta2), cplx(0.0, a)},
        {0.25 * std::polar(1.0, -(eta1 + eta2)), cplx(0.0, -a)},
    };
    return CoherentSuperposition(std::move(terms));
}

double fidelity_exact_vs_approx(cplx alpha, const std::vector<double>& gts, int n_max) {
    if (n_max < 0) n_max = default_n_max(alpha);
    std::vector<AtomPassage> passages;
    passages.reserve(gts.size());
    for (double gt : gts) passages.push_back({gt, Detected::ground});
    const FieldState exact = multi_atom_sequence(alpha, passages, n_max).state;
    const CoherentSuperposition approx = approximate_superposition(alpha, gts).normalized();
    return std::norm(overlap(exact, approx));
}

} // namespace mesocat
