#ifndef MESOCAT_JC_HPP
#define MESOCAT_JC_HPP

// Resonant atom passages: conditional field projections, multi-atom
// sequences, and the coherent-superposition approximation of the result.

#include <vector>

#include "mesocat/fock.hpp"

namespace mesocat {

enum class Detected { ground, excited };

struct AtomPassage {
    double gt = 0.0;              // dimensionless coupling * interaction time
    Detected detected = Detected::ground;
};

// First-order phase parameters of one passage around nbar = |alpha|^2.
struct ApproxParams {
    double eta;     // gt * sqrt(nbar) / 2
    double theta;   // gt / (2 sqrt(nbar))
    double nbar;
    static ApproxParams from(double gt, double nbar);
};

struct ProjectionResult {
    FieldState state;        // renormalized conditional state
    double success_prob;     // probability of the requested detection
};

// Project the field after one resonant passage, conditioned on the atomic
// detection. Ground: a_n -> a_n cos(gt sqrt(n)). Excited: one photon is
// absorbed, a'_{n-1} = -i sin(gt sqrt(n)) a_n. Throws zero_norm_projection
// when the requested branch has probability < 1e-14.
ProjectionResult project_atom(const FieldState& state, const AtomPassage& passage);

struct BranchProbabilities {
    double ground = 0.0;
    double excited = 0.0;   // ground + excited = 1 for a normalized input
};

// Detection probabilities of one passage without projecting; defined even
// when a branch has zero probability.
BranchProbabilities detection_probabilities(const FieldState& state, double gt);

struct SequenceResult {
    FieldState state;
    double joint_prob;                      // product of conditional probabilities
    std::vector<double> conditional_probs;  // per passage, in order
};

// Start from |alpha> and apply the passages in order (all ground detections).
// n_max < 0 picks the default truncation rule.
SequenceResult multi_atom_sequence(cplx alpha, const std::vector<AtomPassage>& passages,
                                   int n_max = -1);

// Second-order expansion of sqrt(n) around nbar; diagnostics only, the
// superposition construction uses first order.
double sqrt_expansion(int n, double nbar);

// 2^N-component approximation: weights 2^{-N} e^{i sum s_k eta_k}, centers
// alpha e^{i sum s_k theta_k} over all sign vectors s in {+-1}^N.
CoherentSuperposition approximate_superposition(cplx alpha, const std::vector<double>& gts);

// Canonical four-component superposition with components on the +-real and
// +-imaginary axes (theta_1 = pi/2, theta_2 = pi/4 configuration):
//   (1/4)[ e^{-i(eta1-eta2)}|a'> + e^{i(eta1+eta2)}|-a'>
//        + e^{i(eta1-eta2)}|i a'> + e^{-i(eta1+eta2)}|-i a'> ]
// Term order is fixed: +a', -a', +ia', -ia'.
CoherentSuperposition four_component_superposition(double alpha_prime, double eta1, double eta2);

// |<psi_exact|psi_approx>|^2 with both sides normalized. Reported, never
// asserted against a threshold: the exact state is visibly distorted.
double fidelity_exact_vs_approx(cplx alpha, const std::vector<double>& gts, int n_max = -1);

} // namespace mesocat

#endif
