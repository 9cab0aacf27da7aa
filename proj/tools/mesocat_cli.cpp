// Command-line front end: prepare cavity states, render phase-space grids,
// run the probe-phase scan, the Q-zero analysis, damping snapshots, and the
// acceptance suite. Exit codes: 0 ok, 2 config error, 3 numerical guard,
// 4 acceptance failure.

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "mesocat/accept.hpp"
#include "mesocat/decoherence.hpp"
#include "mesocat/homodyne.hpp"
#include "mesocat/jc.hpp"
#include "mesocat/phase_space.hpp"
#include "mesocat/serialize.hpp"

namespace {

using namespace mesocat;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;

struct GlobalOptions {
    int threads = 0;
    int n_max = -1;
    long long seed = 0;  // reserved; no stochastic paths exist today
};

struct LoadedState {
    FieldState state = FieldState::vacuum(0);
    json meta;  // may be null
};

LoadedState load_state(const std::string& path) {
    const json j = json::parse(read_text_file(path));
    LoadedState out{field_state_from_json(j), j.contains("meta") ? j.at("meta") : json()};
    return out;
}

std::optional<cplx> meta_alpha(const json& meta) {
    if (meta.is_object() && meta.contains("alpha_re") && meta.contains("alpha_im"))
        return cplx(meta.at("alpha_re").get<double>(), meta.at("alpha_im").get<double>());
    return std::nullopt;
}

std::optional<std::vector<double>> meta_gts(const json& meta) {
    if (meta.is_object() && meta.contains("gts"))
        return meta.at("gts").get<std::vector<double>>();
    return std::nullopt;
}

double max_center(const CoherentSuperposition& s) {
    double m = 0.0;
    for (const auto& t : s.terms()) m = std::max(m, std::abs(t.center));
    return m;
}

int cmd_prepare(const GlobalOptions& global, double alpha_mag, const std::string& alpha_phase,
                const std::string& gts_text, const std::string& out_path) {
    if (alpha_mag < 0.0) throw config_error("--alpha is a magnitude; use --alpha-phase");
    const double phase = parse_pi_multiple(alpha_phase);
    const cplx alpha = std::polar(alpha_mag, phase);
    const std::vector<double> gts = parse_pi_list(gts_text);

    std::vector<AtomPassage> passages;
    for (double gt : gts) passages.push_back({gt, Detected::ground});
    const SequenceResult result = multi_atom_sequence(alpha, passages, global.n_max);

    json j = to_json(result.state);
    j["meta"] = {{"alpha_re", alpha.real()},
                 {"alpha_im", alpha.imag()},
                 {"alpha_mag", alpha_mag},
                 {"alpha_phase", phase},
                 {"gts", gts},
                 {"n_max", result.state.n_max()},
                 {"joint_prob", result.joint_prob},
                 {"conditional_probs", result.conditional_probs}};
    std::string fid_note = "n/a (vacuum input)";
    if (alpha_mag > 0.0) {
        // The coherent approximation is undefined at nbar = 0.
        const double approx_fid = fidelity_exact_vs_approx(alpha, gts, global.n_max);
        j["meta"]["fidelity_exact_vs_approx"] = approx_fid;
        fid_note = format_double(approx_fid);
    }
    write_text_file(out_path, j.dump(2) + "\n");

    std::cout << "wrote " << out_path << " (n_max " << result.state.n_max()
              << ", joint detection probability " << format_double(result.joint_prob)
              << ", fidelity vs coherent approximation " << fid_note << ")\n";
    return 0;
}

GridSpec build_spec(double window, double step, const std::vector<double>& explicit_range) {
    if (!explicit_range.empty()) {
        if (explicit_range.size() != 4)
            throw config_error("--range needs re_min,re_max,im_min,im_max");
        return GridSpec{explicit_range[0], explicit_range[1], explicit_range[2],
                        explicit_range[3], step};
    }
    return GridSpec::square(window, step);
}

int cmd_grid(const GlobalOptions& global, bool wigner_mode, const std::string& state_path,
             double window, double step, const std::vector<double>& range, bool approx,
             double kappa_t, const std::string& out_path, const std::string& json_path) {
    const LoadedState loaded = load_state(state_path);

    std::optional<PhaseSpaceGrid> grid;
    if (approx) {
        const auto alpha = meta_alpha(loaded.meta);
        const auto gts = meta_gts(loaded.meta);
        if (!alpha || !gts)
            throw config_error("--approx needs a state file with alpha/gts metadata");
        const CoherentSuperposition s = approximate_superposition(*alpha, *gts);
        const double auto_window = max_center(s) + (wigner_mode ? 2.5 : 3.6);
        const GridSpec spec = build_spec(window > 0.0 ? window : auto_window, step, range);
        if (kappa_t >= 0.0) {
            const DyadSum damped = damp_superposition(s, kappa_t).trace_normalized();
            grid = wigner_mode ? wigner_grid(damped, spec, global.threads)
                               : q_grid(damped, spec, global.threads);
        } else {
            grid = wigner_mode ? wigner_grid(s, spec, global.threads)
                               : q_grid(s, spec, global.threads);
        }
    } else {
        if (kappa_t >= 0.0)
            throw config_error("--kappa-t damps the coherent approximation; add --approx "
                               "(the exact state decoheres via the 'decohere --exact' path)");
        const double auto_window = std::sqrt(loaded.state.mean_photon()) + (wigner_mode ? 2.5 : 3.6);
        const GridSpec spec = build_spec(window > 0.0 ? window : auto_window, step, range);
        if (wigner_mode) {
            // Keep the kernel guard |gamma| < sqrt(n_max) satisfied at the corners.
            const double corner = std::max({std::hypot(spec.re_min, spec.im_min),
                                            std::hypot(spec.re_min, spec.im_max),
                                            std::hypot(spec.re_max, spec.im_min),
                                            std::hypot(spec.re_max, spec.im_max)});
            const int needed = static_cast<int>(std::ceil(corner * corner)) + 10;
            const FieldState work = needed > loaded.state.n_max()
                                        ? loaded.state.embedded(needed)
                                        : loaded.state;
            grid = wigner_grid(to_density(work), spec, global.threads);
        } else {
            grid = q_grid(loaded.state, spec, global.threads);
        }
    }

    write_text_file(out_path, grid_csv(*grid));
    if (!json_path.empty()) write_text_file(json_path, to_json(*grid).dump() + "\n");
    std::cout << "wrote " << out_path << " (" << grid->spec().nx() << "x" << grid->spec().ny()
              << ", min " << format_double(grid->min_value()) << ", max "
              << format_double(grid->max_value()) << ", integral "
              << format_double(grid->integral()) << ")\n";
    return 0;
}

int cmd_scan(const GlobalOptions& global, const std::string& state_path, double beta_mag,
             const std::string& gtp_text, int n_phi, double prominence,
             const std::string& out_path) {
    if (n_phi < 64) throw config_error("--nphi must be >= 64 for peak extraction");
    const LoadedState loaded = load_state(state_path);
    if (beta_mag <= 0.0) {
        const auto alpha = meta_alpha(loaded.meta);
        if (!alpha)
            throw config_error("no --beta-mag given and the state has no alpha metadata");
        beta_mag = std::abs(*alpha);
    }
    const double gt_p = parse_pi_multiple(gtp_text);
    const ProbeScan scan = phase_scan(loaded.state, beta_mag, gt_p, n_phi, global.threads);
    write_text_file(out_path, scan_csv(scan));

    const auto peaks = find_peaks(scan, prominence);
    std::cout << "wrote " << out_path << "; " << peaks.size() << " peak(s) at prominence >= "
              << format_double(prominence) << " of range\n";
    for (const auto& p : peaks)
        std::cout << "  peak phi " << format_double(p.phi) << " rad  ("
                  << format_double(p.phi / kPi) << " pi)  P_g " << format_double(p.prob)
                  << "\n";

    // Branch comparison table when the preparation parameters are known.
    const auto alpha = meta_alpha(loaded.meta);
    const auto gts = meta_gts(loaded.meta);
    if (alpha && gts && !gts->empty() && gts->size() <= 12) {
        std::cout << "  expected peak angles (branch centroid + pi | first-order theta sum + pi):\n";
        const auto c = coherent_amplitudes(*alpha, loaded.state.n_max());
        const double nbar = std::norm(*alpha);
        const std::size_t count = std::size_t{1} << gts->size();
        for (std::size_t bits = 0; bits < count; ++bits) {
            double t_sum = 0.0, theta_sum = 0.0;
            for (std::size_t k = 0; k < gts->size(); ++k) {
                const double sgn = (bits >> k) & 1 ? 1.0 : -1.0;
                t_sum += sgn * (*gts)[k];
                theta_sum += sgn * (*gts)[k] / (2.0 * std::sqrt(nbar));
            }
            std::vector<cplx> amps(c.size());
            for (std::size_t n = 0; n < c.size(); ++n)
                amps[n] = c[n] * std::polar(1.0, t_sum * std::sqrt(static_cast<double>(n)));
            const FieldState branch = FieldState(std::move(amps)).normalized();
            cplx centroid(0.0, 0.0);
            for (int n = 0; n + 1 <= branch.n_max(); ++n)
                centroid += std::conj(branch.amp(n)) * std::sqrt(n + 1.0) * branch.amp(n + 1);
            auto wrap = [](double v) {
                v = std::fmod(v, 2.0 * kPi);
                return v < 0.0 ? v + 2.0 * kPi : v;
            };
            std::cout << "    " << format_double(wrap(std::arg(centroid) + kPi)) << " | "
                      << format_double(wrap(std::arg(*alpha) + theta_sum + kPi)) << "\n";
        }
    }
    return 0;
}

int cmd_qzeros(int n1, int n2, double alpha_prime, const std::string& ray_text, double r_max,
               const std::string& out_path) {
    std::ostringstream report;
    if (n1 > 0 || n2 > 0) {
        const QZero z = q_zero_closed_form(n1, n2);
        const double a2 = z.alpha_prime * z.alpha_prime;
        const CoherentSuperposition s =
            four_component_superposition(z.alpha_prime, kPi * a2 / 2.0, kPi * a2 / 4.0);
        const double limit = r_max > 0.0 ? r_max : z.gamma_mag + 2.0;
        const auto roots = q_zero_scan(s, z.ray_angle, limit);
        report << "closed form (n1=" << z.n1 << ", n2=" << z.n2
               << "): alpha' = " << format_double(z.alpha_prime) << ", |gamma| = "
               << format_double(z.gamma_mag) << " on the pi/4 ray\n";
        report << "numerical roots in (0, " << format_double(limit) << "]:\n";
        double best = std::numeric_limits<double>::infinity();
        for (double r : roots) {
            best = std::min(best, std::abs(r - z.gamma_mag));
            report << "  r = " << format_double(r) << "  (|r - prediction| = "
                   << format_double(std::abs(r - z.gamma_mag)) << ")\n";
        }
        report << "nearest root differs from the closed form by "
               << (roots.empty() ? "n/a" : format_double(best)) << "\n";
    } else if (alpha_prime > 0.0) {
        const double ray = parse_pi_multiple(ray_text);
        const double a2 = alpha_prime * alpha_prime;
        const CoherentSuperposition s =
            four_component_superposition(alpha_prime, kPi * a2 / 2.0, kPi * a2 / 4.0);
        const double limit = r_max > 0.0 ? r_max : 3.0 * alpha_prime + 3.0;
        const auto roots = q_zero_scan(s, ray, limit);
        report << "scan of the four-component state, alpha' = " << format_double(alpha_prime)
               << ", ray angle " << format_double(ray) << " rad\n";
        if (roots.empty()) report << "  no zeros in (0, " << format_double(limit) << "]\n";
        for (double r : roots) report << "  r = " << format_double(r) << "\n";
    } else {
        throw config_error("qzeros needs either --n1/--n2 or --alpha-prime");
    }
    std::cout << report.str();
    if (!out_path.empty()) write_text_file(out_path, report.str());
    return 0;
}

struct Contrast {
    double central = 0.0;
    double adjacent = 0.0;
};

Contrast wigner_contrast(const DyadSum& d) {
    Contrast out;
    {
        const GridSpec spec = GridSpec::square(0.7, 0.02);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int iy = 0; iy < spec.ny(); ++iy) {
            for (int ix = 0; ix < spec.nx(); ++ix) {
                const cplx g(spec.re_min + ix * spec.step, spec.im_min + iy * spec.step);
                if (std::abs(g) > 0.7) continue;
                const double w = wigner(d, g);
                lo = std::min(lo, w);
                hi = std::max(hi, w);
            }
        }
        out.central = hi - lo;
    }
    {
        // Fringe band between the two adjacent components closest in angle.
        std::vector<cplx> centers;
        for (const auto& dy : d.dyads())
            if (std::abs(dy.ket_center - dy.bra_center) < 1e-12)
                centers.push_back(dy.ket_center);
        std::sort(centers.begin(), centers.end(), [](cplx a, cplx b) {
            return std::arg(a) < std::arg(b);
        });
        if (centers.size() >= 2) {
            const cplx mid = 0.5 * (centers[0] + centers[1]);
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            const GridSpec spec{mid.real() - 0.7, mid.real() + 0.7, mid.imag() - 0.7,
                                mid.imag() + 0.7, 0.02};
            for (int iy = 0; iy < spec.ny(); ++iy) {
                for (int ix = 0; ix < spec.nx(); ++ix) {
                    const cplx g(spec.re_min + ix * spec.step, spec.im_min + iy * spec.step);
                    const double w = wigner(d, g);
                    lo = std::min(lo, w);
                    hi = std::max(hi, w);
                }
            }
            out.adjacent = hi - lo;
        }
    }
    return out;
}

int cmd_decohere(const GlobalOptions& global, double alpha_mag, const std::string& alpha_phase,
                 const std::string& gts_text, double alpha_prime,
                 const std::string& kappa_list, double grid_window, double grid_step,
                 bool exact, const std::string& out_prefix) {
    CoherentSuperposition s;
    std::optional<cplx> alpha;
    std::vector<double> gts;
    if (alpha_prime > 0.0) {
        const double a2 = alpha_prime * alpha_prime;
        s = four_component_superposition(alpha_prime, kPi * a2 / 2.0, kPi * a2 / 4.0);
    } else {
        alpha = std::polar(alpha_mag, parse_pi_multiple(alpha_phase));
        gts = parse_pi_list(gts_text);
        s = approximate_superposition(*alpha, gts);
    }

    std::vector<double> kts;
    {
        std::stringstream ss(kappa_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                kts.push_back(v);
            } catch (const std::exception&) {
                throw config_error("cannot parse kappa_t value '" + item + "'");
            }
        }
        if (kts.empty()) throw config_error("empty --kappa-t list");
    }

    json summary;
    summary["snapshots"] = json::array();
    for (const double kt : kts) {
        if (kt < 0.0) throw config_error("kappa_t must be >= 0");
        const DyadSum damped = damp_superposition(s, kt).trace_normalized();
        const Contrast contrast = wigner_contrast(damped);
        summary["snapshots"].push_back({{"kappa_t", kt},
                                        {"trace", damped.trace().real()},
                                        {"purity", damped.purity()},
                                        {"central_contrast", contrast.central},
                                        {"adjacent_contrast", contrast.adjacent}});
        std::cout << "kappa_t " << format_double(kt) << ": purity "
                  << format_double(damped.purity()) << ", central contrast "
                  << format_double(contrast.central) << ", adjacent contrast "
                  << format_double(contrast.adjacent) << "\n";
        if (grid_window > 0.0) {
            const PhaseSpaceGrid grid = wigner_grid(
                damped, GridSpec::square(grid_window, grid_step), global.threads);
            write_text_file(out_prefix + "_kt" + format_double(kt) + ".csv", grid_csv(grid));
        }
    }

    if (exact) {
        if (!alpha)
            throw config_error("--exact needs --alpha/--gts (Lindblad on the prepared state)");
        std::vector<AtomPassage> passages;
        for (double gt : gts) passages.push_back({gt, Detected::ground});
        const FieldState prepared = multi_atom_sequence(*alpha, passages, global.n_max).state;
        const DensityMatrix rho0 = to_density(prepared);
        summary["lindblad_exact"] = json::array();
        for (const double kt : kts) {
            const DensityMatrix rho =
                lindblad_evolve(rho0, kt, lindblad_steps(kt, rho0.n_max()));
            summary["lindblad_exact"].push_back({{"kappa_t", kt},
                                                 {"trace", rho.trace().real()},
                                                 {"purity", rho.purity()}});
        }
    }

    const std::string summary_path = out_prefix + "_summary.json";
    write_text_file(summary_path, summary.dump(2) + "\n");
    std::cout << "wrote " << summary_path << "\n";
    return 0;
}

int cmd_accept(const GlobalOptions& global, const std::string& out_dir) {
    AcceptOptions options;
    options.out_dir = out_dir;
    options.threads = global.threads;
    const auto results = run_acceptance(options, std::cout);
    if (!all_passed(results)) {
        std::cout << "acceptance: FAIL\n";
        return 4;
    }
    std::cout << "acceptance: PASS (" << results.size() << " criteria)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonant-cavity mesoscopic-superposition simulator"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--threads", global.threads, "worker threads for grids/scans (0 = auto)");
    app.add_option("--nmax", global.n_max, "Fock truncation override");
    app.add_option("--seed", global.seed, "reserved; no stochastic paths exist today");

    // prepare
    double p_alpha = 0.0;
    std::string p_phase = "0", p_gts, p_out = "state.json";
    auto* prepare = app.add_subcommand("prepare", "run atom passages on a coherent field");
    prepare->add_option("--alpha", p_alpha, "|alpha| of the initial coherent field")->required();
    prepare->add_option("--alpha-phase", p_phase, "phase of alpha (radians or e.g. 0.25pi)");
    prepare->add_option("--gts", p_gts, "interaction times, e.g. 3.7pi,1.9pi")->required();
    prepare->add_option("--out", p_out, "output state JSON");
    prepare->fallthrough();

    // wigner / qfunc
    struct GridArgs {
        std::string state, out, json_out;
        double window = 0.0, step = 0.05, kappa_t = -1.0;
        std::vector<double> range;
        bool approx = false;
    } wargs, qargs;
    auto add_grid_options = [](CLI::App* sub, GridArgs& args, const char* default_out) {
        args.out = default_out;
        sub->add_option("--state", args.state, "state JSON from 'prepare'")->required();
        sub->add_option("--window", args.window, "half-width of a square grid (0 = auto)");
        sub->add_option("--step", args.step, "grid step");
        sub->add_option("--range", args.range,
                        "re_min,re_max,im_min,im_max (overrides --window)")
            ->delimiter(',')
            ->expected(4);
        sub->add_flag("--approx", args.approx, "render the coherent-superposition approximation");
        sub->add_option("--kappa-t", args.kappa_t,
                        "damp the approximation for this scaled time (needs --approx)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--out", args.out, "output CSV");
        sub->add_option("--json", args.json_out, "also write the grid JSON document");
        sub->fallthrough();
    };
    auto* wigner_cmd = app.add_subcommand("wigner", "Wigner distribution on a grid");
    add_grid_options(wigner_cmd, wargs, "wigner.csv");
    auto* qfunc_cmd = app.add_subcommand("qfunc", "Husimi Q distribution on a grid");
    add_grid_options(qfunc_cmd, qargs, "qfunc.csv");

    // scan
    std::string s_state, s_gtp = "1.5pi", s_out = "scan.csv";
    double s_beta = -1.0, s_prom = 0.25;
    int s_nphi = 720;
    auto* scan_cmd = app.add_subcommand("scan", "probe-atom detection probability vs phase");
    scan_cmd->add_option("--state", s_state, "state JSON from 'prepare'")->required();
    scan_cmd->add_option("--beta-mag", s_beta, "reference amplitude (default |alpha| from metadata)");
    scan_cmd->add_option("--gtp", s_gtp, "probe interaction time (default 1.5pi)");
    scan_cmd->add_option("--nphi", s_nphi, "number of phase samples");
    scan_cmd->add_option("--prominence", s_prom, "peak prominence threshold as a fraction of range");
    scan_cmd->add_option("--out", s_out, "output CSV (phi,pg)");
    scan_cmd->fallthrough();

    // qzeros
    int z_n1 = -1, z_n2 = -1;
    double z_ap = -1.0, z_rmax = 0.0;
    std::string z_ray = "0.25pi", z_out;
    auto* qzeros_cmd = app.add_subcommand("qzeros", "closed-form and scanned zeros of Q");
    qzeros_cmd->add_option("--n1", z_n1, "first integer of the closed form");
    qzeros_cmd->add_option("--n2", z_n2, "second integer of the closed form");
    qzeros_cmd->add_option("--alpha-prime", z_ap, "scan a four-component state directly");
    qzeros_cmd->add_option("--ray", z_ray, "ray angle for --alpha-prime mode (default 0.25pi)");
    qzeros_cmd->add_option("--rmax", z_rmax, "scan limit (0 = auto)");
    qzeros_cmd->add_option("--out", z_out, "also write the report to a file");
    qzeros_cmd->fallthrough();

    // decohere
    double d_alpha = 4.0, d_ap = -1.0, d_window = 0.0, d_step = 0.05;
    std::string d_phase = "0", d_gts = "3.7pi,1.9pi", d_kts, d_out = "decohere";
    bool d_exact = false;
    auto* decohere_cmd = app.add_subcommand("decohere", "cavity damping of the superposition");
    decohere_cmd->add_option("--alpha", d_alpha, "|alpha| of the preparation");
    decohere_cmd->add_option("--alpha-phase", d_phase, "phase of alpha");
    auto* d_gts_opt =
        decohere_cmd->add_option("--gts", d_gts, "interaction times of the preparation");
    decohere_cmd
        ->add_option("--alpha-prime", d_ap,
                     "damp the canonical four-component state instead")
        ->excludes(d_gts_opt);
    decohere_cmd->add_option("--kappa-t", d_kts, "comma list of scaled times kappa*t")->required();
    decohere_cmd->add_option("--grid-window", d_window, "write a Wigner grid per time (half-width)");
    decohere_cmd->add_option("--grid-step", d_step, "grid step for --grid-window");
    decohere_cmd->add_flag("--exact", d_exact, "also evolve the exact prepared state numerically");
    decohere_cmd->add_option("--out", d_out, "output prefix");
    decohere_cmd->fallthrough();

    // accept
    std::string a_out = "accept_out";
    auto* accept_cmd = app.add_subcommand("accept", "run the acceptance suite");
    accept_cmd->add_option("--out", a_out, "artifact directory");
    accept_cmd->fallthrough();

    try {
        app.parse(argc, argv);
        if (prepare->parsed())
            return cmd_prepare(global, p_alpha, p_phase, p_gts, p_out);
        if (wigner_cmd->parsed())
            return cmd_grid(global, true, wargs.state, wargs.window, wargs.step, wargs.range,
                            wargs.approx, wargs.kappa_t, wargs.out, wargs.json_out);
        if (qfunc_cmd->parsed())
            return cmd_grid(global, false, qargs.state, qargs.window, qargs.step, qargs.range,
                            qargs.approx, qargs.kappa_t, qargs.out, qargs.json_out);
        if (scan_cmd->parsed())
            return cmd_scan(global, s_state, s_beta, s_gtp, s_nphi, s_prom, s_out);
        if (qzeros_cmd->parsed())
            return cmd_qzeros(z_n1, z_n2, z_ap, z_ray, z_rmax, z_out);
        if (decohere_cmd->parsed())
            return cmd_decohere(global, d_alpha, d_phase, d_gts, d_ap, d_kts, d_window, d_step,
                                d_exact, d_out);
        if (accept_cmd->parsed()) return cmd_accept(global, a_out);
        throw config_error("no subcommand given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "numerical guard: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
