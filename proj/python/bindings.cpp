// Python module exposing the main operations.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mesocat/decoherence.hpp"
#include "mesocat/homodyne.hpp"
#include "mesocat/jc.hpp"
#include "mesocat/phase_space.hpp"
#include "mesocat/serialize.hpp"

namespace py = pybind11;
using namespace mesocat;

namespace {

Eigen::MatrixXd grid_values(const PhaseSpaceGrid& g) {
    Eigen::MatrixXd m(g.spec().ny(), g.spec().nx());
    for (int iy = 0; iy < g.spec().ny(); ++iy)
        for (int ix = 0; ix < g.spec().nx(); ++ix) m(iy, ix) = g.at(iy, ix);
    return m;
}

CoherentSuperposition make_superposition(const std::vector<std::pair<cplx, cplx>>& terms) {
    std::vector<CoherentSuperposition::Term> t;
    t.reserve(terms.size());
    for (const auto& [w, c] : terms) t.push_back({w, c});
    return CoherentSuperposition(std::move(t));
}

} // namespace

PYBIND11_MODULE(_mesocat, m) {
    m.doc() = "resonant-cavity mesoscopic-superposition simulator";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);

    py::class_<FieldState>(m, "FieldState")
        .def(py::init<std::vector<cplx>>())
        .def_property_readonly("n_max", &FieldState::n_max)
        .def_property_readonly("amps", [](const FieldState& s) { return s.amps(); })
        .def("norm", &FieldState::norm)
        .def("normalized", &FieldState::normalized)
        .def("embedded", &FieldState::embedded)
        .def("mean_photon", &FieldState::mean_photon)
        .def("tail_mass", &FieldState::tail_mass)
        .def_static("vacuum", &FieldState::vacuum);

    py::class_<CoherentSuperposition>(m, "CoherentSuperposition")
        .def(py::init(&make_superposition), py::arg("terms"),
             "terms: list of (weight, center) complex pairs")
        .def_property_readonly("terms",
                               [](const CoherentSuperposition& s) {
                                   std::vector<std::pair<cplx, cplx>> out;
                                   for (const auto& t : s.terms())
                                       out.emplace_back(t.weight, t.center);
                                   return out;
                               })
        .def("norm", &CoherentSuperposition::norm)
        .def("norm_squared", &CoherentSuperposition::norm_squared)
        .def("normalized", &CoherentSuperposition::normalized);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<Eigen::MatrixXcd>())
        .def_property_readonly("n_max", &DensityMatrix::n_max)
        .def_property_readonly("elems", [](const DensityMatrix& r) { return r.elems(); })
        .def("trace", &DensityMatrix::trace)
        .def("trace_normalized", &DensityMatrix::trace_normalized)
        .def("purity", &DensityMatrix::purity)
        .def("hermiticity_defect", &DensityMatrix::hermiticity_defect)
        .def("min_eigenvalue", &DensityMatrix::min_eigenvalue);

    m.def("default_n_max", py::overload_cast<cplx>(&default_n_max));
    m.def("coherent_state", &coherent_state, py::arg("alpha"), py::arg("n_max"));
    m.def("coherent_amplitudes", &coherent_amplitudes);
    m.def("displacement_element", &displacement_element);
    m.def("displacement_matrix", &displacement_matrix);
    m.def("coherent_overlap", &coherent_overlap);
    m.def("overlap",
          py::overload_cast<const FieldState&, const FieldState&>(&overlap));
    m.def("overlap",
          py::overload_cast<const FieldState&, const CoherentSuperposition&>(&overlap));
    m.def("overlap",
          py::overload_cast<const CoherentSuperposition&, const FieldState&>(&overlap));
    m.def("overlap", py::overload_cast<const CoherentSuperposition&,
                                       const CoherentSuperposition&>(&overlap));
    m.def("to_density", &to_density);
    m.def("to_field_state", &to_field_state);
    m.def("superposition_to_density", &superposition_to_density);
    m.def("fidelity", py::overload_cast<const FieldState&, const FieldState&>(&fidelity));
    m.def("fidelity", py::overload_cast<const DensityMatrix&, const FieldState&>(&fidelity));

    py::enum_<Detected>(m, "Detected")
        .value("ground", Detected::ground)
        .value("excited", Detected::excited);

    py::class_<AtomPassage>(m, "AtomPassage")
        .def(py::init([](double gt, Detected detected) {
                 return AtomPassage{gt, detected};
             }),
             py::arg("gt"), py::arg("detected") = Detected::ground)
        .def_readwrite("gt", &AtomPassage::gt)
        .def_readwrite("detected", &AtomPassage::detected);

    py::class_<ApproxParams>(m, "ApproxParams")
        .def_static("from_gt", &ApproxParams::from, py::arg("gt"), py::arg("nbar"))
        .def_readonly("eta", &ApproxParams::eta)
        .def_readonly("theta", &ApproxParams::theta)
        .def_readonly("nbar", &ApproxParams::nbar);

    py::class_<ProjectionResult>(m, "ProjectionResult")
        .def_readonly("state", &ProjectionResult::state)
        .def_readonly("success_prob", &ProjectionResult::success_prob);

    py::class_<BranchProbabilities>(m, "BranchProbabilities")
        .def_readonly("ground", &BranchProbabilities::ground)
        .def_readonly("excited", &BranchProbabilities::excited);

    py::class_<SequenceResult>(m, "SequenceResult")
        .def_readonly("state", &SequenceResult::state)
        .def_readonly("joint_prob", &SequenceResult::joint_prob)
        .def_readonly("conditional_probs", &SequenceResult::conditional_probs);

    m.def("project_atom", &project_atom);
    m.def("detection_probabilities", &detection_probabilities);
    m.def("multi_atom_sequence", &multi_atom_sequence, py::arg("alpha"), py::arg("passages"),
          py::arg("n_max") = -1);
    m.def("sqrt_expansion", &sqrt_expansion);
    m.def("approximate_superposition", &approximate_superposition);
    m.def("four_component_superposition", &four_component_superposition);
    m.def("fidelity_exact_vs_approx", &fidelity_exact_vs_approx, py::arg("alpha"),
          py::arg("gts"), py::arg("n_max") = -1);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double re_min, double re_max, double im_min, double im_max,
                         double step) {
                 return GridSpec{re_min, re_max, im_min, im_max, step};
             }),
             py::arg("re_min"), py::arg("re_max"), py::arg("im_min"), py::arg("im_max"),
             py::arg("step"))
        .def_static("square", &GridSpec::square, py::arg("half_width"), py::arg("step"))
        .def_readonly("re_min", &GridSpec::re_min)
        .def_readonly("re_max", &GridSpec::re_max)
        .def_readonly("im_min", &GridSpec::im_min)
        .def_readonly("im_max", &GridSpec::im_max)
        .def_readonly("step", &GridSpec::step)
        .def("nx", &GridSpec::nx)
        .def("ny", &GridSpec::ny);

    py::class_<PhaseSpaceGrid>(m, "PhaseSpaceGrid")
        .def_property_readonly("spec", &PhaseSpaceGrid::spec)
        .def("values", &grid_values, "values as an (ny, nx) array; rows run over Im(gamma)")
        .def("min_value", &PhaseSpaceGrid::min_value)
        .def("max_value", &PhaseSpaceGrid::max_value)
        .def("integral", &PhaseSpaceGrid::integral);

    m.def("wigner", py::overload_cast<const DensityMatrix&, cplx>(&wigner));
    m.def("wigner", py::overload_cast<const CoherentSuperposition&, cplx>(&wigner));
    m.def("wigner", py::overload_cast<const DyadSum&, cplx>(&wigner));
    m.def("q_function", py::overload_cast<const FieldState&, cplx>(&q_function));
    m.def("q_function", py::overload_cast<const CoherentSuperposition&, cplx>(&q_function));
    m.def("q_function", py::overload_cast<const DensityMatrix&, cplx>(&q_function));
    m.def("q_function", py::overload_cast<const DyadSum&, cplx>(&q_function));

    m.def("wigner_grid",
          py::overload_cast<const DensityMatrix&, const GridSpec&, int>(&wigner_grid),
          py::arg("rho"), py::arg("spec"), py::arg("threads") = 0);
    m.def("wigner_grid",
          py::overload_cast<const CoherentSuperposition&, const GridSpec&, int>(&wigner_grid),
          py::arg("s"), py::arg("spec"), py::arg("threads") = 0);
    m.def("wigner_grid", py::overload_cast<const DyadSum&, const GridSpec&, int>(&wigner_grid),
          py::arg("d"), py::arg("spec"), py::arg("threads") = 0);
    m.def("q_grid", py::overload_cast<const FieldState&, const GridSpec&, int>(&q_grid),
          py::arg("state"), py::arg("spec"), py::arg("threads") = 0);
    m.def("q_grid",
          py::overload_cast<const CoherentSuperposition&, const GridSpec&, int>(&q_grid),
          py::arg("s"), py::arg("spec"), py::arg("threads") = 0);
    m.def("q_grid", py::overload_cast<const DensityMatrix&, const GridSpec&, int>(&q_grid),
          py::arg("rho"), py::arg("spec"), py::arg("threads") = 0);
    m.def("components_above", &components_above);

    py::class_<QZero>(m, "QZero")
        .def_readonly("n1", &QZero::n1)
        .def_readonly("n2", &QZero::n2)
        .def_readonly("gamma_mag", &QZero::gamma_mag)
        .def_readonly("ray_angle", &QZero::ray_angle)
        .def_readonly("alpha_prime", &QZero::alpha_prime);

    m.def("q_zero_closed_form", &q_zero_closed_form);
    m.def("q_zero_scan", &q_zero_scan, py::arg("s"), py::arg("ray_angle"), py::arg("r_max"));

    m.def("inject_field", &inject_field);
    m.def("probe_probability", &probe_probability);

    py::class_<ProbeScan>(m, "ProbeScan")
        .def_readonly("phis", &ProbeScan::phis)
        .def_readonly("probs", &ProbeScan::probs)
        .def_readonly("beta_mag", &ProbeScan::beta_mag)
        .def_readonly("gt_p", &ProbeScan::gt_p);

    py::class_<Peak>(m, "Peak")
        .def_readonly("phi", &Peak::phi)
        .def_readonly("prob", &Peak::prob);

    m.def("phase_scan", &phase_scan, py::arg("prepared"), py::arg("beta_mag"), py::arg("gt_p"),
          py::arg("n_phi"), py::arg("threads") = 0);
    m.def("find_peaks", &find_peaks, py::arg("scan"), py::arg("prominence_frac") = 0.25);

    py::class_<DyadSum>(m, "DyadSum")
        .def_property_readonly("dyads",
                               [](const DyadSum& d) {
                                   std::vector<std::tuple<cplx, cplx, cplx>> out;
                                   for (const auto& dy : d.dyads())
                                       out.emplace_back(dy.coeff, dy.ket_center, dy.bra_center);
                                   return out;
                               })
        .def("trace", &DyadSum::trace)
        .def("trace_normalized", &DyadSum::trace_normalized)
        .def("purity", &DyadSum::purity)
        .def("hermiticity_defect", &DyadSum::hermiticity_defect)
        .def("to_density", &DyadSum::to_density);

    m.def("damp_superposition", &damp_superposition);
    m.def("analytic_decohered_state", &analytic_decohered_state, py::arg("alpha_prime"),
          py::arg("eta1"), py::arg("eta2"), py::arg("kappa_t"));
    m.def("lindblad_evolve", &lindblad_evolve, py::arg("rho0"), py::arg("kappa_t"),
          py::arg("steps"));
    m.def("lindblad_steps", &lindblad_steps);
    m.def("cross_term_wigner", &cross_term_wigner);
    m.def("coherence_magnitude", &coherence_magnitude);

    py::class_<DecayRates>(m, "DecayRates")
        .def_readonly("rate_central", &DecayRates::rate_central)
        .def_readonly("rate_adjacent", &DecayRates::rate_adjacent);

    m.def("decay_rate_diagnostic", &decay_rate_diagnostic);

    m.def("parse_pi_multiple", &parse_pi_multiple);
    m.def("state_to_json", [](const FieldState& s) { return to_json(s).dump(); });
    m.def("state_from_json",
          [](const std::string& text) { return field_state_from_json(nlohmann::json::parse(text)); });
    m.def("grid_csv", &grid_csv);
}
