#ifndef MESOCAT_SERIALIZE_HPP
#define MESOCAT_SERIALIZE_HPP

// File formats: states and density matrices as {n_max, re[], im[]} JSON
// (row-major for matrices), grids as "x,y,value" CSV or
// {re_range, im_range, step, values} JSON, probe scans as "phi,pg" CSV.
// Interaction times parse as pi multiples ("3.7pi") or plain radians.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mesocat/fock.hpp"
#include "mesocat/homodyne.hpp"
#include "mesocat/phase_space.hpp"

namespace mesocat {

nlohmann::json to_json(const FieldState& state);
FieldState field_state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PhaseSpaceGrid& grid);
PhaseSpaceGrid grid_from_json(const nlohmann::json& j);

// Shortest round-trip decimal rendering (deterministic).
std::string format_double(double v);

std::string grid_csv(const PhaseSpaceGrid& grid);
std::string scan_csv(const ProbeScan& scan);

double parse_pi_multiple(const std::string& text);
std::vector<double> parse_pi_list(const std::string& text);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

} // namespace mesocat

#endif
