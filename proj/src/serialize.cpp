#include "mesocat/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace mesocat {

using nlohmann::json;

nlohmann::json to_json(const FieldState& state) {
    json j;
    j["n_max"] = state.n_max();
    json re = json::array(), im = json::array();
    for (const auto& a : state.amps()) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

FieldState field_state_from_json(const json& j) {
    if (!j.contains("n_max") || !j.contains("re") || !j.contains("im"))
        throw config_error("state JSON needs fields n_max, re, im");
    const int n_max = j.at("n_max").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    if (re.size() != dim || im.size() != dim)
        throw config_error("state JSON arrays must have n_max+1 entries");
    std::vector<cplx> amps(dim);
    for (std::size_t n = 0; n < dim; ++n)
        amps[n] = cplx(re.at(n).get<double>(), im.at(n).get<double>());
    return FieldState(std::move(amps));
}

nlohmann::json to_json(const DensityMatrix& rho) {
    json j;
    const int dim = rho.n_max() + 1;
    j["n_max"] = rho.n_max();
    json re = json::array(), im = json::array();
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            re.push_back(rho.elems()(m, n).real());
            im.push_back(rho.elems()(m, n).imag());
        }
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

DensityMatrix density_from_json(const json& j) {
    if (!j.contains("n_max") || !j.contains("re") || !j.contains("im"))
        throw config_error("density JSON needs fields n_max, re, im");
    const int n_max = j.at("n_max").get<int>();
    const int dim = n_max + 1;
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != static_cast<std::size_t>(dim) * dim ||
        im.size() != static_cast<std::size_t>(dim) * dim)
        throw config_error("density JSON arrays must have (n_max+1)^2 entries (row-major)");
    Eigen::MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * dim + c;
            m(r, c) = cplx(re.at(i).get<double>(), im.at(i).get<double>());
        }
    return DensityMatrix(std::move(m));
}

nlohmann::json to_json(const PhaseSpaceGrid& grid) {
    json j;
    j["re_range"] = {grid.spec().re_min, grid.spec().re_max};
    j["im_range"] = {grid.spec().im_min, grid.spec().im_max};
    j["step"] = grid.spec().step;
    json rows = json::array();
    for (int iy = 0; iy < grid.spec().ny(); ++iy) {
        json row = json::array();
        for (int ix = 0; ix < grid.spec().nx(); ++ix) row.push_back(grid.at(iy, ix));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j;
}

PhaseSpaceGrid grid_from_json(const json& j) {
    for (const char* key : {"re_range", "im_range", "step", "values"})
        if (!j.contains(key))
            throw config_error(std::string("grid JSON needs field ") + key);
    GridSpec spec;
    spec.re_min = j.at("re_range").at(0).get<double>();
    spec.re_max = j.at("re_range").at(1).get<double>();
    spec.im_min = j.at("im_range").at(0).get<double>();
    spec.im_max = j.at("im_range").at(1).get<double>();
    spec.step = j.at("step").get<double>();
    spec.validate();
    std::vector<double> values;
    values.reserve(spec.points());
    const auto& rows = j.at("values");
    if (rows.size() != static_cast<std::size_t>(spec.ny()))
        throw config_error("grid JSON row count does not match im_range/step");
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(spec.nx()))
            throw config_error("grid JSON column count does not match re_range/step");
        for (const auto& v : row) values.push_back(v.get<double>());
    }
    return PhaseSpaceGrid(spec, std::move(values));
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw guard_error("failed to format a double");
    return std::string(buf, ptr);
}

std::string grid_csv(const PhaseSpaceGrid& grid) {
    std::string out = "x,y,value\n";
    out.reserve(grid.values().size() * 24 + 16);
    for (int iy = 0; iy < grid.spec().ny(); ++iy) {
        const std::string y = format_double(grid.y_at(iy));
        for (int ix = 0; ix < grid.spec().nx(); ++ix) {
            out += format_double(grid.x_at(ix));
            out += ',';
            out += y;
            out += ',';
            out += format_double(grid.at(iy, ix));
            out += '\n';
        }
    }
    return out;
}

std::string scan_csv(const ProbeScan& scan) {
    std::string out = "phi,pg\n";
    for (std::size_t i = 0; i < scan.phis.size(); ++i) {
        out += format_double(scan.phis[i]);
        out += ',';
        out += format_double(scan.probs[i]);
        out += '\n';
    }
    return out;
}

double parse_pi_multiple(const std::string& text) {
    std::string t = text;
    // trim
    const auto first = t.find_first_not_of(" \t");
    const auto last = t.find_last_not_of(" \t");
    if (first == std::string::npos) throw config_error("empty interaction time");
    t = t.substr(first, last - first + 1);

    bool pi = false;
    if (t.size() >= 2 && (t.ends_with("pi") || t.ends_with("PI") || t.ends_with("Pi"))) {
        pi = true;
        t = t.substr(0, t.size() - 2);
        if (t.empty()) t = "1";
        if (t == "-" || t == "+") t += "1";
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw config_error("trailing characters in time '" + text + "'");
        return pi ? v * std::numbers::pi : v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error("cannot parse time '" + text + "' (expected e.g. 3.7pi or 1.25)");
    }
}

std::vector<double> parse_pi_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_pi_multiple(item));
    if (out.empty()) throw config_error("empty time list");
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open for writing: " + path.string());
    f << content;
    if (!f) throw config_error("short write: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open: " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace mesocat
