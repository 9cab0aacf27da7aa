#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mesocat/phase_space.hpp"
#include "mesocat/serialize.hpp"

using namespace mesocat;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("field state JSON round trip is exact") {
    const FieldState st = coherent_state(cplx(1.3, -0.8), 25);
    const nlohmann::json j = to_json(st);
    CHECK(j.at("n_max") == 25);
    CHECK(j.at("re").size() == 26);
    const FieldState back = field_state_from_json(j);
    REQUIRE(back.n_max() == st.n_max());
    for (int n = 0; n <= 25; ++n) CHECK(back.amp(n) == st.amp(n));

    nlohmann::json bad = j;
    bad.erase("im");
    CHECK_THROWS_AS(field_state_from_json(bad), config_error);
    bad = j;
    bad["re"].push_back(0.0);
    CHECK_THROWS_AS(field_state_from_json(bad), config_error);
}

TEST_CASE("density JSON is row-major and round trips") {
    Eigen::MatrixXcd m(2, 2);
    m << cplx(0.5, 0.0), cplx(0.1, 0.2), cplx(0.1, -0.2), cplx(0.5, 0.0);
    const DensityMatrix rho(m);
    const nlohmann::json j = to_json(rho);
    CHECK(j.at("n_max") == 1);
    // Row-major: entry (0,1) sits at flat index 1.
    CHECK(j.at("re").at(1).get<double>() == 0.1);
    CHECK(j.at("im").at(1).get<double>() == 0.2);
    CHECK(j.at("im").at(2).get<double>() == -0.2);
    const DensityMatrix back = density_from_json(j);
    CHECK((back.elems() - rho.elems()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("grid JSON and CSV formats") {
    const GridSpec spec{-1.0, 0.0, 2.0, 3.0, 1.0};
    const PhaseSpaceGrid grid(spec, {0.5, -1.0, 0.25, 2.0});

    const nlohmann::json j = to_json(grid);
    CHECK(j.at("re_range") == nlohmann::json({-1.0, 0.0}));
    CHECK(j.at("im_range") == nlohmann::json({2.0, 3.0}));
    CHECK(j.at("step") == 1.0);
    CHECK(j.at("values").size() == 2);
    const PhaseSpaceGrid back = grid_from_json(j);
    CHECK(back.values() == grid.values());

    CHECK(grid_csv(grid) ==
          "x,y,value\n-1,2,0.5\n0,2,-1\n-1,3,0.25\n0,3,2\n");
}

TEST_CASE("scan CSV format") {
    ProbeScan scan;
    scan.phis = {0.0, 0.5};
    scan.probs = {1.0, 0.25};
    CHECK(scan_csv(scan) == "phi,pg\n0,1\n0.5,0.25\n");
}

TEST_CASE("pi-multiple parsing") {
    CHECK(parse_pi_multiple("3.7pi") == Approx(3.7 * kPi).epsilon(1e-15));
    CHECK(parse_pi_multiple("0pi") == 0.0);
    CHECK(parse_pi_multiple("1.5pi") == Approx(1.5 * kPi));
    CHECK(parse_pi_multiple("pi") == Approx(kPi));
    CHECK(parse_pi_multiple("-pi") == Approx(-kPi));
    CHECK(parse_pi_multiple(" 2.5 ") == 2.5);
    CHECK(parse_pi_multiple("1.25") == 1.25);
    CHECK_THROWS_AS(parse_pi_multiple("abc"), config_error);
    CHECK_THROWS_AS(parse_pi_multiple(""), config_error);
    CHECK_THROWS_AS(parse_pi_multiple("3.7 pi"), config_error);

    const auto list = parse_pi_list("3.7pi,1.9pi");
    REQUIRE(list.size() == 2);
    CHECK(list[0] == Approx(3.7 * kPi));
    CHECK(list[1] == Approx(1.9 * kPi));
    CHECK_THROWS_AS(parse_pi_list(""), config_error);
}

TEST_CASE("double formatting is shortest round trip") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(-1.0) == "-1");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("CSV output is identical across thread counts") {
    const FieldState st = coherent_state(cplx(2.0, 0.0), 40);
    const GridSpec spec = GridSpec::square(3.0, 0.05);
    const std::string a = grid_csv(q_grid(st, spec, 1));
    const std::string b = grid_csv(q_grid(st, spec, 4));
    CHECK(a == b);
}
