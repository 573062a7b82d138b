#include "bondsim/config.hpp"
#include "bondsim/materials.hpp"
#include "bondsim/report.hpp"

#include <doctest.h>

using namespace bondsim;

TEST_CASE("areal density of the weighed sample") {
    CHECK(areal_density(0.0002835, 0.15, 0.15) == doctest::Approx(0.0126).epsilon(1e-12));
    CHECK(areal_density(1.0, 1.0, 1.0) == 1.0);
    CHECK(areal_density(0.5, 2.0, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(areal_density(0.0, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(areal_density(1.0, -1.0, 1.0), ValidationError);
}

TEST_CASE("fully-compressed thickness from areal and bulk density") {
    CHECK(min_thickness(0.0126, 900.0) == doctest::Approx(1.4e-5).epsilon(1e-12));
    CHECK(min_thickness(1.0, 1.0) == 1.0);
    CHECK(min_thickness(0.0126, 866.0) == doctest::Approx(1.455e-5).epsilon(1e-3));
    CHECK_THROWS_AS(min_thickness(0.0, 900.0), ValidationError);
}

TEST_CASE("baseline parameters") {
    MaterialParams p = default_params();
    CHECK(p.Cp_fabric == 1800.0);
    CHECK(p.K_steel == 50.0);
    CHECK(p.T_ambient == 20.0);
    CHECK(p.T_max_linear == 90.0);
    CHECK(p.T_max_quadratic == 160.0);
    CHECK(p.w_fabric == 0.0126);
    CHECK(p.h_min == 14e-6);
    CHECK(p.K_fabric == 0.17);
    CHECK(p.T_steel == p.T_ambient);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("validation names the offending field") {
    MaterialParams p = default_params();
    p.Cp_fabric = -1.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("Cp_fabric"), ValidationError);

    p = default_params();
    p.w_fabric = 0.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("w_fabric"), ValidationError);

    p = default_params();
    p.T_ambient = 95.0; // above T_max_linear
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("T_max_linear"), ValidationError);

    p = default_params();
    p.h_max = 1e-6; // below h_min
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("h_min"), ValidationError);
}

TEST_CASE("defaults round-trip through config serialization bit-exactly") {
    MaterialParams p = default_params();
    std::string text = "[materials]\n";
    text += "t_ambient = " + format_value(p.T_ambient) + "\n";
    text += "t_max_linear = " + format_value(p.T_max_linear) + "\n";
    text += "t_max_quadratic = " + format_value(p.T_max_quadratic) + "\n";
    text += "cp_fabric = " + format_value(p.Cp_fabric) + "\n";
    text += "w_fabric = " + format_value(p.w_fabric) + "\n";
    text += "h_min = " + format_value(p.h_min) + "\n";
    text += "h_max = " + format_value(p.h_max) + "\n";
    text += "k_fabric = " + format_value(p.K_fabric) + "\n";
    text += "k_steel = " + format_value(p.K_steel) + "\n";
    text += "t_steel = " + format_value(p.T_steel) + "\n";
    text += "rho_pp = " + format_value(p.rho_pp) + "\n";
    text += "kappa0 = " + format_value(p.kappa0) + "\n";
    MaterialParams q = materials_from_config(Config::parse_string(text));
    CHECK(q.T_ambient == p.T_ambient);
    CHECK(q.T_max_linear == p.T_max_linear);
    CHECK(q.T_max_quadratic == p.T_max_quadratic);
    CHECK(q.Cp_fabric == p.Cp_fabric);
    CHECK(q.w_fabric == p.w_fabric);
    CHECK(q.h_min == p.h_min);
    CHECK(q.h_max == p.h_max);
    CHECK(q.K_fabric == p.K_fabric);
    CHECK(q.K_steel == p.K_steel);
    CHECK(q.T_steel == p.T_steel);
    CHECK(q.rho_pp == p.rho_pp);
    CHECK(q.kappa0 == p.kappa0);
}
