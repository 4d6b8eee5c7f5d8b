#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "riccati3d/errors.hpp"
#include "riccati3d/export.hpp"
#include "riccati3d/verify.hpp"

using namespace riccati3d;
using nlohmann::json;

TEST_CASE("config keys") {
    RunConfig c;
    c.set("h", "1e-3");
    c.set("order", "2");
    c.set("seed", "42");
    c.set("tol.riccati", "1e-7");
    CHECK(c.scheme.h == 1e-3);
    CHECK(c.scheme.order == 2);
    CHECK(c.seed == 42);
    CHECK(c.tolerances.at("riccati") == 1e-7);
    CHECK_THROWS_AS(c.set("order", "3"), ConfigError);
    CHECK_THROWS_AS(c.set("h", "-1"), ConfigError);
    CHECK_THROWS_AS(c.set("h", "abc"), ConfigError);
    CHECK_THROWS_AS(c.set("no_such_key", "1"), ConfigError);
    CHECK_THROWS_AS(c.set("tol.riccati", "nan"), ConfigError);
    CHECK_THROWS_AS(run_suite("no_such_suite", c), ConfigError);
}

TEST_CASE("config file") {
    const std::string path = "test_export_verify.cfg";
    {
        std::ofstream out(path);
        out << "# comment\nsamples = 12\n\nmargin=0.2  # trailing\n";
    }
    RunConfig c;
    c.load_file(path);
    CHECK(c.samples == 12);
    CHECK(c.margin == 0.2);
    CHECK_THROWS_AS(c.load_file("does/not/exist.cfg"), ConfigError);
    {
        std::ofstream out(path);
        out << "samples\n";
    }
    CHECK_THROWS_AS(c.load_file(path), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("tolerance override reaches the report") {
    RunConfig c;
    c.set("tol.operators/dirac_squared", "1e-12");
    c.set("tol.operators", "1e-4");
    const VerificationReport r = run_suite("operators", c);
    const CheckResult* d = r.find("operators/dirac_squared");
    REQUIRE(d != nullptr);
    // The full name wins over the short key.
    CHECK(d->tolerance == 1e-12);
    CHECK(r.find("operators/leibniz")->tolerance == 1e-4);
    CHECK(std::stod(r.config_echo.at("tol.operators/dirac_squared")) == 1e-12);
    CHECK(r.config_echo.at("suite") == "operators");
}

TEST_CASE("report JSON is sorted and stable") {
    RunConfig c;
    const VerificationReport r = run_suite("algebra", c);
    CHECK(r.overall_pass);
    const std::string text = r.to_json(false);
    const json j = json::parse(text);
    REQUIRE(j["checks"].is_array());
    std::vector<std::string> names;
    for (const auto& check : j["checks"]) {
        names.push_back(check["name"].get<std::string>());
        CHECK_FALSE(check.contains("seconds"));
        CHECK(check["pass"].get<bool>());
    }
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(j["overall_pass"].get<bool>());
    CHECK(run_suite("algebra", c).to_json(false) == text);
    CHECK(r.to_table().find("OVERALL PASS") != std::string::npos);
}

TEST_CASE("a failing check fails the report") {
    RunConfig c;
    c.set("tol.operators/dirac_squared", "1e-300");
    const VerificationReport r = run_suite("operators", c);
    CHECK_FALSE(r.find("operators/dirac_squared")->pass);
    CHECK_FALSE(r.overall_pass);
    CHECK(r.to_table().find("OVERALL FAIL") != std::string::npos);
}

TEST_CASE("grid parsing") {
    const Grid g = Grid::parse("0,1,3,0,0,1,-1,1,2");
    CHECK(g.size() == 6);
    const auto pts = g.points();
    CHECK(pts[0].x == 0.0);
    CHECK(pts[0].z == -1.0);
    CHECK(pts[1].z == 1.0);
    CHECK(pts[2].x == 0.5);
    CHECK(pts[5].x == 1.0);
    CHECK_THROWS_AS(Grid::parse("0,1,3"), ConfigError);
    CHECK_THROWS_AS(Grid::parse("0,1,0,0,1,1,0,1,1"), ConfigError);
    CHECK_THROWS_AS(Grid::parse("1,0,2,0,1,1,0,1,1"), ConfigError);
    CHECK_THROWS_AS(Grid::parse("a,1,2,0,1,1,0,1,1"), ConfigError);
}

TEST_CASE("evaluation on a grid with masking") {
    const CatalogSolution rot = rotational(RotationalParams{});
    // The x = 1 slice hits the excluded cylinder.
    const Grid g = Grid::parse("1,2,3,0,0,1,0,1,2");
    const GridTable t = evaluate_on_grid(rot, g, {"Q", "q", "residuals"});
    CHECK(t.rows.size() == 6);
    CHECK(t.masked_count() == 2);
    CHECK(t.column_max("Re_resid_sc") < 1e-6);
    const std::string csv = t.to_csv();
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("x,y,z,Re_u,Im_u", 0) == 0);
    CHECK(header.substr(header.size() - 7) == ",masked");
    const json j = json::parse(t.to_json());
    CHECK(j.size() == 6);
    CHECK(j[0]["Re_u"].is_null());
    CHECK(j[0]["masked"] == 1);
    // Row at (2, 0, 0): u = -5/6.
    CHECK(j[4]["Re_u"].get<double>() == doctest::Approx(-5.0 / 6.0).epsilon(1e-12));
    CHECK(j[4]["masked"] == 0);
    CHECK_THROWS_AS(evaluate_on_grid(rot, g, {"psi"}), ConfigError);
    CHECK_THROWS_AS(evaluate_on_grid(rot, g, {"velocity"}), ConfigError);
}

TEST_CASE("transform on a grid") {
    const CatalogSolution rot = rotational(RotationalParams{});
    const Grid g = Grid::parse("1.5,2.5,3,0.2,0.6,2,-0.5,0.5,2");
    const TransformSummary s = transform_on_grid(rot, {6, 0.4}, g);
    CHECK(s.max_residual < 1e-5);
    CHECK(s.max_discrepancy < 1e-8);
    CHECK_FALSE(s.max_printed_discrepancy.has_value());
    CHECK_THROWS_AS(transform_on_grid(rot, {8, 0.05}, g), PreconditionError);
    CHECK(invariance_defect(rot.inst.q, 3) < 1e-9);
    CHECK(invariance_defect(rot.inst.q, 1) > 1e-3);
}

TEST_CASE("grid must lie inside the domain box") {
    const BoxDomain box({-1, -1, -1}, {1, 1, 1});
    CHECK_NOTHROW(require_grid_inside(Grid::parse("-1,1,2,-1,1,2,-1,1,2"), box));
    CHECK_THROWS_AS(require_grid_inside(Grid::parse("-1,2,2,-1,1,2,-1,1,2"), box), DomainError);
}
