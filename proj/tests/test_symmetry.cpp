#include <cmath>
#include <numbers>

#include "doctest.h"
#include "riccati3d/riccati.hpp"
#include "riccati3d/solutions.hpp"
#include "riccati3d/symmetry.hpp"

using namespace riccati3d;

namespace {

ScalarField sfield(std::function<Complex(const Point3&)> f) { return {std::move(f), BoxDomain::all_space()}; }

Point3 inversion(const Point3& p) { return p / dot(p, p); }

double vec_dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

}  // namespace

TEST_CASE("generator coefficients") {
    const auto a9 = vhat_apply(GeneratorParams::single(9), {0.3, -1.0, 2.0}, {1.0, 2.0, 3.0});
    CHECK(a9 == std::array<double, 6>{1, 0, 0, 0, 0, 0});
    const auto a5 = vhat_apply(GeneratorParams::single(5), {0.3, -1.0, 2.0}, {1.0, 2.0, 3.0});
    CHECK(a5 == std::array<double, 6>{0.3, -1.0, 2.0, -1.0, -2.0, -3.0});
    const auto a3 = vhat_apply(GeneratorParams::single(3), {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0});
    for (int i = 0; i < 6; ++i) CHECK(a3[static_cast<std::size_t>(i)] == doctest::Approx(std::array<double, 6>{2, 2, -1, 0, 0, 1}[static_cast<std::size_t>(i)]));
}

TEST_CASE("determining equation") {
    const Point3 p{0.7, -0.4, 1.1};
    const ScalarField q1 = sfield([](const Point3& x) { return Complex(x.y * x.y + x.z); });
    CHECK(std::abs(determining_residual(GeneratorParams::single(9), q1, p)) < 1e-8);
    const ScalarField q6 = sfield([](const Point3& x) { return Complex(1.0 / (x.x * x.x + x.y * x.y)); });
    CHECK(std::abs(determining_residual(GeneratorParams::single(5), q6, p)) < 1e-8);
    const ScalarField qx = sfield([](const Point3& x) { return Complex(x.x); });
    CHECK(determining_residual(GeneratorParams::single(9), qx, p) == doctest::Approx(-1.0).epsilon(1e-8));
    const ScalarField qc = sfield([](const Point3& x) { return Complex(x.x, 1.0); });
    CHECK_THROWS_AS(determining_residual(GeneratorParams::single(9), qc, p), NonRealPotential);
}

TEST_CASE("invariant potentials from the table") {
    const Point3 p{0.6, 0.8, 1.2};
    const ScalarField q6 = invariant_potential(6, [](double, double rho) { return 1.0 / (rho * rho); });
    CHECK(std::abs(q6(p) - 1.0) < 1e-14);
    const ScalarField q7 = invariant_potential(7, [](double, double) { return 1.0; });
    CHECK(std::abs(q7(p) - 1.0 / 0.36) < 1e-13);
    CHECK(std::abs(determining_residual(GeneratorParams::single(5), q7, p)) < 1e-9);
    const double C1 = 2.0;
    const ScalarField q10 = invariant_potential(10, [C1](double, double) { return C1 * C1 / 4.0; });
    const double r2 = dot(p, p);
    CHECK(std::abs(q10(p) - std::pow(C1 / (2.0 * r2), 2)) < 1e-14);
    CHECK_THROWS_AS(q7({0.0, 1.0, 1.0}), DomainError);
    // Each potential satisfies the determining equation of its own row.
    for (int k = 1; k <= 10; ++k) {
        const ScalarField q = invariant_potential(k, [](double s, double t) { return 1.0 + s * s + 0.5 * t; });
        CHECK(std::abs(determining_residual(table_generator(k), q, {0.9, 0.7, 1.3})) < 1e-8);
    }
}

TEST_CASE("group actions on points and fields") {
    const Point3 p{0.3, -0.2, 0.9};
    const Vec3 Q{1.0, -2.0, 0.5};
    const GroupImage g7 = group_act({7, std::log(2.0)}, p, Q);
    CHECK(vec_dist(g7.x, 2.0 * p) < 1e-15);
    CHECK(vec_dist(g7.Q, 0.5 * Q) < 1e-15);
    const GroupImage g1 = group_act({1, 1.0}, p, Q);
    CHECK(vec_dist(g1.x, p + Vec3{1, 0, 0}) == 0.0);
    CHECK(vec_dist(g1.Q, Q) == 0.0);
    const GroupImage g4 = group_act({4, std::numbers::pi / 2.0}, {5, 1, 0}, {0, 1, 0});
    CHECK(vec_dist(g4.x, {5, 0, -1}) < 1e-15);
    CHECK(vec_dist(g4.Q, {0, 0, -1}) < 1e-15);
}

TEST_CASE("conical point action is inversion, translation, inversion") {
    for (int k = 8; k <= 10; ++k) {
        const Vec3 e = unit_vector(k - 8);
        for (const Point3 p : {Point3{0.3, -0.2, 0.9}, Point3{1.5, 0.7, -0.4}}) {
            const double lambda = 0.17;
            const Point3 oracle = inversion(inversion(p) - lambda * e);
            CHECK(vec_dist(group_act_point({k, lambda}, p), oracle) < 1e-14);
        }
    }
}

TEST_CASE("conical action on its axis and at a pole") {
    // On the moving axis the image point stays on the axis: x_i / (1 - lambda x_i).
    const Point3 on_axis{0.0, 0.0, 0.8};
    const Point3 img = group_act_point({10, 0.25}, on_axis);
    CHECK(vec_dist(img, {0.0, 0.0, 0.8 / 0.8}) < 1e-15);
    CHECK_THROWS_AS(group_act({8, 0.5}, {2.0, 0.0, 0.0}, {0, 0, 0}), PoleError);
}

TEST_CASE("transported solutions") {
    const CatalogSolution rot = rotational(RotationalParams{});
    const Point3 p{2.0, 0.4, 0.3};
    const VectorField t1 = transport_solution({1, 0.2}, rot.inst.Q);
    CHECK(max_abs(t1(p) - rot.inst.Q(p - Vec3{0.2, 0, 0})) < 1e-15);
    const double l = 0.3;
    const VectorField t7 = transport_solution({7, l}, rot.inst.Q);
    CHECK(max_abs(t7(p) - std::exp(-l) * rot.inst.Q(std::exp(-l) * p)) < 1e-15);

    const VectorField t6 = transport_solution({6, 0.3}, rot.inst.Q);
    CHECK(riccati_residual({t6, rot.inst.q}, p).max_abs() < 1e-5);
    // q = k^2/rho^2 is also invariant under the conical group along z, so this transport is a solution too.
    const VectorField t10 = transport_solution({10, 0.05}, rot.inst.Q);
    CHECK(riccati_residual({t10, rot.inst.q}, p).max_abs() < 1e-5);
    // A translation along x is not a symmetry of this potential.
    CHECK(riccati_residual({t1, rot.inst.q}, p).max_abs() > 1e-2);
}

TEST_CASE("transport agrees with the pushforward; the printed conical formulas do not") {
    ConicalParams cp;
    cp.C1 = 2.0;
    const CatalogSolution con = conical(cp);
    const Point3 p{0.9, 0.6, 1.1};
    for (int k = 1; k <= 10; ++k) {
        const GroupElement g{k, k >= 8 ? 0.05 : 0.2};
        const VectorField t = transport_solution(g, con.inst.Q);
        const VectorField f = pushforward_solution(g, con.inst.Q);
        CHECK(max_abs(t(p) - f(p)) < 1e-10);
    }
    const VectorField printed = transport_solution({8, 0.05}, con.inst.Q, TransportFormula::AsPrinted);
    const VectorField f8 = pushforward_solution({8, 0.05}, con.inst.Q);
    CHECK(max_abs(printed(p) - f8(p)) > 1e-6);
}

TEST_CASE("inverse group element") {
    const Point3 p{0.3, -0.2, 0.9};
    const Vec3 Q{1.0, -2.0, 0.5};
    for (int k = 1; k <= 10; ++k) {
        const GroupElement g{k, 0.07};
        const GroupImage a = group_act(g, p, Q);
        const GroupImage b = group_act(g.inverse(), a.x, a.Q);
        CHECK(vec_dist(b.x, p) < 1e-13);
        CHECK(vec_dist(b.Q, Q) < 1e-13);
    }
}
