#include <cmath>
#include <numbers>

#include "doctest.h"
#include "riccati3d/integral.hpp"

using namespace riccati3d;

namespace {

VectorField vfield(std::function<Vector3c(const Point3&)> f) { return {std::move(f), BoxDomain::all_space()}; }

}  // namespace

TEST_CASE("line integrals, adaptive and fixed") {
    QuadratureSpec q;
    CHECK(std::abs(integrate_line([](double t) { return Complex(std::cos(t)); }, 0.0, 1.0, q) - std::sin(1.0)) < 1e-10);
    CHECK(std::abs(integrate_line([](double t) { return Complex(t * t); }, 2.0, 0.0, q) + 8.0 / 3.0) < 1e-12);
    q.line_rule = LineRule::GaussLegendre;
    CHECK(std::abs(integrate_line([](double t) { return Complex(std::exp(t)); }, 0.0, 1.0, q) - (std::numbers::e - 1.0)) < 1e-14);
    const GaussRule& g = gauss_legendre(5);
    double w = 0.0;
    for (double v : g.weights) w += v;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive budget exhaustion is reported") {
    QuadratureSpec q;
    q.max_evaluations = 20;
    q.abs_tol = 1e-15;
    CHECK_THROWS_AS(integrate_line([](double t) { return Complex(std::sin(50.0 * t)); }, 0.0, 3.0, q), QuadratureFailure);
}

TEST_CASE("A reconstructs potentials") {
    const auto F = vfield([](const Point3& p) { return Vector3c(p.y * p.z, p.x * p.z, p.x * p.y); });
    const ScalarField A = operator_A(F, {0, 0, 0});
    CHECK(std::abs(A({1.0, 2.0, 3.0}) - 6.0) < 1e-9);
    const auto G = vfield([](const Point3& p) { return Vector3c(2.0 * p.x, 2.0 * p.y, 0.0); });
    const ScalarField B = operator_A(G, {0, 0, 0});
    for (const Point3 p : {Point3{1, 1, 1}, Point3{-2, 0.5, 3}, Point3{0.3, -0.7, 0}}) {
        CHECK(std::abs(B(p) - (p.x * p.x + p.y * p.y)) < 1e-9);
    }
    // The additive constant is the value at the base.
    const ScalarField C = operator_A(G, {1, 0, 0}, Complex(0.0, 2.0));
    CHECK(std::abs(C({1, 0, 0}) - Complex(0.0, 2.0)) == 0.0);
}

TEST_CASE("A refuses paths through excluded points") {
    const BoxDomain d = BoxDomain::all_space().excluding([](const Point3& p) { return std::abs(p.x) < 0.1; });
    const VectorField F{[](const Point3& p) { return Vector3c(-1.0 / p.x, 0.0, 0.0); }, d};
    const ScalarField A = operator_A(F, {1, 0, 0});
    CHECK(std::abs(A({2, 0, 0}) + std::log(2.0)) < 1e-9);
    CHECK_THROWS_AS(A({-1, 0, 0}), DomainError);
}

TEST_CASE("curl defect along the A path") {
    const auto F = vfield([](const Point3& p) { return Vector3c(-p.y, p.x, 0.0); });
    CHECK(path_rot_defect(F, {0, 0, 0}, {1, 1, 1}) == doctest::Approx(2.0).epsilon(1e-6));
    const auto G = vfield([](const Point3& p) { return Vector3c(p.x, p.y, p.z); });
    CHECK(path_rot_defect(G, {0, 0, 0}, {1, 1, 1}) < 1e-8);
}

TEST_CASE("closed-form box potential") {
    // Cube [0,1]^3 seen from a corner: 3 ln((1 + sqrt3)/sqrt2) - pi/4 (known value 1.1900386...).
    const double corner = 3.0 * std::log((1.0 + std::sqrt(3.0)) / std::sqrt(2.0)) - std::numbers::pi / 4.0;
    CHECK(box_newton_potential({0, 0, 0}, {0, 0, 0}, {1, 1, 1}) == doctest::Approx(corner).epsilon(1e-12));
    CHECK(box_newton_potential({0, 0, 0}, {-1, -1, -1}, {1, 1, 1}) == doctest::Approx(8.0 * corner).epsilon(1e-12));
    // Far away the box looks like a point of mass 8.
    CHECK(box_newton_potential({100, 0, 0}, {-1, -1, -1}, {1, 1, 1}) == doctest::Approx(0.08).epsilon(1e-4));
}

TEST_CASE("B of the uniform ball") {
    const auto ball = vfield([](const Point3& y) { return dot(y, y) <= 1.0 ? Vector3c(1.0, 0.0, 0.0) : Vector3c(); });
    const VectorField B = operator_B(ball, BoxDomain({-1, -1, -1}, {1, 1, 1}));
    const double interior = (0.5 - 0.25 / 6.0);  // R^2/2 - r^2/6 at r = 1/2
    CHECK(std::abs(B({0, 0, 0})[0].real() - 0.5) < 0.02 * 0.5);
    CHECK(std::abs(B({0.5, 0, 0})[0].real() - interior) < 0.02 * interior);
    CHECK(std::abs(B({2, 0, 0})[0].real() - 1.0 / 6.0) < 0.02 / 6.0);
    CHECK(std::abs(B({0, 0, 0})[1]) == 0.0);
}

TEST_CASE("B of zero is zero and B needs a bounded region") {
    const VectorField Z = operator_B(zero_vector_field(), BoxDomain({-1, -1, -1}, {1, 1, 1}));
    CHECK(max_abs(Z({0.3, 0.2, 0.1})) == 0.0);
    CHECK_THROWS_AS(operator_B(zero_vector_field(), BoxDomain::all_space()), DomainError);
    QuadratureSpec q;
    q.volume_resolution = 2;
    CHECK_THROWS_AS(operator_B(zero_vector_field(), BoxDomain({-1, -1, -1}, {1, 1, 1}), q), QuadratureFailure);
}

TEST_CASE("B of a constant is exact inside the box and has Laplacian minus the source") {
    QuadratureSpec q;
    q.volume_resolution = 8;
    const Point3 lo{-1, -2, -1}, hi{2, 1, 1};
    const VectorField B = operator_B(vfield([](const Point3&) { return Vector3c(0.0, 2.0, 0.0); }), BoxDomain(lo, hi), q);
    const Point3 p{0.2, -0.4, 0.1};
    CHECK(std::abs(B(p)[1].real() - 2.0 * box_newton_potential(p, lo, hi) / (4.0 * std::numbers::pi)) < 1e-13);
    const ScalarField B1{[B](const Point3& x) { return B(x)[1]; }, BoxDomain::all_space()};
    CHECK(std::abs(laplacian(B1, p, DiffScheme{1e-3, 4}) + 2.0) < 1e-5);
}
