#include <cmath>

#include "doctest.h"
#include "riccati3d/fields.hpp"

using namespace riccati3d;

namespace {

QuaternionField qfield(std::function<Biquaternion(const Point3&)> f) { return {std::move(f), BoxDomain::all_space()}; }
ScalarField sfield(std::function<Complex(const Point3&)> f) { return {std::move(f), BoxDomain::all_space()}; }
VectorField vfield(std::function<Vector3c(const Point3&)> f) { return {std::move(f), BoxDomain::all_space()}; }

}  // namespace

TEST_CASE("Dirac operator on hand-computable fields") {
    const Point3 p{0.3, -1.2, 2.0};
    // D(y e1): e2 e1 dy(y) = -e3.
    const auto f1 = qfield([](const Point3& x) { return Biquaternion(0.0, x.y, 0.0, 0.0); });
    CHECK(distance(dirac(f1, p), -Biquaternion::basis(3)) < 1e-9);
    // D(x e1) = e1 e1 = -1.
    const auto f2 = qfield([](const Point3& x) { return Biquaternion(0.0, x.x, 0.0, 0.0); });
    CHECK(distance(dirac(f2, p), Biquaternion(-1.0)) < 1e-9);
    // Right-acting: e1 e2 for y e1 read from the right is e1 * e2 = e3.
    CHECK(distance(dirac_right(f1, p), Biquaternion::basis(3)) < 1e-9);
}

TEST_CASE("grad, div, rot and the Laplacian") {
    const auto f = sfield([](const Point3& x) { return Complex(x.x * x.x); });
    CHECK(max_abs(grad(f, {3.0, 0.0, 0.0}) - Vector3c(6.0, 0.0, 0.0)) < 1e-10);
    const auto F = vfield([](const Point3& x) { return Vector3c(-x.y, x.x, x.z * x.z); });
    const Point3 p{0.5, 0.25, 1.5};
    CHECK(std::abs(div(F, p) - Complex(3.0)) < 1e-9);  // d_z z^2 at z = 1.5
    CHECK(max_abs(rot(F, p) - Vector3c(0.0, 0.0, 2.0)) < 1e-9);
    const auto g = sfield([](const Point3& x) { return Complex(x.x * x.y * x.z + x.x * x.x); });
    CHECK(std::abs(laplacian(g, p) - Complex(2.0)) < 1e-6);
}

TEST_CASE("D squared is minus the Laplacian on a non-polynomial field") {
    const auto f = qfield([](const Point3& x) {
        return Biquaternion(std::sin(x.x) * x.y, Complex(0.0, x.z * x.z), std::exp(0.5 * x.y), x.x * x.y * x.z);
    });
    const DiffScheme s{1e-3, 4};
    const Point3 p{0.4, 0.1, -0.7};
    const auto Df = dirac_field(f, s);
    CHECK(distance(dirac(Df, p, s), -laplacian(f, p, s)) < 1e-6);
}

TEST_CASE("second-order scheme is also available") {
    const auto f = sfield([](const Point3& x) { return Complex(std::sin(x.x)); });
    const DiffScheme s{1e-4, 2};
    CHECK(std::abs(partial(f, {0.3, 0, 0}, 0, s) - Complex(std::cos(0.3))) < 1e-8);
    CHECK_THROWS_AS(DiffScheme({1e-4, 3}).validate(), Error);
    CHECK_THROWS_AS(DiffScheme({0.0, 4}).validate(), Error);
}

TEST_CASE("box domains with excluded sets") {
    const BoxDomain d = BoxDomain({-1, -1, -1}, {1, 1, 1}).excluding([](const Point3& p) { return norm(p) < 0.2; });
    CHECK(d.admits({0.5, 0.0, 0.0}));
    CHECK_FALSE(d.admits({0.1, 0.0, 0.0}));
    CHECK_FALSE(d.admits({1.5, 0.0, 0.0}));
    CHECK(d.bounded());
    CHECK_FALSE(BoxDomain::all_space().bounded());
    const BoxDomain both = d.intersect(BoxDomain({0, 0, 0}, {2, 2, 2}));
    CHECK(both.admits({0.5, 0.5, 0.5}));
    CHECK_FALSE(both.admits({-0.5, 0.5, 0.5}));
    CHECK_FALSE(both.admits({0.05, 0.05, 0.05}));
}

TEST_CASE("stencils that touch an excluded point raise DomainError") {
    const BoxDomain d = BoxDomain::all_space().excluding([](const Point3& p) { return std::abs(p.x) < 1e-3; });
    const ScalarField f{[](const Point3& p) { return Complex(1.0 / p.x); }, d};
    CHECK_THROWS_AS(grad(f, {1e-3 + 1e-5, 0.0, 0.0}), DomainError);
    CHECK_NOTHROW(grad(f, {0.5, 0.0, 0.0}));
    CHECK_THROWS_AS(f.at({0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("scalar and vector parts") {
    const auto f = qfield([](const Point3& x) { return Biquaternion(x.x, 1.0, 2.0, 3.0); });
    const Point3 p{2.0, 0.0, 0.0};
    CHECK(scalar_part(f)(p) == Complex(2.0));
    CHECK(max_abs(vector_part(f)(p) - Vector3c(1.0, 2.0, 3.0)) == 0.0);
    CHECK_THROWS_AS(pure_vector_part(f)(p), NotPureVector);
}
