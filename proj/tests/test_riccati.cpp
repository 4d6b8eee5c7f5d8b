#include <cmath>

#include "doctest.h"
#include "riccati3d/riccati.hpp"
#include "riccati3d/solutions.hpp"

using namespace riccati3d;

namespace {

const BoxDomain kRight = BoxDomain({0.2, -3, -3}, {6, 3, 3});

ScalarField sfield(std::function<Complex(const Point3&)> f, BoxDomain d = BoxDomain::all_space()) {
    return {std::move(f), std::move(d)};
}
VectorField vfield(std::function<Vector3c(const Point3&)> f, BoxDomain d = BoxDomain::all_space()) {
    return {std::move(f), std::move(d)};
}

const VectorField kInvX = vfield([](const Point3& p) { return Vector3c(-1.0 / p.x, 0.0, 0.0); }, kRight);

}  // namespace

TEST_CASE("Riccati residual separates solutions from non-solutions") {
    const RiccatiInstance zero{zero_vector_field(), constant_field(0.0)};
    CHECK(riccati_residual(zero, {1, 2, 3}).max_abs() == 0.0);

    const RiccatiInstance rot = rotational(RotationalParams{}).inst;
    CHECK(riccati_residual(rot, {2, 0, 1}).max_abs() < 1e-6);
    CHECK(std::abs(rot.q({2, 0, 5}) - 0.25) < 1e-15);

    // Q = x e1: -div Q + |Q|^2 = x^2 - 1.
    const RiccatiInstance bad{vfield([](const Point3& p) { return Vector3c(p.x, 0.0, 0.0); }), constant_field(0.0)};
    CHECK(std::abs(riccati_residual(bad, {1, 0, 0}).scalar) < 1e-9);
    CHECK(std::abs(riccati_residual(bad, {2, 0, 0}).scalar - 3.0) < 1e-9);
}

TEST_CASE("Schrodinger residual") {
    const SchrodingerInstance h{sfield([](const Point3& p) { return Complex(p.x * p.y * p.z); }), constant_field(0.0)};
    CHECK(std::abs(schrodinger_residual(h, {0.5, 1.5, -2.0})) < 1e-8);
    const SchrodingerInstance sq{sfield([](const Point3& p) { return Complex(p.x * p.x); }), constant_field(0.0)};
    CHECK(std::abs(schrodinger_residual(sq, {0.5, 1.5, -2.0}) + 2.0) < 1e-6);
}

TEST_CASE("Cole-Hopf maps psi = x to -e1/x") {
    const RiccatiInstance inst = cole_hopf({sfield([](const Point3& p) { return Complex(p.x); }, kRight), constant_field(0.0)});
    const Point3 p{1.7, 0.3, -0.4};
    CHECK(max_abs(inst.Q(p) - Vector3c(-1.0 / 1.7, 0.0, 0.0)) < 1e-9);
    CHECK(riccati_residual(inst, p).max_abs() < 1e-8);
    const RiccatiInstance c = cole_hopf({constant_field(3.0), constant_field(0.0)});
    CHECK(max_abs(c.Q({1, 1, 1})) == 0.0);
    const RiccatiInstance z = cole_hopf({sfield([](const Point3& p) { return Complex(p.x); }), constant_field(0.0)});
    CHECK_THROWS_AS(z.Q({0.0, 1.0, 1.0}), ZeroCrossing);
}

TEST_CASE("Cole-Hopf of the rotational Schrodinger partner reproduces Q") {
    RotationalParams rp;
    rp.c = std::log(2.0) / 2.0;
    const CatalogSolution sol = rotational(rp);
    const RiccatiInstance ch = cole_hopf({*sol.psi, sol.inst.q});
    for (const Point3 p : {Point3{2.0, 0.5, 0.0}, Point3{-1.0, 0.6, 1.0}, Point3{0.2, -2.5, -1.5}}) {
        CHECK(max_abs(ch.Q(p) - sol.inst.Q(p)) < 1e-6);
    }
}

TEST_CASE("inverse Cole-Hopf") {
    const SchrodingerInstance one = inverse_cole_hopf({zero_vector_field(), constant_field(0.0)}, {1, 2, 3});
    CHECK(std::abs(one.psi({-4, 0, 2}) - 1.0) == 0.0);
    const SchrodingerInstance lin = inverse_cole_hopf({kInvX, constant_field(0.0)}, {1, 0, 0});
    for (double x : {0.5, 2.0, 4.5}) CHECK(std::abs(lin.psi({x, 1.0, -1.0}) - x) < 1e-8);
    // The constant fixes psi(base) = exp(-C).
    const SchrodingerInstance scaled = inverse_cole_hopf({kInvX, constant_field(0.0)}, {1, 0, 0}, std::log(2.0));
    CHECK(std::abs(scaled.psi({1, 0, 0}) - 0.5) < 1e-15);
}

TEST_CASE("factorization residual") {
    const ScalarField probe = sfield([](const Point3& p) { return std::exp(Complex(0.3 * p.x + 0.2 * p.y - 0.1 * p.z)); });
    const RiccatiInstance rot = rotational(RotationalParams{}).inst;
    CHECK(factorization_residual(probe, rot, {2.0, 0.5, 0.3}).max_abs() < 1e-5);

    const RiccatiInstance zero{zero_vector_field(), constant_field(0.0)};
    const ScalarField xyz = sfield([](const Point3& p) { return Complex(p.x * p.y * p.z); });
    CHECK(factorization_residual(xyz, zero, {0.4, 1.1, -0.6}).max_abs() < 1e-6);

    // Constant probe on Q = x e1, q = 0: the left line is DQ + |Q|^2 - q = x^2 - 1 (times psi = 1).
    const RiccatiInstance bad{vfield([](const Point3& p) { return Vector3c(p.x, 0.0, 0.0); }), constant_field(0.0)};
    const Point3 p{2.0, 0.3, 0.1};
    const FactorizationResidual r = factorization_residual(constant_field(1.0), bad, p);
    CHECK(distance(r.left, Biquaternion(3.0)) < 1e-6);
    CHECK(distance(r.right, Biquaternion(3.0)) < 1e-6);
}

TEST_CASE("printed-sign factorization corresponds to -DQ + |Q|^2") {
    // With a constant probe the printed signs leave -DQ + |Q|^2 - q: here 1 + x^2 at x = 2.
    const RiccatiInstance bad{vfield([](const Point3& p) { return Vector3c(p.x, 0.0, 0.0); }), constant_field(0.0)};
    const Point3 p{2.0, 0.3, 0.1};
    const FactorizationResidual r =
        factorization_residual(constant_field(1.0), bad, p, {}, FactorizationForm::AsPrinted);
    CHECK(distance(r.left, Biquaternion(1.0 + 4.0)) < 1e-6);
}

TEST_CASE("Vekua residual and its component equations") {
    const ScalarField phi = sfield([](const Point3& p) { return Complex(std::exp(p.x) + p.y * p.y); });
    const QuaternionField W = as_quaternion(phi);
    CHECK(vekua_residual(W, phi, {0.3, 0.2, 0.1}).max_abs() < 1e-8);
    CHECK(vekua_residual(as_quaternion(constant_field(1.0)), constant_field(1.0), {0, 0, 0}).max_abs() == 0.0);

    const Point3 p{0.4, -0.3, 0.8};
    const ComponentResiduals a = component_residuals(phi, zero_vector_field(), phi, p);
    CHECK(std::abs(a.c1) < 1e-8);
    // phi = 1, W0 = x: Laplacian of x. phi = e^x, W0 = x e^x: div(e^{2x} e1) = 2 e^{2x}.
    const ScalarField x = sfield([](const Point3& q) { return Complex(q.x); });
    CHECK(std::abs(component_residuals(x, zero_vector_field(), constant_field(1.0), p).c1) < 1e-6);
    const ScalarField ex = sfield([](const Point3& q) { return Complex(std::exp(q.x)); });
    const ScalarField xex = sfield([](const Point3& q) { return Complex(q.x * std::exp(q.x)); });
    CHECK(std::abs(component_residuals(xex, zero_vector_field(), ex, p).c1 - 2.0 * std::exp(0.8)) < 1e-6);
    // Wv = grad h / phi for harmonic h: rot(phi Wv) = rot grad h = 0.
    const VectorField Wv = vfield([](const Point3& q) { return Vector3c(q.y, q.x, 0.0) / std::exp(q.x); });
    CHECK(max_abs(component_residuals(xex, Wv, ex, p).c2) < 1e-6);
}

TEST_CASE("w equation") {
    const Point3 p{0.3, 0.7, -0.2};
    const VectorField gradh = vfield([](const Point3& q) { return Vector3c(q.y, q.x, 0.0); });
    CHECK(w_equation_residual(gradh, constant_field(1.0), p).max_abs() < 1e-8);
    const VectorField ye1 = vfield([](const Point3& q) { return Vector3c(q.y, 0.0, 0.0); });
    CHECK(distance(w_equation_residual(ye1, constant_field(1.0), p), -Biquaternion::basis(3)) < 1e-8);
    const ScalarField ex = sfield([](const Point3& q) { return Complex(std::exp(q.x)); });
    const VectorField good = vfield([](const Point3& q) { return Vector3c(0.0, std::exp(q.x), 0.0); });
    const VectorField wrong = vfield([](const Point3& q) { return Vector3c(0.0, std::exp(-q.x), 0.0); });
    CHECK(w_equation_residual(good, ex, p).max_abs() < 1e-8);
    CHECK(distance(w_equation_residual(wrong, ex, p), Biquaternion(0.0, 0.0, 0.0, -2.0 * std::exp(-0.3))) < 1e-8);
    const QuaternionField notpure{[](const Point3&) { return Biquaternion(1.0, 0.0, 0.0, 0.0); }, BoxDomain::all_space()};
    CHECK_THROWS_AS(w_equation_residual(notpure, ex, p), NotPureVector);
}

TEST_CASE("construction from w: degenerate A is reported") {
    const BoxDomain region({-1, -1, -1}, {1, 1, 1});
    const auto c = build_W_prop2(zero_vector_field(), constant_field(1.0), constant_field(0.0), {0, 0, 0}, 0.0, region);
    CHECK_THROWS_AS(c.Q({0.2, 0.1, 0.0}), ZeroCrossing);
    const auto d = build_W_prop2(zero_vector_field(), constant_field(1.0), constant_field(0.0), {0, 0, 0}, 2.0, region);
    CHECK(std::abs(c.W0({0.2, 0.1, 0.0})) == 0.0);
    CHECK(distance(d.W({0.2, 0.1, 0.0}), Biquaternion(1.0)) < 1e-15);
}

TEST_CASE("construction from W0") {
    const BoxDomain region({-1, -1, -1}, {1, 1, 1});
    QuadratureSpec q;
    q.volume_resolution = 16;
    const ScalarField phi = sfield([](const Point3& p) { return Complex(2.0 + p.x); });
    // W0 = phi: the B source vanishes and W = phi - grad h / phi.
    const QuaternionField W = build_W_from_W0(phi, phi, constant_field(0.0), region, q);
    CHECK(distance(W({0.1, 0.2, 0.3}), Biquaternion(2.1)) < 1e-12);

    // phi = 1, W0 = x: W = x - rot B[e1]; adding h = xy shifts the vector part by -(y, x, 0).
    // The bounded potential leaves a flux term from the faces normal to e1, so keep them far away.
    const BoxDomain slab({-20, -1, -1}, {20, 1, 1});
    const ScalarField x = sfield([](const Point3& p) { return Complex(p.x); });
    const ScalarField xy = sfield([](const Point3& p) { return Complex(p.x * p.y); });
    const QuaternionField W1 = build_W_from_W0(x, constant_field(1.0), constant_field(0.0), slab, q);
    const QuaternionField W2 = build_W_from_W0(x, constant_field(1.0), xy, slab, q);
    const Point3 p{0.1, -0.2, 0.05};
    CHECK(distance(W2(p) - W1(p), Biquaternion(0.0, 0.2, -0.1, 0.0)) < 1e-8);
    const double r1 = vekua_residual(W1, constant_field(1.0), p).max_abs();
    const double r2 = vekua_residual(W2, constant_field(1.0), p).max_abs();
    CHECK(r1 < 5e-2);
    CHECK(std::abs(r1 - r2) < 1e-8);
}

TEST_CASE("W0 from W") {
    const ScalarField phi = sfield([](const Point3& p) { return Complex(2.0 + p.x); });
    const VectorField Wv = vfield([](const Point3& p) { return Vector3c(p.y, p.x, 0.0) / (2.0 + p.x); });
    const ScalarField W0 = build_W0_from_W(Wv, phi, {0, 0, 0});
    CHECK(std::abs(W0({0.3, 0.4, -0.2})) < 1e-8);
    const ScalarField W0c = build_W0_from_W(Wv, phi, {0, 0, 0}, 1.5);
    CHECK(std::abs(W0c({0.3, 0.4, -0.2}) + 2.3 * 1.5) < 1e-8);
}

TEST_CASE("first-order reduction and the recovery of Q") {
    const ScalarField xs = sfield([](const Point3& p) { return Complex(p.x); }, kRight);
    CHECK(euler_residual(as_quaternion(xs), kInvX, {1.3, 0.2, 0.4}).max_abs() < 1e-9);
    // With Q1 = 0 the equation is DW = 0: W = x + z e2 is monogenic (e1 + e3 e2 = 0), while a
    // nonconstant scalar W is not (DW = grad W).
    const QuaternionField mono{[](const Point3& p) { return Biquaternion(p.x, 0.0, p.z, 0.0); }, BoxDomain::all_space()};
    CHECK(euler_residual(mono, zero_vector_field(), {0.3, 0.2, 0.1}).max_abs() < 1e-9);
    const QuaternionField harm = as_quaternion(sfield([](const Point3& p) { return Complex(p.x * p.y - p.z); }));
    CHECK(distance(euler_residual(harm, zero_vector_field(), {0.3, 0.2, 0.1}), Biquaternion(0.0, 0.2, 0.3, -1.0)) < 1e-9);
    const QuaternionField xe2{[](const Point3& p) { return Biquaternion(0.0, 0.0, p.x, 0.0); }, BoxDomain::all_space()};
    CHECK(distance(euler_residual(xe2, zero_vector_field(), {0.3, 0.2, 0.1}), Biquaternion::basis(3)) < 1e-9);
}

TEST_CASE("W from a pair of solutions") {
    const BoxDomain region({0.5, -1, -1}, {3.5, 1, 1});
    QuadratureSpec q;
    q.volume_resolution = 8;
    q.line_rule = LineRule::GaussLegendre;
    const Point3 base{1, 0, 0};
    // Q = Q1: the brace vanishes and W = exp(-A[Q]).
    const QuaternionField same = w_from_q_pair(kInvX, kInvX, constant_field(0.0), base, region, q);
    CHECK(distance(same({2.0, 0.1, 0.2}), Biquaternion(2.0)) < 1e-12);
    // Q1 = 0, Q = -e1/x: Sc W = x and -D(Sc W)/Sc W gives Q back.
    const QuaternionField W = w_from_q_pair(kInvX, zero_vector_field(), constant_field(0.0), base, region, q);
    const Point3 p{2.0, 0.1, 0.2};
    CHECK(std::abs(W(p).scalar() - 2.0) < 1e-10);
    CHECK(max_abs(q_from_scw(W)(p) - kInvX(p)) < 1e-6);
}

TEST_CASE("W from a pair refuses different potentials") {
    const RiccatiInstance a{kInvX, constant_field(0.0)};
    const RiccatiInstance b{zero_vector_field(), constant_field(1.0)};
    CHECK_THROWS_AS(w_from_q_pair(a, b, constant_field(0.0), {1, 0, 0}, BoxDomain({0.5, -1, -1}, {2, 1, 1}),
                                  {Point3{1.0, 0.0, 0.0}}),
                    PreconditionError);
}

TEST_CASE("Picard four-term identity") {
    std::vector<VectorField> Q;
    for (const char* id : {"x", "y", "z", "sum"}) Q.push_back(harmonic_family(harmonic_seed(id)).inst.Q);
    const Point3 p{0.7, 1.3, 2.1};
    CHECK(picard_lhs(Q[0], Q[1], Q[2], Q[3], p).max_abs() < 1e-6);
    CHECK(picard_lhs(Q[0], Q[1], Q[0], Q[1], p).max_abs() == 0.0);
    const VectorField Q4 = Q[3];
    const VectorField bad{[Q4](const Point3& x) { return Q4(x) + Vector3c(1.0, 0.0, 0.0); }, Q4.domain};
    CHECK(picard_lhs(Q[0], Q[1], Q[2], bad, p).max_abs() > 1e-2);
    PicardOptions commutative;
    commutative.cross_terms = false;
    CHECK(picard_lhs(Q[0], Q[1], Q[2], Q[3], p, {}, commutative).max_abs() > 1e-2);
}

TEST_CASE("Picard with a non-invertible difference") {
    const VectorField a = vfield([](const Point3&) { return Vector3c(1.0, Complex(0.0, 1.0), 0.0); });
    const VectorField z = zero_vector_field();
    CHECK_THROWS_AS(picard_lhs(a, z, a, z, {0, 0, 0}), ZeroDivisor);
}
