#include <random>
#include <sstream>

#include "doctest.h"
#include "riccati3d/biquaternion.hpp"
#include "riccati3d/errors.hpp"

using namespace riccati3d;

namespace {

const Complex I(0.0, 1.0);
Biquaternion e(int k) { return Biquaternion::basis(k); }

/// Product written out from the 16 Hamilton rules, independent of the dot/cross implementation.
Biquaternion hamilton(const Biquaternion& a, const Biquaternion& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Biquaternion random_bq(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

}  // namespace

TEST_CASE("basis products follow the Hamilton rules") {
    CHECK(distance(e(1) * e(2), e(3)) == 0.0);
    CHECK(distance(e(2) * e(3), e(1)) == 0.0);
    CHECK(distance(e(3) * e(1), e(2)) == 0.0);
    CHECK(distance(e(2) * e(1), -e(3)) == 0.0);
    for (int k = 1; k <= 3; ++k) CHECK(distance(e(k) * e(k), Biquaternion(-1.0)) == 0.0);
    CHECK(distance((1.0 + e(1)) * (1.0 - e(1)), Biquaternion(2.0)) == 0.0);
}

TEST_CASE("product agrees with the written-out component formula") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Biquaternion a = random_bq(rng), b = random_bq(rng);
        CHECK(distance(a * b, hamilton(a, b)) < 1e-13);
    }
}

TEST_CASE("the complex unit commutes with every basis element") {
    for (int k = 0; k < 4; ++k) CHECK(distance(I * e(k), e(k) * I) == 0.0);
}

TEST_CASE("conjugation, modulus and inverse") {
    CHECK(distance(e(2).conj(), -e(2)) == 0.0);
    CHECK(Biquaternion(I, 1.0, 0.0, 0.0).modulus_sq() == Complex(0.0));
    CHECK(Biquaternion(2.0, 0.0, 0.0, 3.0).modulus_sq() == Complex(13.0));
    CHECK(distance(e(1).inverse(), -e(1)) == 0.0);
    CHECK(distance(Biquaternion(2.0).inverse(), Biquaternion(0.5)) == 0.0);
    CHECK_THROWS_AS((void)Biquaternion(I, 1.0, 0.0, 0.0).inverse(), ZeroDivisor);
    // A nonzero zero divisor: x conj(x) = |x|^2 = 0 although x != 0.
    const Biquaternion z(1.0, I, 0.0, 0.0);
    CHECK(z.max_abs() > 0.0);
    CHECK(distance(z * z.conj(), Biquaternion()) == 0.0);
}

TEST_CASE("inverse of a generic element, both sides") {
    const Biquaternion a(Complex(1.0, 2.0), Complex(-0.5, 0.3), 0.7, Complex(0.0, -1.2));
    const Biquaternion ai = a.inverse();
    CHECK(distance(a * ai, Biquaternion(1.0)) < 1e-14);
    CHECK(distance(ai * a, Biquaternion(1.0)) < 1e-14);
    const Biquaternion b(0.3, 1.0, Complex(0.0, 1.0), -2.0);
    CHECK(distance(right_divide(b, a) * a, b) < 1e-13);
    CHECK(distance(a * left_divide(b, a), b) < 1e-13);
}

TEST_CASE("right multiplication operator") {
    CHECK(distance(right_mul(e(1))(e(2)), -e(3)) == 0.0);
    const Biquaternion y(1.0, 2.0, 3.0, 4.0);
    CHECK(distance(right_mul(Biquaternion(1.0))(y), y) == 0.0);
}

TEST_CASE("pure vectors and streaming") {
    CHECK(Biquaternion(Vector3c(1.0, I, 0.0)).is_pure_vector());
    CHECK_FALSE(Biquaternion(1e-3, 1.0, 0.0, 0.0).is_pure_vector(1e-6));
    CHECK(Biquaternion(1e-9, 1.0, 0.0, 0.0).is_pure_vector(1e-6));
    std::ostringstream os;
    os << e(1);
    CHECK_FALSE(os.str().empty());
}
