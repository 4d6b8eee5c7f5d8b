#include "riccati3d/biquaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "riccati3d/errors.hpp"

namespace riccati3d {

Vector3c& Vector3c::operator+=(const Vector3c& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
    return *this;
}

Vector3c& Vector3c::operator-=(const Vector3c& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
    return *this;
}

Vector3c& Vector3c::operator*=(Complex s) {
    for (auto& v : c) v *= s;
    return *this;
}

Vector3c operator+(Vector3c a, const Vector3c& b) { return a += b; }
Vector3c operator-(Vector3c a, const Vector3c& b) { return a -= b; }
Vector3c operator-(const Vector3c& a) { return {-a[0], -a[1], -a[2]}; }
Vector3c operator*(Complex s, Vector3c a) { return a *= s; }
Vector3c operator*(Vector3c a, Complex s) { return a *= s; }
Vector3c operator*(double s, Vector3c a) { return a *= s; }
Vector3c operator*(Vector3c a, double s) { return a *= s; }
Vector3c operator/(Vector3c a, Complex s) { return a *= (1.0 / s); }

Complex dot(const Vector3c& a, const Vector3c& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vector3c cross(const Vector3c& a, const Vector3c& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double max_abs(const Vector3c& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

Biquaternion Biquaternion::basis(int k) {
    Biquaternion e;
    e[k] = 1.0;
    return e;
}

Biquaternion Biquaternion::conj() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }

Complex Biquaternion::modulus_sq() const {
    return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
}

Biquaternion Biquaternion::inverse(double eps) const {
    const double scale = max_abs();
    const Complex m = modulus_sq();
    if (!(std::abs(m) > eps * scale * scale)) {
        throw ZeroDivisor("biquaternion is not invertible (|x|^2 = 0 relative to its coefficients)");
    }
    return conj() / m;
}

bool Biquaternion::is_pure_vector(double tol) const { return std::abs(q_[0]) <= tol; }

bool Biquaternion::is_finite() const {
    return std::all_of(q_.begin(), q_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

double Biquaternion::max_abs() const {
    double m = 0.0;
    for (const auto& z : q_) m = std::max(m, std::abs(z));
    return m;
}

Biquaternion& Biquaternion::operator+=(const Biquaternion& o) {
    for (int i = 0; i < 4; ++i) (*this)[i] += o[i];
    return *this;
}

Biquaternion& Biquaternion::operator-=(const Biquaternion& o) {
    for (int i = 0; i < 4; ++i) (*this)[i] -= o[i];
    return *this;
}

Biquaternion& Biquaternion::operator*=(Complex s) {
    for (auto& z : q_) z *= s;
    return *this;
}

Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
Biquaternion operator-(const Biquaternion& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

// x y = x0 y0 + x0 y + y0 x - <x, y> + x × y
Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
    const Complex a0 = a.scalar();
    const Complex b0 = b.scalar();
    const Vector3c av = a.vec();
    const Vector3c bv = b.vec();
    return {a0 * b0 - dot(av, bv), a0 * bv + b0 * av + cross(av, bv)};
}

Biquaternion operator*(Complex s, Biquaternion a) { return a *= s; }
Biquaternion operator*(Biquaternion a, Complex s) { return a *= s; }
Biquaternion operator*(double s, Biquaternion a) { return a *= s; }
Biquaternion operator*(Biquaternion a, double s) { return a *= s; }
Biquaternion operator/(Biquaternion a, Complex s) { return a *= (1.0 / s); }

Biquaternion right_divide(const Biquaternion& a, const Biquaternion& b) { return a * b.inverse(); }
Biquaternion left_divide(const Biquaternion& a, const Biquaternion& b) { return b.inverse() * a; }

double distance(const Biquaternion& a, const Biquaternion& b) { return (a - b).max_abs(); }

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) { return distance(a, b) <= tol; }

std::ostream& operator<<(std::ostream& os, const Biquaternion& x) {
    return os << '(' << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ')';
}

}  // namespace riccati3d
