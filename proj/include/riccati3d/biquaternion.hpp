#pragma once

#include <array>
#include <complex>
#include <iosfwd>

namespace riccati3d {

using Complex = std::complex<double>;

/// Complex 3-vector; the vector part of a biquaternion.
struct Vector3c {
    std::array<Complex, 3> c{};

    constexpr Vector3c() = default;
    constexpr Vector3c(Complex x, Complex y, Complex z) : c{x, y, z} {}

    constexpr Complex& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    constexpr const Complex& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vector3c& operator+=(const Vector3c& o);
    Vector3c& operator-=(const Vector3c& o);
    Vector3c& operator*=(Complex s);
};

Vector3c operator+(Vector3c a, const Vector3c& b);
Vector3c operator-(Vector3c a, const Vector3c& b);
Vector3c operator-(const Vector3c& a);
Vector3c operator*(Complex s, Vector3c a);
Vector3c operator*(Vector3c a, Complex s);
Vector3c operator*(double s, Vector3c a);
Vector3c operator*(Vector3c a, double s);
Vector3c operator/(Vector3c a, Complex s);

/// Bilinear (not sesquilinear) inner product on C^3.
Complex dot(const Vector3c& a, const Vector3c& b);
Vector3c cross(const Vector3c& a, const Vector3c& b);
double max_abs(const Vector3c& a);

/// Element x0 e0 + x1 e1 + x2 e2 + x3 e3 of H(C).
///
/// The imaginary unit commutes with every basis element; e_p e_q = -delta_pq + eps_pqr e_r.
class Biquaternion {
public:
    constexpr Biquaternion() = default;
    constexpr Biquaternion(Complex q0, Complex q1, Complex q2, Complex q3) : q_{q0, q1, q2, q3} {}
    // NOLINTNEXTLINE(google-explicit-constructor): scalars embed into H(C)
    constexpr Biquaternion(Complex scalar) : q_{scalar, 0.0, 0.0, 0.0} {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Biquaternion(double scalar) : q_{scalar, 0.0, 0.0, 0.0} {}
    Biquaternion(Complex scalar, const Vector3c& vec) : q_{scalar, vec[0], vec[1], vec[2]} {}
    // NOLINTNEXTLINE(google-explicit-constructor): pure vectors embed into H(C)
    Biquaternion(const Vector3c& vec) : Biquaternion(Complex{}, vec) {}

    /// Basis element e_k, k in 0..3.
    static Biquaternion basis(int k);

    constexpr Complex& operator[](int i) { return q_[static_cast<std::size_t>(i)]; }
    constexpr const Complex& operator[](int i) const { return q_[static_cast<std::size_t>(i)]; }

    Complex scalar() const { return q_[0]; }
    Vector3c vec() const { return {q_[1], q_[2], q_[3]}; }

    /// Quaternionic conjugate x0 - vec(x). Complex coefficients are left untouched.
    Biquaternion conj() const;
    /// x conj(x) = sum of squared coefficients; complex, can vanish for x != 0.
    Complex modulus_sq() const;
    /// conj(x)/|x|^2. Throws ZeroDivisor when |modulus_sq| <= eps * (max |x_k|)^2.
    Biquaternion inverse(double eps = 1e-12) const;

    bool is_pure_vector(double tol = 0.0) const;
    bool is_finite() const;
    double max_abs() const;

    Biquaternion& operator+=(const Biquaternion& o);
    Biquaternion& operator-=(const Biquaternion& o);
    Biquaternion& operator*=(Complex s);

private:
    std::array<Complex, 4> q_{};
};

Biquaternion operator+(Biquaternion a, const Biquaternion& b);
Biquaternion operator-(Biquaternion a, const Biquaternion& b);
Biquaternion operator-(const Biquaternion& a);
Biquaternion operator*(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator*(Complex s, Biquaternion a);
Biquaternion operator*(Biquaternion a, Complex s);
Biquaternion operator*(double s, Biquaternion a);
Biquaternion operator*(Biquaternion a, double s);
Biquaternion operator/(Biquaternion a, Complex s);

/// Right division a b^{-1}.
Biquaternion right_divide(const Biquaternion& a, const Biquaternion& b);
/// Left division b^{-1} a.
Biquaternion left_divide(const Biquaternion& a, const Biquaternion& b);

/// Max componentwise distance.
double distance(const Biquaternion& a, const Biquaternion& b);
bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol);

/// The operator M^x of right multiplication: M^x(y) = y x.
class RightMultiplication {
public:
    explicit RightMultiplication(Biquaternion x) : x_(x) {}
    Biquaternion operator()(const Biquaternion& y) const { return y * x_; }
    const Biquaternion& factor() const { return x_; }

private:
    Biquaternion x_;
};

inline RightMultiplication right_mul(const Biquaternion& x) { return RightMultiplication{x}; }

std::ostream& operator<<(std::ostream& os, const Biquaternion& x);

}  // namespace riccati3d
