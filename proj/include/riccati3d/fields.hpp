#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "riccati3d/biquaternion.hpp"
#include "riccati3d/errors.hpp"

namespace riccati3d {

/// Real 3-vector. Used for points of R^3 and for the real slice of Q.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

using Point3 = Vec3;

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr Vec3 unit_vector(int axis) {
    Vec3 e;
    e[axis] = 1.0;
    return e;
}

inline Vector3c to_complex(const Vec3& v) { return {v.x, v.y, v.z}; }
/// Real part; throws NonRealPotential when an imaginary part exceeds tol.
Vec3 real_part(const Vector3c& v, double tol = 1e-12);

std::string to_string(const Point3& p);

/// Axis-aligned box Omega plus a singular-set predicate.
///
/// Infinite bounds are allowed (unbounded directions). The excluded predicate is expected to be
/// conservative: it should already be inflated by the intended margin around singular sets.
class BoxDomain {
public:
    using Predicate = std::function<bool(const Point3&)>;

    BoxDomain();
    BoxDomain(Point3 lower, Point3 upper, Predicate excluded = {});

    static BoxDomain all_space();

    const Point3& lower() const { return lower_; }
    const Point3& upper() const { return upper_; }
    bool bounded() const;
    Point3 center() const;

    bool contains(const Point3& p) const;
    bool is_excluded(const Point3& p) const { return excluded_ && excluded_(p); }
    bool admits(const Point3& p) const { return contains(p) && !is_excluded(p); }

    /// Adds another excluded set (logical or).
    BoxDomain excluding(Predicate extra) const;
    BoxDomain with_bounds(Point3 lower, Point3 upper) const;
    /// Box intersection, union of excluded sets.
    BoxDomain intersect(const BoxDomain& other) const;

    const Predicate& excluded() const { return excluded_; }

private:
    Point3 lower_;
    Point3 upper_;
    Predicate excluded_;
};

/// Closed-form field over a domain. Evaluators must be pure.
template <class T>
struct Field {
    using value_type = T;
    std::function<T(const Point3&)> eval;
    BoxDomain domain;

    T operator()(const Point3& p) const { return eval(p); }

    /// Evaluation that enforces the domain.
    T at(const Point3& p) const {
        if (!domain.admits(p)) {
            throw DomainError("field evaluated outside its domain at " + to_string(p));
        }
        return eval(p);
    }
};

using ScalarField = Field<Complex>;
using VectorField = Field<Vector3c>;
using QuaternionField = Field<Biquaternion>;

ScalarField constant_field(Complex value, BoxDomain domain = BoxDomain::all_space());
VectorField zero_vector_field(BoxDomain domain = BoxDomain::all_space());

QuaternionField as_quaternion(const ScalarField& f);
QuaternionField as_quaternion(const VectorField& f);
ScalarField scalar_part(const QuaternionField& f);
/// Throws NotPureVector at evaluation if the scalar part exceeds tol.
VectorField pure_vector_part(const QuaternionField& f, double tol = 1e-9);
VectorField vector_part(const QuaternionField& f);

/// Central finite-difference settings.
///
/// The step along axis k at point p is h * max(1, |p_k|).
struct DiffScheme {
    double h = 1e-4;
    int order = 4;

    double step(double coordinate) const { return h * std::max(1.0, std::abs(coordinate)); }
    void validate() const;
};

namespace detail {

template <class T>
T eval_checked(const Field<T>& f, const Point3& p) {
    if (!f.domain.admits(p)) {
        throw DomainError("finite-difference stencil touches an excluded point at " + to_string(p));
    }
    return f.eval(p);
}

}  // namespace detail

/// d f / d x_axis at p.
template <class T>
T partial(const Field<T>& f, const Point3& p, int axis, const DiffScheme& s) {
    s.validate();
    const double h = s.step(p[axis]);
    const Vec3 e = unit_vector(axis) * h;
    if (s.order == 2) {
        return (detail::eval_checked(f, p + e) - detail::eval_checked(f, p - e)) * (0.5 / h);
    }
    const T fp1 = detail::eval_checked(f, p + e);
    const T fm1 = detail::eval_checked(f, p - e);
    const T fp2 = detail::eval_checked(f, p + 2.0 * e);
    const T fm2 = detail::eval_checked(f, p - 2.0 * e);
    return ((fp1 - fm1) * 8.0 - (fp2 - fm2)) * (1.0 / (12.0 * h));
}

/// d^2 f / d x_axis^2 at p.
template <class T>
T second_partial(const Field<T>& f, const Point3& p, int axis, const DiffScheme& s) {
    s.validate();
    const double h = s.step(p[axis]);
    const Vec3 e = unit_vector(axis) * h;
    const T f0 = detail::eval_checked(f, p);
    if (s.order == 2) {
        return (detail::eval_checked(f, p + e) + detail::eval_checked(f, p - e) - f0 * 2.0) * (1.0 / (h * h));
    }
    const T s1 = detail::eval_checked(f, p + e) + detail::eval_checked(f, p - e);
    const T s2 = detail::eval_checked(f, p + 2.0 * e) + detail::eval_checked(f, p - 2.0 * e);
    return (s1 * 16.0 - s2 - f0 * 30.0) * (1.0 / (12.0 * h * h));
}

Vector3c grad(const ScalarField& f, const Point3& p, const DiffScheme& s = {});
Complex div(const VectorField& f, const Point3& p, const DiffScheme& s = {});
Vector3c rot(const VectorField& f, const Point3& p, const DiffScheme& s = {});
Complex laplacian(const ScalarField& f, const Point3& p, const DiffScheme& s = {});
Biquaternion laplacian(const QuaternionField& f, const Point3& p, const DiffScheme& s = {});

/// Left Dirac (Moisil-Theodoresco) operator sum_k e_k d_k f.
Biquaternion dirac(const QuaternionField& f, const Point3& p, const DiffScheme& s = {});
/// Right Dirac operator sum_k d_k f e_k.
Biquaternion dirac_right(const QuaternionField& f, const Point3& p, const DiffScheme& s = {});

/// Fields whose values are the derivatives above; used to compose operators.
VectorField grad_field(const ScalarField& f, const DiffScheme& s = {});
VectorField rot_field(const VectorField& f, const DiffScheme& s = {});
ScalarField div_field(const VectorField& f, const DiffScheme& s = {});
QuaternionField dirac_field(const QuaternionField& f, const DiffScheme& s = {});
QuaternionField dirac_right_field(const QuaternionField& f, const DiffScheme& s = {});

}  // namespace riccati3d
