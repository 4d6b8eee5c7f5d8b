#include "riccati3d/fields.hpp"

#include <cstdio>

namespace riccati3d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Vec3 real_part(const Vector3c& v, double tol) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs(v[i].imag()) > tol) {
            throw NonRealPotential("complex value where a real one is required");
        }
    }
    return {v[0].real(), v[1].real(), v[2].real()};
}

std::string to_string(const Point3& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g, %.6g, %.6g)", p.x, p.y, p.z);
    return buf;
}

BoxDomain::BoxDomain() : BoxDomain({-kInf, -kInf, -kInf}, {kInf, kInf, kInf}) {}

BoxDomain::BoxDomain(Point3 lower, Point3 upper, Predicate excluded)
    : lower_(lower), upper_(upper), excluded_(std::move(excluded)) {
    for (int i = 0; i < 3; ++i) {
        if (!(lower_[i] < upper_[i])) throw DomainError("box bounds must satisfy lower < upper");
    }
}

BoxDomain BoxDomain::all_space() { return {}; }

bool BoxDomain::bounded() const {
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) return false;
    }
    return true;
}

Point3 BoxDomain::center() const { return 0.5 * (lower_ + upper_); }

bool BoxDomain::contains(const Point3& p) const {
    for (int i = 0; i < 3; ++i) {
        if (!(p[i] >= lower_[i] && p[i] <= upper_[i])) return false;
    }
    return true;
}

BoxDomain BoxDomain::excluding(Predicate extra) const {
    if (!excluded_) return {lower_, upper_, std::move(extra)};
    return {lower_, upper_, [a = excluded_, b = std::move(extra)](const Point3& p) { return a(p) || b(p); }};
}

BoxDomain BoxDomain::with_bounds(Point3 lower, Point3 upper) const { return {lower, upper, excluded_}; }

BoxDomain BoxDomain::intersect(const BoxDomain& other) const {
    Point3 lo;
    Point3 hi;
    for (int i = 0; i < 3; ++i) {
        lo[i] = std::max(lower_[i], other.lower_[i]);
        hi[i] = std::min(upper_[i], other.upper_[i]);
    }
    BoxDomain out{lo, hi, excluded_};
    return other.excluded_ ? out.excluding(other.excluded_) : out;
}

ScalarField constant_field(Complex value, BoxDomain domain) {
    return {[value](const Point3&) { return value; }, std::move(domain)};
}

VectorField zero_vector_field(BoxDomain domain) {
    return {[](const Point3&) { return Vector3c{}; }, std::move(domain)};
}

QuaternionField as_quaternion(const ScalarField& f) {
    return {[e = f.eval](const Point3& p) { return Biquaternion{e(p)}; }, f.domain};
}

QuaternionField as_quaternion(const VectorField& f) {
    return {[e = f.eval](const Point3& p) { return Biquaternion{e(p)}; }, f.domain};
}

ScalarField scalar_part(const QuaternionField& f) {
    return {[e = f.eval](const Point3& p) { return e(p).scalar(); }, f.domain};
}

VectorField pure_vector_part(const QuaternionField& f, double tol) {
    return {[e = f.eval, tol](const Point3& p) {
                const Biquaternion v = e(p);
                if (!v.is_pure_vector(tol * std::max(1.0, v.max_abs()))) {
                    throw NotPureVector("field has a nonzero scalar part at " + to_string(p));
                }
                return v.vec();
            },
            f.domain};
}

VectorField vector_part(const QuaternionField& f) {
    return {[e = f.eval](const Point3& p) { return e(p).vec(); }, f.domain};
}

void DiffScheme::validate() const {
    if (!(h > 0.0)) throw Error("DiffScheme: step must be positive");
    if (order != 2 && order != 4) throw Error("DiffScheme: order must be 2 or 4");
}

Vector3c grad(const ScalarField& f, const Point3& p, const DiffScheme& s) {
    return {partial(f, p, 0, s), partial(f, p, 1, s), partial(f, p, 2, s)};
}

Complex div(const VectorField& f, const Point3& p, const DiffScheme& s) {
    Complex acc = 0.0;
    for (int k = 0; k < 3; ++k) {
        acc += partial(f, p, k, s)[k];
    }
    return acc;
}

Vector3c rot(const VectorField& f, const Point3& p, const DiffScheme& s) {
    const Vector3c dx = partial(f, p, 0, s);
    const Vector3c dy = partial(f, p, 1, s);
    const Vector3c dz = partial(f, p, 2, s);
    return {dy[2] - dz[1], dz[0] - dx[2], dx[1] - dy[0]};
}

Complex laplacian(const ScalarField& f, const Point3& p, const DiffScheme& s) {
    return second_partial(f, p, 0, s) + second_partial(f, p, 1, s) + second_partial(f, p, 2, s);
}

Biquaternion laplacian(const QuaternionField& f, const Point3& p, const DiffScheme& s) {
    return second_partial(f, p, 0, s) + second_partial(f, p, 1, s) + second_partial(f, p, 2, s);
}

Biquaternion dirac(const QuaternionField& f, const Point3& p, const DiffScheme& s) {
    Biquaternion acc;
    for (int k = 0; k < 3; ++k) {
        acc += Biquaternion::basis(k + 1) * partial(f, p, k, s);
    }
    return acc;
}

Biquaternion dirac_right(const QuaternionField& f, const Point3& p, const DiffScheme& s) {
    Biquaternion acc;
    for (int k = 0; k < 3; ++k) {
        acc += partial(f, p, k, s) * Biquaternion::basis(k + 1);
    }
    return acc;
}

VectorField grad_field(const ScalarField& f, const DiffScheme& s) {
    return {[f, s](const Point3& p) { return grad(f, p, s); }, f.domain};
}

VectorField rot_field(const VectorField& f, const DiffScheme& s) {
    return {[f, s](const Point3& p) { return rot(f, p, s); }, f.domain};
}

ScalarField div_field(const VectorField& f, const DiffScheme& s) {
    return {[f, s](const Point3& p) { return div(f, p, s); }, f.domain};
}

QuaternionField dirac_field(const QuaternionField& f, const DiffScheme& s) {
    return {[f, s](const Point3& p) { return dirac(f, p, s); }, f.domain};
}

QuaternionField dirac_right_field(const QuaternionField& f, const DiffScheme& s) {
    return {[f, s](const Point3& p) { return dirac_right(f, p, s); }, f.domain};
}

}  // namespace riccati3d
