#pragma once

#include <functional>
#include <vector>

namespace riccati3d::oned {

using Fn = std::function<double(double)>;

/// y' = p0(x) + p1(x) y + p2(x) y^2.
struct Coefficients1D {
    Fn p0;
    Fn p1;
    Fn p2;

    double rhs(double x, double y) const { return p0(x) + p1(x) * y + p2(x) * y * y; }
};

/// Constant coefficients.
Coefficients1D constant_coefficients(double p0, double p1, double p2);

enum class PathStatus { Ok, MovableSingularity, ZeroCrossing };

struct Path1D {
    std::vector<double> xs;
    std::vector<double> ys;
    /// Points where the value could not be formed (for example a vanishing denominator).
    std::vector<bool> masked;
    PathStatus status = PathStatus::Ok;
};

/// 4th-order central difference with step h max(1, |x|).
double derivative(const Fn& f, double x, double h = 1e-3);
double second_derivative(const Fn& f, double x, double h = 1e-3);

/// Classic RK4 from (x0, y0) to x1 in equal steps no longer than `step`. Stops with
/// MovableSingularity once |y| exceeds `cap` or stops being finite; the path is truncated there.
Path1D integrate(const Coefficients1D& c, double x0, double y0, double x1, double step, double cap = 1e6);

struct LinearizeResidual {
    /// u'' - (p1 + p2'/p2) u' + p0 p2 u
    double linear;
    /// y' - (p0 + p1 y + p2 y^2) for y = -u' / (p2 u)
    double riccati;
};

/// Throws ZeroCrossing when u(x) = 0.
LinearizeResidual linearize_check(const Coefficients1D& c, const Fn& u, double x, double h = 1e-3);

/// y = y1 + 1/u with u' + (2 y1 p2 + p1) u + p2 = 0, u(x0) = u0, integrated by RK4 with the step
/// count fixed by the range [x0, x_max] so that y depends smoothly on x. Throws ZeroCrossing where u = 0.
Fn euler_first(const Coefficients1D& c, const Fn& y1, double x0, double u0, double x_max, double step = 1e-3);

/// y = (k y2 E - y1) / (k E - 1), E = exp(int_{x0}^{x} p2 (y1 - y2)), the integral by composite
/// Simpson with a panel count fixed by [x0, x_max]. Throws ZeroCrossing on a vanishing denominator.
Fn euler_second(const Fn& y1, const Fn& y2, const Coefficients1D& c, double k, double x0, double x_max,
                double step = 1e-3);

/// Lie's superposition [y1 (y3 - y2) + k y2 (y1 - y3)] / [(y3 - y2) + k (y1 - y3)].
Fn superposition(const Fn& y1, const Fn& y2, const Fn& y3, double k);

/// (y1 - y2)(y3 - y4) / ((y1 - y4)(y3 - y2)) at x.
double cross_ratio(const Fn& y1, const Fn& y2, const Fn& y3, const Fn& y4, double x);

/// Sum of the four logarithmic derivatives of the differences (12) + (34) - (14) - (32).
double picard_equiv_residual(const Fn& y1, const Fn& y2, const Fn& y3, const Fn& y4, double x, double h = 1e-3);

/// Factorized operator minus the direct one: -(d/dx + y)(d/dx - y) u - (-u'' + q u),
/// which equals (y' + y^2 - q) u.
double factorization_1d_residual(const Fn& q, const Fn& y, const Fn& u, double x, double h = 1e-3);

/// Evaluates f on xs, masking points where it throws ZeroCrossing or DomainError.
Path1D sample(const Fn& f, const std::vector<double>& xs);

}  // namespace riccati3d::oned
