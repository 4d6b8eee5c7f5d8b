#include "riccati3d/riccati1d.hpp"

#include <algorithm>
#include <cmath>

#include "riccati3d/errors.hpp"

namespace riccati3d::oned {

Coefficients1D constant_coefficients(double p0, double p1, double p2) {
    return {[p0](double) { return p0; }, [p1](double) { return p1; }, [p2](double) { return p2; }};
}

double derivative(const Fn& f, double x, double h) {
    h *= std::max(1.0, std::abs(x));
    return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
}

double second_derivative(const Fn& f, double x, double h) {
    h *= std::max(1.0, std::abs(x));
    return (16.0 * (f(x + h) + f(x - h)) - (f(x + 2 * h) + f(x - 2 * h)) - 30.0 * f(x)) / (12.0 * h * h);
}

namespace {

template <class F>
double rk4_step(const F& f, double x, double y, double h) {
    const double k1 = f(x, y);
    const double k2 = f(x + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = f(x + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = f(x + h, y + h * k3);
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

int steps_for(double span, double step) {
    if (!(step > 0.0)) throw Error("step must be positive");
    return std::max(1, static_cast<int>(std::ceil(std::abs(span) / step - 1e-9)));
}

}  // namespace

Path1D integrate(const Coefficients1D& c, double x0, double y0, double x1, double step, double cap) {
    if (!std::isfinite(x0) || !std::isfinite(x1)) throw Error("integrate: interval must be finite");
    const int n = steps_for(x1 - x0, step);
    const double h = (x1 - x0) / n;
    Path1D path;
    path.xs.reserve(static_cast<std::size_t>(n) + 1);
    path.xs.push_back(x0);
    path.ys.push_back(y0);
    double y = y0;
    auto f = [&c](double x, double v) { return c.rhs(x, v); };
    for (int i = 0; i < n; ++i) {
        const double x = x0 + i * h;
        y = rk4_step(f, x, y, h);
        if (!std::isfinite(y) || std::abs(y) > cap) {
            path.status = PathStatus::MovableSingularity;
            break;
        }
        path.xs.push_back(i + 1 == n ? x1 : x0 + (i + 1) * h);
        path.ys.push_back(y);
    }
    path.masked.assign(path.xs.size(), false);
    return path;
}

LinearizeResidual linearize_check(const Coefficients1D& c, const Fn& u, double x, double h) {
    const double ux = u(x);
    if (ux == 0.0) throw ZeroCrossing("linearize_check: u vanishes");
    const double du = derivative(u, x, h);
    const double d2u = second_derivative(u, x, h);
    const double p2 = c.p2(x);
    const double dp2 = derivative(c.p2, x, h);
    const double linear = d2u - (c.p1(x) + dp2 / p2) * du + c.p0(x) * p2 * ux;
    Fn y = [&c, &u, h](double t) {
        const double ut = u(t);
        if (ut == 0.0) throw ZeroCrossing("linearize_check: u vanishes");
        return -derivative(u, t, h) / (c.p2(t) * ut);
    };
    const double yx = y(x);
    return {linear, derivative(y, x, h) - c.rhs(x, yx)};
}

Fn euler_first(const Coefficients1D& c, const Fn& y1, double x0, double u0, double x_max, double step) {
    const int n = steps_for(x_max - x0, step);
    return [c, y1, x0, u0, n](double x) {
        const double h = (x - x0) / n;
        auto f = [&](double t, double u) { return -(2.0 * y1(t) * c.p2(t) + c.p1(t)) * u - c.p2(t); };
        double u = u0;
        for (int i = 0; i < n && h != 0.0; ++i) u = rk4_step(f, x0 + i * h, u, h);
        if (u == 0.0 || !std::isfinite(u)) throw ZeroCrossing("euler_first: u vanishes");
        return y1(x) + 1.0 / u;
    };
}

Fn euler_second(const Fn& y1, const Fn& y2, const Coefficients1D& c, double k, double x0, double x_max,
                double step) {
    int n = steps_for(x_max - x0, step);
    if (n % 2 == 1) ++n;
    return [y1, y2, c, k, x0, n](double x) {
        const double h = (x - x0) / n;
        auto g = [&](double t) { return c.p2(t) * (y1(t) - y2(t)); };
        double integral = 0.0;
        if (h != 0.0) {
            double acc = g(x0) + g(x);
            for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * g(x0 + i * h);
            integral = acc * h / 3.0;
        }
        const double E = std::exp(integral);
        const double den = k * E - 1.0;
        if (std::abs(den) <= 1e-12 * std::max(1.0, std::abs(k * E))) {
            throw ZeroCrossing("euler_second: denominator vanishes");
        }
        return (k * y2(x) * E - y1(x)) / den;
    };
}

Fn superposition(const Fn& y1, const Fn& y2, const Fn& y3, double k) {
    return [y1, y2, y3, k](double x) {
        const double a = y1(x), b = y2(x), c = y3(x);
        const double den = (c - b) + k * (a - c);
        if (std::abs(den) <= 1e-14 * std::max({1.0, std::abs(c - b), std::abs(k * (a - c))})) {
            throw ZeroCrossing("superposition: denominator vanishes");
        }
        return (a * (c - b) + k * b * (a - c)) / den;
    };
}

double cross_ratio(const Fn& y1, const Fn& y2, const Fn& y3, const Fn& y4, double x) {
    const double a = y1(x), b = y2(x), c = y3(x), d = y4(x);
    const double den = (a - d) * (c - b);
    if (den == 0.0) throw ZeroCrossing("cross_ratio: denominator vanishes");
    return (a - b) * (c - d) / den;
}

double picard_equiv_residual(const Fn& y1, const Fn& y2, const Fn& y3, const Fn& y4, double x, double h) {
    auto logd = [x, h](const Fn& a, const Fn& b) {
        Fn d = [&a, &b](double t) { return a(t) - b(t); };
        const double v = d(x);
        if (v == 0.0) throw ZeroCrossing("picard_equiv_residual: solutions coincide");
        return derivative(d, x, h) / v;
    };
    return logd(y1, y2) + logd(y3, y4) - logd(y1, y4) - logd(y3, y2);
}

double factorization_1d_residual(const Fn& q, const Fn& y, const Fn& u, double x, double h) {
    Fn v = [&](double t) { return derivative(u, t, h) - y(t) * u(t); };
    const double factorized = -(derivative(v, x, h) + y(x) * v(x));
    const double direct = -second_derivative(u, x, h) + q(x) * u(x);
    return factorized - direct;
}

Path1D sample(const Fn& f, const std::vector<double>& xs) {
    Path1D out;
    out.xs = xs;
    out.ys.resize(xs.size(), 0.0);
    out.masked.resize(xs.size(), false);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            out.ys[i] = f(xs[i]);
        } catch (const ZeroCrossing&) {
            out.masked[i] = true;
            out.status = PathStatus::ZeroCrossing;
        } catch (const DomainError&) {
            out.masked[i] = true;
        }
    }
    return out;
}

}  // namespace riccati3d::oned
