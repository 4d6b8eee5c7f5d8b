#include "riccati3d/integral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "riccati3d/parallel.hpp"

namespace riccati3d {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw Error("QuadratureSpec: abs_tol must be positive");
    if (max_evaluations < 5) throw Error("QuadratureSpec: evaluation budget too small");
    if (gauss_order < 1) throw Error("QuadratureSpec: gauss_order must be positive");
    if (volume_resolution < 8) throw QuadratureFailure("QuadratureSpec: volume resolution must be >= 8");
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            const double pn = n == 0 ? 1.0 : (n == 1 ? x : p1);
            const double pnm1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pnm1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

struct SimpsonPanel {
    double a, b;
    Complex fa, fm, fb;
    Complex whole;
    double tol;
    int depth;
};

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, const QuadratureSpec& q) {
    const double m = 0.5 * (a + b);
    const Complex fa = f(a);
    const Complex fm = f(m);
    const Complex fb = f(b);
    int evaluations = 3;
    std::vector<SimpsonPanel> stack;
    stack.push_back({a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), q.abs_tol, 0});
    Complex total = 0.0;
    while (!stack.empty()) {
        const SimpsonPanel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + mid);
        const double rm = 0.5 * (mid + p.b);
        const Complex flm = f(lm);
        const Complex frm = f(rm);
        evaluations += 2;
        const Complex left = (mid - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        const Complex right = (p.b - mid) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        const Complex delta = left + right - p.whole;
        // Richardson-corrected acceptance; always refine the first few levels.
        if ((p.depth >= 4 && std::abs(delta) <= 15.0 * p.tol) || p.depth >= 60) {
            total += left + right + delta / 15.0;
            continue;
        }
        if (evaluations > q.max_evaluations) {
            throw QuadratureFailure("adaptive Simpson exceeded its evaluation budget");
        }
        stack.push_back({p.a, mid, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
        stack.push_back({mid, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    }
    return total;
}

Complex gauss(const std::function<Complex(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * acc;
}

}  // namespace

Complex integrate_line(const std::function<Complex(double)>& f, double a, double b, const QuadratureSpec& q) {
    q.validate();
    if (a == b) return 0.0;
    const Complex value = q.line_rule == LineRule::GaussLegendre ? gauss(f, a, b, q.gauss_order)
                                                                 : adaptive_simpson(f, a, b, q);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw QuadratureFailure("line integral is not finite");
    }
    return value;
}

ScalarField operator_A(const VectorField& F, const Point3& base, Complex C, const QuadratureSpec& q) {
    q.validate();
    if (!F.domain.admits(base)) throw DomainError("operator_A: base point " + to_string(base) + " is excluded");
    auto eval = [F, base, C, q](const Point3& p) -> Complex {
        auto component = [&F](int k, const Point3& at) {
            if (!F.domain.admits(at)) {
                throw DomainError("operator_A: integration path crosses an excluded point at " + to_string(at));
            }
            return F.eval(at)[k];
        };
        const Complex ix = integrate_line([&](double t) { return component(0, {t, base.y, base.z}); }, base.x, p.x, q);
        const Complex iy = integrate_line([&](double t) { return component(1, {p.x, t, base.z}); }, base.y, p.y, q);
        const Complex iz = integrate_line([&](double t) { return component(2, {p.x, p.y, t}); }, base.z, p.z, q);
        return ix + iy + iz + C;
    };
    return {std::move(eval), F.domain};
}

double path_rot_defect(const VectorField& F, const Point3& base, const Point3& target, int samples,
                       const DiffScheme& s) {
    double worst = 0.0;
    const Point3 corners[4] = {base, {target.x, base.y, base.z}, {target.x, target.y, base.z}, target};
    for (int leg = 0; leg < 3; ++leg) {
        for (int i = 0; i <= samples; ++i) {
            const double t = static_cast<double>(i) / samples;
            const Point3 p = corners[leg] + t * (corners[leg + 1] - corners[leg]);
            worst = std::max(worst, max_abs(rot(F, p, s)));
        }
    }
    return worst;
}

namespace {

// Antiderivative of 1/|r| over a box corner (X, Y, Z relative to the field point).
double box_corner_term(double X, double Y, double Z) {
    const double R = std::sqrt(X * X + Y * Y + Z * Z);
    double s = 0.0;
    if (X != 0.0 && Y != 0.0) s += X * Y * std::log(Z + R);
    if (Y != 0.0 && Z != 0.0) s += Y * Z * std::log(X + R);
    if (Z != 0.0 && X != 0.0) s += Z * X * std::log(Y + R);
    if (X != 0.0) s -= 0.5 * X * X * std::atan(Y * Z / (X * R));
    if (Y != 0.0) s -= 0.5 * Y * Y * std::atan(Z * X / (Y * R));
    if (Z != 0.0) s -= 0.5 * Z * Z * std::atan(X * Y / (Z * R));
    return s;
}

}  // namespace

double box_newton_potential(const Point3& x, const Point3& lower, const Point3& upper) {
    double total = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const double sign = ((i + j + k) % 2 == 1) ? 1.0 : -1.0;
                total += sign * box_corner_term((i ? upper.x : lower.x) - x.x, (j ? upper.y : lower.y) - x.y,
                                                (k ? upper.z : lower.z) - x.z);
            }
        }
    }
    return total;
}

namespace {

struct VolumeGrid {
    Point3 lower;
    Point3 upper;
    int n = 0;
    Vec3 cell;
    double volume = 0.0;
    std::vector<Point3> midpoints;
    std::vector<Vector3c> values;
};

}  // namespace

VectorField operator_B(const VectorField& F, const BoxDomain& region, const QuadratureSpec& q) {
    q.validate();
    if (!region.bounded()) throw DomainError("operator_B: region must be a bounded box");
    auto grid = std::make_shared<VolumeGrid>();
    const int n = q.volume_resolution;
    grid->lower = region.lower();
    grid->upper = region.upper();
    grid->n = n;
    grid->cell = (region.upper() - region.lower()) / static_cast<double>(n);
    grid->volume = grid->cell.x * grid->cell.y * grid->cell.z;
    const std::size_t total = static_cast<std::size_t>(n) * n * n;
    grid->midpoints.resize(total);
    grid->values.resize(total);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::size_t idx = (static_cast<std::size_t>(i) * n + j) * n + k;
                grid->midpoints[idx] = region.lower() + Vec3{(i + 0.5) * grid->cell.x, (j + 0.5) * grid->cell.y,
                                                             (k + 0.5) * grid->cell.z};
            }
        }
    }
    parallel_for(total, [&](std::size_t idx) {
        const Point3& m = grid->midpoints[idx];
        grid->values[idx] = (region.admits(m) && F.domain.admits(m)) ? F.eval(m) : Vector3c{};
    });

    auto eval = [grid, F, region](const Point3& x) -> Vector3c {
        const double scale = grid->volume / (4.0 * std::numbers::pi);
        const bool inside = region.contains(x);
        const Vector3c fx = (inside && region.admits(x) && F.domain.admits(x)) ? F.eval(x) : Vector3c{};
        std::array<Complex, 3> acc{};
        const std::size_t total = grid->midpoints.size();
        for (std::size_t c = 0; c < total; ++c) {
            const Point3 d = grid->midpoints[c] - x;
            const double r2 = dot(d, d);
            if (r2 == 0.0) continue;
            const double w = scale / std::sqrt(r2);
            const Vector3c& v = grid->values[c];
            acc[0] += w * (v[0] - fx[0]);
            acc[1] += w * (v[1] - fx[1]);
            acc[2] += w * (v[2] - fx[2]);
        }
        Vector3c out{acc[0], acc[1], acc[2]};
        if (inside) {
            out += fx * (box_newton_potential(x, grid->lower, grid->upper) / (4.0 * std::numbers::pi));
        }
        return out;
    };
    return {std::move(eval), BoxDomain::all_space()};
}

}  // namespace riccati3d
