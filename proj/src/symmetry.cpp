#include "riccati3d/symmetry.hpp"

#include <cmath>
#include <string>

namespace riccati3d {

GeneratorParams GeneratorParams::single(int index, double value) {
    GeneratorParams g;
    g(index) = value;
    return g;
}

std::array<double, 6> vhat_apply(const GeneratorParams& P, const Point3& p, const Vec3& Q) {
    const double x = p.x, y = p.y, z = p.z;
    const double u = Q.x, v = Q.y, w = Q.z;
    const double c = c_bilinear(p, Q);
    const double xi = P(1) * (x * x - (y * y + z * z)) + 2 * P(2) * x * y + 2 * P(3) * x * z - P(4) * z + P(5) * x -
                      P(6) * y + P(9);
    const double eta = 2 * P(1) * x * y + P(2) * (y * y - (x * x + z * z)) + 2 * P(3) * y * z + P(5) * y +
                       P(6) * x - P(7) * z + P(10);
    const double tau = 2 * P(1) * x * z + 2 * P(2) * y * z + P(3) * (z * z - (x * x + y * y)) + P(4) * x +
                       P(5) * z + P(7) * y + P(8);
    const double phi = P(1) * c + 2 * P(2) * (x * v - y * u) + 2 * P(3) * (x * w - z * u) - P(4) * w - P(5) * u -
                       P(6) * v;
    const double psi = 2 * P(1) * (y * u - x * v) + P(2) * c - 2 * P(3) * (z * v - y * w) - P(5) * v + P(6) * u -
                       P(7) * w;
    const double zeta = 2 * P(1) * (z * u - x * w) + 2 * P(2) * (z * v - y * w) + P(3) * c + P(4) * u - P(5) * w +
                        P(7) * v;
    return {xi, eta, tau, phi, psi, zeta};
}

namespace {

double real_value(const ScalarField& q, const Point3& p) {
    const Complex v = detail::eval_checked(q, p);
    if (std::abs(v.imag()) > 1e-12) {
        throw NonRealPotential("potential has imaginary part " + std::to_string(v.imag()) + " at " + to_string(p));
    }
    return v.real();
}

}  // namespace

double determining_residual(const GeneratorParams& P, const ScalarField& q, const Point3& p, const DiffScheme& s) {
    const double qv = real_value(q, p);
    ScalarField q_real{[q](const Point3& x) { return Complex(real_value(q, x), 0.0); }, q.domain};
    const Vector3c g = grad(q_real, p, s);
    const auto coeff = vhat_apply(P, p, Vec3{});
    const double x = p.x, y = p.y, z = p.z;
    return -(coeff[0] * g[0].real() + coeff[1] * g[1].real() + coeff[2] * g[2].real()) -
           2.0 * (P(5) + 2.0 * (P(1) * x + P(2) * y + P(3) * z)) * qv;
}

GeneratorParams table_generator(int k) {
    switch (k) {
        case 1: return GeneratorParams::single(9);
        case 2: return GeneratorParams::single(10);
        case 3: return GeneratorParams::single(8);
        case 4: return GeneratorParams::single(7);
        case 5: return GeneratorParams::single(4, -1.0);
        case 6: return GeneratorParams::single(6);
        case 7: return GeneratorParams::single(5);
        case 8: return GeneratorParams::single(1);
        case 9: return GeneratorParams::single(2);
        case 10: return GeneratorParams::single(3);
        default: throw Error("table_generator: k must be in 1..10");
    }
}

GeneratorParams flow_generator(int k) {
    GeneratorParams g = table_generator(k);
    if (k >= 4 && k <= 6) {
        for (double& a : g.a) a = -a;
    }
    return g;
}

ScalarField invariant_potential(int k, std::function<double(double, double)> F) {
    if (k < 1 || k > 10) throw Error("invariant_potential: k must be in 1..10");
    auto eval = [k, F](const Point3& p) -> Complex {
        const double x = p.x, y = p.y, z = p.z;
        const double r2 = x * x + y * y + z * z;
        switch (k) {
            case 1: return F(y, z);
            case 2: return F(x, z);
            case 3: return F(x, y);
            case 4: return F(x, std::sqrt(y * y + z * z));
            case 5: return F(y, std::sqrt(x * x + z * z));
            case 6: return F(z, std::sqrt(x * x + y * y));
            case 7:
                if (x == 0.0) throw DomainError("potential x^-2 F(y/x, z/x) is singular at x = 0");
                return F(y / x, z / x) / (x * x);
            default:
                if (r2 == 0.0) throw DomainError("potential r^-4 F(.) is singular at r = 0");
                if (k == 8) return F(y / r2, z / r2) / (r2 * r2);
                if (k == 9) return F(x / r2, z / r2) / (r2 * r2);
                return F(x / r2, y / r2) / (r2 * r2);
        }
    };
    BoxDomain dom = BoxDomain::all_space();
    if (k == 7) dom = dom.excluding([](const Point3& p) { return std::abs(p.x) < 1e-3; });
    if (k >= 8) dom = dom.excluding([](const Point3& p) { return dot(p, p) < 1e-6; });
    return {std::move(eval), dom};
}

std::array<std::array<double, 3>, 3> rotation_matrix(int index, double lambda) {
    const double c = std::cos(lambda), s = std::sin(lambda);
    switch (index) {
        case 1: return {{{1, 0, 0}, {0, c, s}, {0, -s, c}}};
        case 2: return {{{c, 0, -s}, {0, 1, 0}, {s, 0, c}}};
        case 3: return {{{c, s, 0}, {-s, c, 0}, {0, 0, 1}}};
        default: throw Error("rotation_matrix: index must be 1, 2 or 3");
    }
}

namespace {

Vec3 rotate(const std::array<std::array<double, 3>, 3>& R, const Vec3& v) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        out[i] = R[static_cast<std::size_t>(i)][0] * v.x + R[static_cast<std::size_t>(i)][1] * v.y +
                 R[static_cast<std::size_t>(i)][2] * v.z;
    }
    return out;
}

bool on_axis(const Point3& p, int axis) {
    const double d2 = dot(p, p) - p[axis] * p[axis];
    return d2 <= kAxisTol;
}

void check_k(int k) {
    if (k < 1 || k > 10) throw Error("group element: k must be in 1..10");
}

constexpr double kPoleTol = 1e-14;

}  // namespace

GroupImage group_act(const GroupElement& g, const Point3& p, const Vec3& Q) {
    check_k(g.k);
    const double l = g.lambda;
    if (g.k <= 3) return {p + l * unit_vector(g.k - 1), Q};
    if (g.k <= 6) {
        const auto R = rotation_matrix(g.k - 3, l);
        return {rotate(R, p), rotate(R, Q)};
    }
    if (g.k == 7) return {std::exp(l) * p, std::exp(-l) * Q};

    const int i = g.k - 8;
    if (on_axis(p, i)) {
        const double d = 1.0 - p[i] * l;
        if (std::abs(d) <= kPoleTol) throw PoleError("group action pole on the axis at " + to_string(p));
        GroupImage out;
        for (int j = 0; j < 3; ++j) {
            out.x[j] = j == i ? p[i] / d : p[j] / (d * d);
            out.Q[j] = j == i ? d * (Q[i] + l * (1.0 - p[i] * Q[i])) : Q[j] * d * d;
        }
        return out;
    }
    const double r2 = dot(p, p);
    const double a = alpha(p[i], std::sqrt(r2), l);
    if (std::abs(a) <= kPoleTol) throw PoleError("group action pole at " + to_string(p));
    const double c = c_bilinear(p, Q);
    GroupImage out;
    out.x = (p - l * r2 * unit_vector(i)) / a;
    for (int j = 0; j < 3; ++j) {
        out.Q[j] = j == i ? Q[i] + c * l - (r2 * Q[i] + c * p[i]) * l * l : a * Q[j] + p[j] * (2.0 * Q[i] * l + c * l * l);
    }
    return out;
}

Point3 group_act_point(const GroupElement& g, const Point3& p) { return group_act(g, p, Vec3{}).x; }

namespace {

VectorField over_preimages(const GroupElement& g, const VectorField& Q,
                           std::function<Vector3c(const Point3&)> eval) {
    VectorField base = Q;
    const GroupElement inv = g.inverse();
    BoxDomain dom = BoxDomain(Q.domain.lower(), Q.domain.upper()).excluding([base, inv](const Point3& p) {
        try {
            return !base.domain.admits(group_act_point(inv, p));
        } catch (const PoleError&) {
            return true;
        }
    });
    return {std::move(eval), dom};
}

Vec3 real_Q(const VectorField& Q, const Point3& p) { return real_part(Q.eval(p), 1e-12); }

Vector3c conical_reconciled(int i, double l, const VectorField& Q, const Point3& p) {
    if (on_axis(p, i)) {
        const double d = 1.0 + l * p[i];
        if (std::abs(d) <= kPoleTol) throw PoleError("transported solution pole on the axis at " + to_string(p));
        Point3 pre;
        pre[i] = p[i] / d;
        for (int j = 0; j < 3; ++j) {
            if (j != i) pre[j] = p[j] / (d * d);
        }
        const Vec3 q = real_Q(Q, pre);
        Vec3 out;
        for (int j = 0; j < 3; ++j) out[j] = j == i ? q[i] / (d * d) + l / d : q[j] / (d * d);
        return to_complex(out);
    }
    const double r2 = dot(p, p);
    const double am = alpha(-p[i], std::sqrt(r2), l);
    if (std::abs(am) <= kPoleTol) throw PoleError("transported solution pole at " + to_string(p));
    const Point3 pre = (p + l * r2 * unit_vector(i)) / am;
    const Vec3 q = real_Q(Q, pre);
    const double c = c_bilinear(pre, q);
    Vec3 out;
    for (int j = 0; j < 3; ++j) {
        out[j] = j == i ? ((1.0 + 2.0 * l * p[i]) * q[i] + l * (1.0 + l * p[i]) * c) / am
                        : (q[j] + p[j] * (2.0 * l * q[i] + l * l * c)) / am;
    }
    return to_complex(out);
}

Vector3c conical_printed(int i, double l, const VectorField& Q, const Point3& p) {
    const double r2 = dot(p, p);
    const double r = std::sqrt(r2);
    if (on_axis(p, i)) {
        const double d = 1.0 - p[i] * l;
        const double m = 1.0 + p[i] * l;
        if (std::abs(m) <= kPoleTol) throw PoleError("transported solution pole on the axis at " + to_string(p));
        const Vec3 q = real_Q(Q, Point3{0.0, 0.0, p[i] / m});
        Vec3 out;
        for (int j = 0; j < 3; ++j) out[j] = d * d * q[j] + (j == i ? d * l : 0.0);
        return to_complex(out);
    }
    const double am = alpha(-p[i], r, l);
    if (std::abs(am) <= kPoleTol) throw PoleError("transported solution pole at " + to_string(p));
    const Point3 pre = (p + r2 * l * unit_vector(i)) / am;
    const Vec3 q = real_Q(Q, pre);
    const double c = c_bilinear(p, q);
    const double a = alpha(p[i], r, l);
    double lead = q[i];
    if (i == 0) {
        // Second component of the k=8 formula uses alpha(-z, r, lambda) for its inner point.
        const double az = alpha(-p.z, r, l);
        if (std::abs(az) <= kPoleTol) throw PoleError("transported solution pole at " + to_string(p));
        lead = real_Q(Q, (p + r2 * l * unit_vector(0)) / az)[0];
    }
    Vec3 out;
    for (int j = 0; j < 3; ++j) {
        if (j == i) {
            out[j] = q[i] + c * (l - p[i] * l * l) - r2 * l * l * q[i];
        } else {
            const double first = (i == 0 && j == 1) ? lead : q[i];
            out[j] = a * q[j] + p[j] * (2.0 * first * l + c * l * l);
        }
    }
    return to_complex(out);
}

}  // namespace

VectorField transport_solution(const GroupElement& g, const VectorField& Q, TransportFormula formula) {
    check_k(g.k);
    const double l = g.lambda;
    const int k = g.k;
    std::function<Vector3c(const Point3&)> eval;
    if (k <= 3) {
        eval = [Q, l, k](const Point3& p) { return Q.eval(p - l * unit_vector(k - 1)); };
    } else if (k <= 6) {
        const auto R = rotation_matrix(k - 3, l);
        const auto Rt = rotation_matrix(k - 3, -l);
        eval = [Q, R, Rt](const Point3& p) { return to_complex(rotate(R, real_Q(Q, rotate(Rt, p)))); };
    } else if (k == 7) {
        eval = [Q, l](const Point3& p) { return Q.eval(std::exp(-l) * p) * std::exp(-l); };
    } else if (formula == TransportFormula::Reconciled) {
        eval = [Q, l, k](const Point3& p) { return conical_reconciled(k - 8, l, Q, p); };
    } else {
        eval = [Q, l, k](const Point3& p) { return conical_printed(k - 8, l, Q, p); };
    }
    return over_preimages(g, Q, std::move(eval));
}

VectorField pushforward_solution(const GroupElement& g, const VectorField& Q) {
    check_k(g.k);
    const GroupElement inv = g.inverse();
    auto eval = [g, inv, Q](const Point3& p) {
        const Point3 pre = group_act_point(inv, p);
        return to_complex(group_act(g, pre, real_Q(Q, pre)).Q);
    };
    return over_preimages(g, Q, std::move(eval));
}

}  // namespace riccati3d
