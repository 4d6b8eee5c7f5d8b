#include "riccati3d/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace riccati3d {

namespace {

Complex guarded(Complex value, double eps, const char* what, const Point3& p) {
    if (!(std::abs(value) > eps)) {
        throw ZeroCrossing(std::string(what) + " vanishes at " + to_string(p));
    }
    return value;
}

Biquaternion vector_q(const Vector3c& v) { return Biquaternion(v); }

}  // namespace

double RiccatiResidual::max_abs() const { return std::max(std::abs(scalar), riccati3d::max_abs(vector)); }

RiccatiResidual riccati_residual(const RiccatiInstance& inst, const Point3& p, const DiffScheme& s) {
    const Vector3c Q = detail::eval_checked(inst.Q, p);
    const Complex q = detail::eval_checked(inst.q, p);
    return {-div(inst.Q, p, s) + dot(Q, Q) - q, rot(inst.Q, p, s)};
}

Complex schrodinger_residual(const SchrodingerInstance& inst, const Point3& p, const DiffScheme& s) {
    return -laplacian(inst.psi, p, s) + detail::eval_checked(inst.q, p) * detail::eval_checked(inst.psi, p);
}

RiccatiInstance cole_hopf(const SchrodingerInstance& inst, const DiffScheme& s, double eps) {
    ScalarField psi = inst.psi;
    auto eval = [psi, s, eps](const Point3& p) -> Vector3c {
        const Complex v = guarded(psi.eval(p), eps, "psi", p);
        return grad(psi, p, s) * (-1.0 / v);
    };
    return {VectorField{std::move(eval), inst.psi.domain}, inst.q};
}

SchrodingerInstance inverse_cole_hopf(const RiccatiInstance& inst, const Point3& base, Complex C,
                                      const QuadratureSpec& quad) {
    const ScalarField A = operator_A(inst.Q, base, C, quad);
    ScalarField psi{[A](const Point3& p) { return std::exp(-A.eval(p)); }, inst.Q.domain};
    return {std::move(psi), inst.q};
}

double FactorizationResidual::max_abs() const { return std::max(left.max_abs(), right.max_abs()); }

FactorizationResidual factorization_residual(const ScalarField& psi, const RiccatiInstance& inst, const Point3& p,
                                             const DiffScheme& s, FactorizationForm form) {
    // Inner operators: (D +- Q C_H) psi = grad psi +- Q psi, (D_r +- M^Q C_H) psi = grad psi +- psi Q.
    // Q and the scalar psi commute, so both inner fields coincide; the outer operators differ.
    const double sign = form == FactorizationForm::Consistent ? 1.0 : -1.0;
    const VectorField Q = inst.Q;
    QuaternionField inner{[psi, Q, s, sign](const Point3& x) {
                              return Biquaternion(grad(psi, x, s) + Q.eval(x) * (sign * psi.eval(x)));
                          },
                          psi.domain.intersect(Q.domain)};
    const Biquaternion Qp = vector_q(detail::eval_checked(inst.Q, p));
    const Biquaternion at = detail::eval_checked(inner, p);
    const Complex direct = -laplacian(psi, p, s) + detail::eval_checked(inst.q, p) * detail::eval_checked(psi, p);

    // Consistent: (D - M^Q) inner and (D_r - Q) inner. As printed: (D + M^Q) and (D_r + Q).
    const Biquaternion left = dirac(inner, p, s) - sign * (at * Qp);
    const Biquaternion right = dirac_right(inner, p, s) - sign * (Qp * at);
    return {left - direct, right - direct};
}

Biquaternion vekua_residual(const QuaternionField& W, const ScalarField& phi, const Point3& p, const DiffScheme& s,
                            double eps) {
    const Complex ph = guarded(detail::eval_checked(phi, p), eps, "phi", p);
    const Biquaternion log_d = Biquaternion(grad(phi, p, s) / ph);
    return dirac(W, p, s) - log_d * detail::eval_checked(W, p).conj();
}

ComponentResiduals component_residuals(const ScalarField& W0, const VectorField& Wv, const ScalarField& phi,
                                       const Point3& p, const DiffScheme& s, double eps) {
    ScalarField ratio{[W0, phi, eps](const Point3& x) { return W0.eval(x) / guarded(phi.eval(x), eps, "phi", x); },
                      W0.domain.intersect(phi.domain)};
    VectorField flux{[ratio, phi, s](const Point3& x) {
                         const Complex ph = phi.eval(x);
                         return grad(ratio, x, s) * (ph * ph);
                     },
                     ratio.domain};
    VectorField scaled{[Wv, phi](const Point3& x) { return Wv.eval(x) * phi.eval(x); },
                       Wv.domain.intersect(phi.domain)};
    VectorField swirl{[scaled, phi, s, eps](const Point3& x) {
                          const Complex ph = guarded(phi.eval(x), eps, "phi", x);
                          return rot(scaled, x, s) / (ph * ph);
                      },
                      scaled.domain};
    return {div(flux, p, s), rot(swirl, p, s)};
}

Biquaternion w_equation_residual(const VectorField& w, const ScalarField& phi, const Point3& p, const DiffScheme& s,
                                 double eps) {
    const Complex ph = guarded(detail::eval_checked(phi, p), eps, "phi", p);
    const Biquaternion log_d = Biquaternion(grad(phi, p, s) / ph);
    return dirac(as_quaternion(w), p, s) + Biquaternion(detail::eval_checked(w, p)) * log_d;
}

Biquaternion w_equation_residual(const QuaternionField& w, const ScalarField& phi, const Point3& p,
                                 const DiffScheme& s, double eps) {
    if (!detail::eval_checked(w, p).is_pure_vector(1e-12)) {
        throw NotPureVector("w_equation_residual: w has a scalar part at " + to_string(p));
    }
    return w_equation_residual(pure_vector_part(w, 1e-12), phi, p, s, eps);
}

VekuaConstruction build_W_prop2(const VectorField& w, const ScalarField& phi, const ScalarField& h,
                                const Point3& base, Complex C, const BoxDomain& region, const QuadratureSpec& quad,
                                const DiffScheme& s, double eps) {
    const BoxDomain dom = w.domain.intersect(phi.domain);
    VectorField w_over_phi{[w, phi, eps](const Point3& x) { return w.eval(x) / guarded(phi.eval(x), eps, "phi", x); },
                           dom};
    const ScalarField A = operator_A(w_over_phi, base, C, quad);
    VectorField phi_w{[w, phi](const Point3& x) { return w.eval(x) * phi.eval(x); }, dom};
    const VectorField Bpw = operator_B(phi_w, region, quad);
    const VectorField rotB = rot_field(VectorField{Bpw.eval, dom}, s);

    ScalarField W0{[A, phi](const Point3& x) { return 0.5 * phi.eval(x) * A.eval(x); }, dom};
    QuaternionField W{[A, phi, h, rotB, s, eps](const Point3& x) {
                          const Complex ph = guarded(phi.eval(x), eps, "phi", x);
                          const Vector3c vec = (grad(h, x, s) - rotB.eval(x)) / ph;
                          return Biquaternion(ph * A.eval(x), vec) * 0.5;
                      },
                      dom};
    VectorField Q{[A, phi, w, s, eps](const Point3& x) {
                      const Complex ph = guarded(phi.eval(x), eps, "phi", x);
                      const Complex a = guarded(A.eval(x), eps, "A[w/phi]", x);
                      return (grad(phi, x, s) + w.eval(x) / a) * (-1.0 / ph);
                  },
                  dom};
    return {std::move(W), std::move(W0), std::move(Q)};
}

QuaternionField build_W_from_W0(const ScalarField& W0, const ScalarField& phi, const ScalarField& h,
                                const BoxDomain& region, const QuadratureSpec& quad, const DiffScheme& s,
                                double eps) {
    const BoxDomain dom = W0.domain.intersect(phi.domain);
    ScalarField ratio{[W0, phi, eps](const Point3& x) { return W0.eval(x) / guarded(phi.eval(x), eps, "phi", x); },
                      dom};
    VectorField flux{[ratio, phi, s](const Point3& x) {
                         const Complex ph = phi.eval(x);
                         return grad(ratio, x, s) * (ph * ph);
                     },
                     dom};
    const VectorField Bf = operator_B(flux, region, quad);
    const VectorField rotB = rot_field(VectorField{Bf.eval, dom}, s);
    return {[W0, phi, h, rotB, s, eps](const Point3& x) {
                const Complex ph = guarded(phi.eval(x), eps, "phi", x);
                return Biquaternion(W0.eval(x), (rotB.eval(x) + grad(h, x, s)) * (-1.0 / ph));
            },
            dom};
}

ScalarField build_W0_from_W(const VectorField& Wv, const ScalarField& phi, const Point3& base, Complex C,
                            const QuadratureSpec& quad, const DiffScheme& s, double eps) {
    const BoxDomain dom = Wv.domain.intersect(phi.domain);
    VectorField scaled{[Wv, phi](const Point3& x) { return Wv.eval(x) * phi.eval(x); }, dom};
    VectorField integrand{[scaled, phi, s, eps](const Point3& x) {
                              const Complex ph = guarded(phi.eval(x), eps, "phi", x);
                              return rot(scaled, x, s) / (ph * ph);
                          },
                          dom};
    const ScalarField A = operator_A(integrand, base, C, quad);
    return {[A, phi](const Point3& x) { return -phi.eval(x) * A.eval(x); }, dom};
}

Biquaternion euler_residual(const QuaternionField& W, const VectorField& Q1, const Point3& p, const DiffScheme& s) {
    return dirac(W, p, s) + Biquaternion(detail::eval_checked(Q1, p)) * detail::eval_checked(W, p).conj();
}

VectorField q_from_scw(const QuaternionField& W, const DiffScheme& s, double eps) {
    return cole_hopf(SchrodingerInstance{scalar_part(W), constant_field(0.0, W.domain)}, s, eps).Q;
}

QuaternionField w_from_q_pair(const VectorField& Q, const VectorField& Q1, const ScalarField& h, const Point3& base,
                              const BoxDomain& region, const QuadratureSpec& quad, const DiffScheme& s) {
    const BoxDomain dom = Q.domain.intersect(Q1.domain);
    const ScalarField AQ = operator_A(Q, base, 0.0, quad);
    const ScalarField AQ1 = operator_A(Q1, base, 0.0, quad);
    // exp(-2A[Q1]) grad exp(-A[Q] + A[Q1]) = -(Q - Q1) exp(-A[Q] - A[Q1]).
    VectorField source{[Q, Q1, AQ, AQ1](const Point3& x) {
                           return (Q.eval(x) - Q1.eval(x)) * (-std::exp(-AQ.eval(x) - AQ1.eval(x)));
                       },
                       dom};
    const VectorField Bs = operator_B(source, region, quad);
    const VectorField rotB = rot_field(VectorField{Bs.eval, dom}, s);
    return {[AQ, AQ1, rotB, h, s](const Point3& x) {
                const Vector3c brace = rotB.eval(x) + grad(h, x, s);
                return Biquaternion(std::exp(-AQ.eval(x)), brace * (-std::exp(AQ1.eval(x))));
            },
            dom};
}

QuaternionField w_from_q_pair(const RiccatiInstance& inst, const RiccatiInstance& inst1, const ScalarField& h,
                              const Point3& base, const BoxDomain& region, const std::vector<Point3>& check_points,
                              const QuadratureSpec& quad, const DiffScheme& s, double q_tol) {
    for (const Point3& p : check_points) {
        const double gap = std::abs(inst.q.at(p) - inst1.q.at(p));
        if (gap > q_tol) {
            std::ostringstream msg;
            msg << "w_from_q_pair: the two instances have different potentials at " << to_string(p)
                << " (|q - q1| = " << gap << ")";
            throw PreconditionError(msg.str());
        }
    }
    return w_from_q_pair(inst.Q, inst1.Q, h, base, region, quad, s);
}

Biquaternion picard_lhs(const VectorField& Q1, const VectorField& Q2, const VectorField& Q3, const VectorField& Q4,
                        const Point3& p, const DiffScheme& s, const PicardOptions& opt) {
    auto term = [&](const VectorField& A, const VectorField& B) {
        VectorField diff{[A, B](const Point3& x) { return A.eval(x) - B.eval(x); }, A.domain.intersect(B.domain)};
        const Vector3c a = detail::eval_checked(A, p);
        const Vector3c b = detail::eval_checked(B, p);
        Biquaternion num = dirac(as_quaternion(diff), p, s);
        if (opt.cross_terms) num -= Biquaternion(cross(a, b) * 2.0);
        const Biquaternion den(a - b);
        return opt.side == QuotientSide::Right ? right_divide(num, den) : left_divide(num, den);
    };
    return term(Q1, Q2) + term(Q3, Q4) - term(Q1, Q4) - term(Q3, Q2);
}

}  // namespace riccati3d
