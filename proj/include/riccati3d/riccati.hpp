#pragma once

#include <utility>
#include <vector>

#include "riccati3d/fields.hpp"
#include "riccati3d/integral.hpp"

namespace riccati3d {

/// Default nodal-set guard for divisions by psi, phi, Sc W and A[w/phi].
inline constexpr double kZeroEps = 1e-10;

/// A pair (Q, q) claimed to satisfy DQ + |Q|^2 = q.
struct RiccatiInstance {
    VectorField Q;
    ScalarField q;
};

/// A pair (psi, q) claimed to satisfy (-Laplacian + q) psi = 0.
struct SchrodingerInstance {
    ScalarField psi;
    ScalarField q;
};

/// Scalar part -div Q + |Q|^2 - q and vector part rot Q.
struct RiccatiResidual {
    Complex scalar;
    Vector3c vector;

    double max_abs() const;
};

RiccatiResidual riccati_residual(const RiccatiInstance& inst, const Point3& p, const DiffScheme& s = {});
Complex schrodinger_residual(const SchrodingerInstance& inst, const Point3& p, const DiffScheme& s = {});

/// Q = -grad psi / psi. Throws ZeroCrossing from the returned field where |psi| <= eps.
RiccatiInstance cole_hopf(const SchrodingerInstance& inst, const DiffScheme& s = {}, double eps = kZeroEps);

/// psi = exp(-A[Q]) with A taken from `base` with constant C, so psi(base) = exp(-C).
SchrodingerInstance inverse_cole_hopf(const RiccatiInstance& inst, const Point3& base, Complex C = 0.0,
                                      const QuadratureSpec& quad = {});

enum class FactorizationForm {
    /// (D - M^Q)(D + Q C_H) and (D_r - Q)(D_r + M^Q C_H): both reduce to (-Laplacian + q) psi
    /// exactly when DQ + |Q|^2 = q.
    Consistent,
    /// (D + M^Q)(D - Q C_H) and (D_r + Q)(D_r - M^Q C_H), signs as originally printed. These
    /// reproduce the Schrodinger operator only for -DQ + |Q|^2 = q.
    AsPrinted,
};

struct FactorizationResidual {
    Biquaternion left;
    Biquaternion right;

    double max_abs() const;
};

/// Factorized operator applied to the probe psi, minus (-Laplacian + q) psi. For the consistent
/// form the left line equals psi (DQ + |Q|^2 - q) and the right line psi (D_r Q + |Q|^2 - q).
FactorizationResidual factorization_residual(const ScalarField& psi, const RiccatiInstance& inst, const Point3& p,
                                             const DiffScheme& s = {},
                                             FactorizationForm form = FactorizationForm::Consistent);

/// D W - (D phi / phi) conj(W).
Biquaternion vekua_residual(const QuaternionField& W, const ScalarField& phi, const Point3& p,
                            const DiffScheme& s = {}, double eps = kZeroEps);

struct ComponentResiduals {
    /// div[phi^2 grad(W0/phi)]
    Complex c1;
    /// rot[phi^-2 rot(phi W)]
    Vector3c c2;
};

ComponentResiduals component_residuals(const ScalarField& W0, const VectorField& Wv, const ScalarField& phi,
                                       const Point3& p, const DiffScheme& s = {}, double eps = kZeroEps);

/// D w + w (D phi / phi) for a purely vectorial w.
Biquaternion w_equation_residual(const VectorField& w, const ScalarField& phi, const Point3& p,
                                 const DiffScheme& s = {}, double eps = kZeroEps);
/// Same, rejecting fields with a scalar part (NotPureVector).
Biquaternion w_equation_residual(const QuaternionField& w, const ScalarField& phi, const Point3& p,
                                 const DiffScheme& s = {}, double eps = kZeroEps);

struct VekuaConstruction {
    QuaternionField W;
    ScalarField W0;
    VectorField Q;
};

/// W = (phi A[w/phi] - phi^-1 rot B[phi w] + grad h / phi) / 2, W0 = Sc W and
/// Q = -(grad phi + w / A[w/phi]) / phi. A is taken from `base` with constant C; B over `region`.
VekuaConstruction build_W_prop2(const VectorField& w, const ScalarField& phi, const ScalarField& h,
                                const Point3& base, Complex C, const BoxDomain& region,
                                const QuadratureSpec& quad = {}, const DiffScheme& s = {}, double eps = kZeroEps);

/// W = W0 - phi^-1 (rot B[phi^2 grad(W0/phi)] + grad h), with B over `region`.
QuaternionField build_W_from_W0(const ScalarField& W0, const ScalarField& phi, const ScalarField& h,
                                const BoxDomain& region, const QuadratureSpec& quad = {}, const DiffScheme& s = {},
                                double eps = kZeroEps);

/// W0 = -phi A[phi^-2 rot(phi W)], with A from `base` with constant C.
ScalarField build_W0_from_W(const VectorField& Wv, const ScalarField& phi, const Point3& base, Complex C = 0.0,
                            const QuadratureSpec& quad = {}, const DiffScheme& s = {}, double eps = kZeroEps);

/// D W + Q1 conj(W); vanishes for solutions of the first-order equation DW = -Q1 conj(W).
Biquaternion euler_residual(const QuaternionField& W, const VectorField& Q1, const Point3& p,
                            const DiffScheme& s = {});

/// Q = -D(Sc W) / Sc W.
VectorField q_from_scw(const QuaternionField& W, const DiffScheme& s = {}, double eps = kZeroEps);

/// W = exp(-A[Q]) - exp(A[Q1]) {rot B[exp(-2A[Q1]) grad exp(-A[Q - Q1])] + grad h}.
///
/// Both A integrals start at `base` with constant 0. Q and Q1 must be curl-free, which lets the
/// gradient inside B be evaluated as -(Q - Q1) exp(-A[Q - Q1]) without differencing.
QuaternionField w_from_q_pair(const VectorField& Q, const VectorField& Q1, const ScalarField& h, const Point3& base,
                              const BoxDomain& region, const QuadratureSpec& quad = {}, const DiffScheme& s = {});

/// As above, first checking at `check_points` that both instances share q (to `q_tol`) and throwing
/// PreconditionError otherwise.
QuaternionField w_from_q_pair(const RiccatiInstance& inst, const RiccatiInstance& inst1, const ScalarField& h,
                              const Point3& base, const BoxDomain& region, const std::vector<Point3>& check_points,
                              const QuadratureSpec& quad = {}, const DiffScheme& s = {}, double q_tol = 1e-8);

enum class QuotientSide { Right, Left };

struct PicardOptions {
    /// X / Y read as X Y^-1 (right) or Y^-1 X (left).
    QuotientSide side = QuotientSide::Right;
    /// Keep the -2 (Qi x Qj) corrections; dropping them gives the commutative 1-D pattern.
    bool cross_terms = true;
};

/// Four-term Picard expression; vanishes when all four fields solve the Riccati equation for one q.
/// Throws ZeroDivisor when one of the differences is not invertible at p.
Biquaternion picard_lhs(const VectorField& Q1, const VectorField& Q2, const VectorField& Q3, const VectorField& Q4,
                        const Point3& p, const DiffScheme& s = {}, const PicardOptions& opt = {});

}  // namespace riccati3d
