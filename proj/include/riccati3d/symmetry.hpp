#pragma once

#include <array>
#include <functional>

#include "riccati3d/fields.hpp"

namespace riccati3d {

/// Coefficients a1..a10 of the ten-parameter symmetry generator (a[0] is a1).
struct GeneratorParams {
    std::array<double, 10> a{};

    static GeneratorParams single(int index, double value = 1.0);
    double& operator()(int index) { return a.at(static_cast<std::size_t>(index - 1)); }
    double operator()(int index) const { return a.at(static_cast<std::size_t>(index - 1)); }
};

/// Coefficients (xi, eta, tau, phi, psi, zeta) of the generator at (p, Q).
std::array<double, 6> vhat_apply(const GeneratorParams& params, const Point3& p, const Vec3& Q);

/// Left side of the determining equation for q. Throws NonRealPotential if q is complex at p or
/// at a stencil point.
double determining_residual(const GeneratorParams& params, const ScalarField& q, const Point3& p,
                            const DiffScheme& s = {});

/// Parameters of the table row v_k (k = 1..10) as written in the table.
GeneratorParams table_generator(int k);
/// Parameters of the generator whose flow is the group G_k. For k = 4, 5, 6 this is -v_k, because
/// the rotation matrices turn the other way.
GeneratorParams flow_generator(int k);

/// Potential of the table row k built from a two-argument function:
/// k=1..3: F(remaining coordinates in order); k=4..6: F(axis coordinate, distance to the axis);
/// k=7: x^-2 F(y/x, z/x); k=8..10: r^-4 F(two remaining coordinates over r^2).
ScalarField invariant_potential(int k, std::function<double(double, double)> F);

struct GroupElement {
    int k = 1;
    double lambda = 0.0;

    GroupElement inverse() const { return {k, -lambda}; }
};

/// alpha(x, r, lambda) = r^2 lambda^2 - 2 x lambda + 1.
inline double alpha(double x, double r, double lambda) { return r * r * lambda * lambda - 2.0 * x * lambda + 1.0; }
/// c(x, y) = 1 - 2 <x, y>.
inline double c_bilinear(const Vec3& x, const Vec3& y) { return 1.0 - 2.0 * dot(x, y); }

/// Rotation matrices of G4, G5, G6 (index 1, 2, 3), row-major.
std::array<std::array<double, 3>, 3> rotation_matrix(int index, double lambda);

inline constexpr double kAxisTol = 1e-14;

struct GroupImage {
    Point3 x;
    Vec3 Q;
};

/// (x~, Q~) for the group element. For k = 8, 9, 10 the point formula on the moving axis is used
/// when the squared distance to that axis is <= kAxisTol. Throws PoleError on a vanishing denominator.
GroupImage group_act(const GroupElement& g, const Point3& p, const Vec3& Q);
/// Point part only (does not need Q).
Point3 group_act_point(const GroupElement& g, const Point3& p);

enum class TransportFormula {
    /// Closed-form transported solutions with the conical cases written via the preimage
    /// point; equal to the pushforward.
    Reconciled,
    /// The conical formulas exactly as originally printed, including the alpha(-z) argument in the
    /// second component of the k=8 formula and the (1 - x lambda)^2 factors with the (0, 0, .)
    /// argument on the axes.
    AsPrinted,
};

/// Transported solution Q^(k). The returned field is defined where the preimage point is admitted
/// by Q's domain; both live on Q's domain box.
VectorField transport_solution(const GroupElement& g, const VectorField& Q,
                               TransportFormula formula = TransportFormula::Reconciled);

/// Q~(x~) with (x~, Q~) = group_act(g, x, Q(x)) and x = group_act(g^-1, x~).
VectorField pushforward_solution(const GroupElement& g, const VectorField& Q);

}  // namespace riccati3d
