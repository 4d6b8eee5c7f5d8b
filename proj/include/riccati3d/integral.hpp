#pragma once

#include <functional>
#include <vector>

#include "riccati3d/fields.hpp"

namespace riccati3d {

enum class LineRule { AdaptiveSimpson, GaussLegendre };

struct QuadratureSpec {
    LineRule line_rule = LineRule::AdaptiveSimpson;
    /// Absolute tolerance of the adaptive rule, per segment.
    double abs_tol = 1e-10;
    /// Budget of integrand evaluations per segment for the adaptive rule.
    int max_evaluations = 200000;
    /// Number of nodes of the fixed Gauss-Legendre rule.
    int gauss_order = 24;
    /// Midpoint cells per axis of the volume rule.
    int volume_resolution = 64;

    void validate() const;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Integral of f over [a, b] (a > b allowed). Throws QuadratureFailure when the adaptive budget is exhausted.
Complex integrate_line(const std::function<Complex(double)>& f, double a, double b, const QuadratureSpec& q);

/// Scalar potential of a curl-free field, reconstructed by integrating from `base` along the
/// x-leg (., y0, z0), then the y-leg (x, ., z0), then the z-leg (x, y, .), plus the constant C.
///
/// A path sample landing on an excluded point raises DomainError; the path is not deformed.
ScalarField operator_A(const VectorField& F, const Point3& base, Complex C = 0.0, const QuadratureSpec& q = {});

/// Largest |rot F| seen at `samples` points along each leg of the A-path from base to target.
double path_rot_defect(const VectorField& F, const Point3& base, const Point3& target, int samples = 16,
                       const DiffScheme& s = {});

/// Integral over the box [lower, upper] of 1/|x - y| dy (closed form, no quadrature).
double box_newton_potential(const Point3& x, const Point3& lower, const Point3& upper);

/// Newtonian volume potential B[F](x) = (1/4 pi) int_region F(y) / |x - y| dy, componentwise.
///
/// F is sampled once at the midpoints of a volume_resolution^3 grid over the (bounded) region box;
/// cells whose midpoint the region excludes contribute zero. For x inside the box the kernel
/// singularity is subtracted: B[F](x) = F(x) B[1](x) + sum_c (F_c - F(x)) |cell| / (4 pi |x - y_c|),
/// with B[1] from box_newton_potential, so the result is smooth in x and keeps the local
/// -F contribution to the Laplacian.
VectorField operator_B(const VectorField& F, const BoxDomain& region, const QuadratureSpec& q = {});

}  // namespace riccati3d
