#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riccati3d/riccati.hpp"

namespace riccati3d {

struct RotationalParams {
    double k = 1.0;
    double c = 0.0;
    /// Normalization of psi.
    double C = 1.0;
    /// Distance kept from the singular cylinder rho = e^c.
    double margin = 0.1;
    /// Inner radius excluded around the z axis.
    double inner = 0.5;
};

struct ConicalParams {
    double C1 = 0.0;
    double C2 = 2.718281828459045;
    double C = 1.0;
    /// Distance kept from the z axis and from the cone-like set C2 rho^2 = r^4.
    double margin = 0.1;
    double inner = 0.5;
    double outer = 3.0;
};

/// A catalogued exact solution: the Riccati instance, its Schrodinger partner when defined, and the
/// base point the paper uses when building psi through A.
struct CatalogSolution {
    std::string name;
    RiccatiInstance inst;
    std::optional<ScalarField> psi;
    Point3 base{1.0, 0.0, 0.0};
};

/// Q = -k [(rho^2)^k + e^{2ck}] (x, y, 0) / (rho^2 [(rho^2)^k - e^{2ck}]), q = k^2 / rho^2 and
/// psi = C [(rho^2)^k - e^{2ck}] / ((rho^2)^{k/2} (1 - e^{2ck})). psi is omitted when c k = 0.
/// Domain: [-3,3]^2 x [-2,2] minus rho < inner and |rho - e^c| < margin.
CatalogSolution rotational(const RotationalParams& params);
/// The Schrodinger partner alone; PreconditionError when c k = 0.
ScalarField rotational_psi(const RotationalParams& params);

/// u(rho) = -(k/rho) (rho^{2k} + e^{2ck}) / (rho^{2k} - e^{2ck}). Throws DomainError on rho <= 0 or at the pole.
std::function<double(double)> reduced_radial(const RotationalParams& params);

/// Conical solution with q = (C1 / (2 r^2))^2.
/// Domain: [-3,3]^3 minus r < inner, r > outer, rho < margin and points within about margin of
/// C2 rho^2 = r^4. psi is omitted when ln C2 = 0.
CatalogSolution conical(const ConicalParams& params);

/// Harmonic seeds with q = 0: "x", "y", "z", "sum" (x+y+z), "xyz", "xy", "sinexp" (sin x e^y),
/// optionally with an additive shift (psi + shift). Domain: [-3,3]^3 minus points within about
/// margin of the nodal set.
struct HarmonicSeed {
    std::string id;
    ScalarField psi;
    VectorField grad;
};

HarmonicSeed harmonic_seed(const std::string& id, double shift = 0.0, double margin = 0.1);
std::vector<std::string> harmonic_seed_ids();

/// Q = -grad psi / psi (analytic gradient), q = 0. Throws ZeroCrossing from Q where |psi| <= eps.
CatalogSolution harmonic_family(const HarmonicSeed& seed, double eps = kZeroEps);

struct CatalogParams {
    RotationalParams rotational;
    ConicalParams conical;
    double harmonic_shift = 0.0;
    double margin = 0.1;
};

/// Lookup by id: "rotational", "conical" or "harmonic:<seed>". Throws PreconditionError on unknown ids.
CatalogSolution catalog_solution(const std::string& id, const CatalogParams& params);

}  // namespace riccati3d
