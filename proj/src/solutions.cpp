#include "riccati3d/solutions.hpp"

#include <cmath>

namespace riccati3d {

namespace {

double rho2_of(const Point3& p) { return p.x * p.x + p.y * p.y; }

}  // namespace

CatalogSolution rotational(const RotationalParams& P) {
    const double k = P.k;
    const double E = std::exp(2.0 * P.c * k);
    const double rs = std::exp(P.c);
    BoxDomain dom({-3.0, -3.0, -2.0}, {3.0, 3.0, 2.0}, [P, rs](const Point3& p) {
        const double rho = std::sqrt(rho2_of(p));
        return rho < P.inner || std::abs(rho - rs) < P.margin;
    });
    VectorField Q{[k, E](const Point3& p) -> Vector3c {
                      const double r2 = rho2_of(p);
                      const double pk = std::pow(r2, k);
                      const double den = r2 * (pk - E);
                      if (r2 == 0.0 || den == 0.0) throw DomainError("rotational Q is singular at " + to_string(p));
                      const double f = -k * (pk + E) / den;
                      return {f * p.x, f * p.y, 0.0};
                  },
                  dom};
    ScalarField q{[k](const Point3& p) -> Complex {
                      const double r2 = rho2_of(p);
                      if (r2 == 0.0) throw DomainError("rotational q is singular on the z axis");
                      return k * k / r2;
                  },
                  dom};
    CatalogSolution out{"rotational", {std::move(Q), std::move(q)}, std::nullopt, {1.0, 0.0, 0.0}};
    if (P.c * k != 0.0) out.psi = rotational_psi(P);
    return out;
}

ScalarField rotational_psi(const RotationalParams& P) {
    if (P.c * P.k == 0.0) throw PreconditionError("rotational psi needs c k != 0 (normalization 1 - e^{2ck} vanishes)");
    const double k = P.k;
    const double E = std::exp(2.0 * P.c * k);
    const double C = P.C;
    const double rs = std::exp(P.c);
    BoxDomain dom({-3.0, -3.0, -2.0}, {3.0, 3.0, 2.0}, [P, rs](const Point3& p) {
        const double rho = std::sqrt(rho2_of(p));
        return rho < P.inner || std::abs(rho - rs) < P.margin;
    });
    return {[k, E, C](const Point3& p) -> Complex {
                const double r2 = rho2_of(p);
                if (r2 == 0.0) throw DomainError("rotational psi is singular on the z axis");
                return C * (std::pow(r2, k) - E) / (std::pow(r2, 0.5 * k) * (1.0 - E));
            },
            dom};
}

std::function<double(double)> reduced_radial(const RotationalParams& P) {
    const double k = P.k;
    const double E = std::exp(2.0 * P.c * k);
    return [k, E](double rho) {
        if (!(rho > 0.0)) throw DomainError("reduced radial solution needs rho > 0");
        const double pk = std::pow(rho, 2.0 * k);
        if (pk == E) throw DomainError("reduced radial solution has a pole at rho = e^c");
        return -(k / rho) * (pk + E) / (pk - E);
    };
}

CatalogSolution conical(const ConicalParams& P) {
    if (!(P.C2 > 0.0)) throw PreconditionError("conical solution needs C2 > 0");
    const double C1 = P.C1;
    const double C2 = P.C2;
    const double sq = std::sqrt(C2);
    BoxDomain dom({-3.0, -3.0, -3.0}, {3.0, 3.0, 3.0}, [P, sq](const Point3& p) {
        const double r2 = dot(p, p);
        const double r = std::sqrt(r2);
        const double rho = std::sqrt(rho2_of(p));
        if (r < P.inner || r > P.outer || rho < P.margin) return true;
        // Distance estimate to sqrt(C2) rho = r^2, via |g| / |grad g|.
        const double g = sq * rho - r2;
        const Vec3 gg{sq * p.x / rho - 2.0 * p.x, sq * p.y / rho - 2.0 * p.y, -2.0 * p.z};
        return std::abs(g) < P.margin * norm(gg);
    });
    VectorField Q{[C1, C2](const Point3& p) -> Vector3c {
                      const double x = p.x, y = p.y, z = p.z;
                      const double r2 = dot(p, p);
                      const double rho2 = rho2_of(p);
                      if (r2 == 0.0 || rho2 == 0.0) throw DomainError("conical Q is singular at " + to_string(p));
                      const double L = std::log(C2 * rho2 / (r2 * r2));
                      if (L == 0.0) throw DomainError("conical Q is singular at " + to_string(p));
                      const double r4 = r2 * r2;
                      const double lead = 2.0 * (rho2 - z * z) / (r2 * rho2 * L);
                      return {-C1 * x * z / r4 + x * lead + x / r2, -C1 * y * z / r4 + y * lead + y / r2,
                              C1 * (rho2 - z * z) / (2.0 * r4) + 4.0 * z / (r2 * L) + z / r2};
                  },
                  dom};
    ScalarField q{[C1](const Point3& p) -> Complex {
                      const double r2 = dot(p, p);
                      if (r2 == 0.0) throw DomainError("conical q is singular at the origin");
                      const double a = C1 / (2.0 * r2);
                      return a * a;
                  },
                  dom};
    CatalogSolution out{"conical", {std::move(Q), std::move(q)}, std::nullopt, {1.0, 0.0, 0.0}};
    if (std::log(C2) != 0.0) {
        const double C = P.C;
        out.psi = ScalarField{[C1, C2, C](const Point3& p) -> Complex {
                                  const double r2 = dot(p, p);
                                  const double rho2 = rho2_of(p);
                                  if (r2 == 0.0 || rho2 == 0.0) {
                                      throw DomainError("conical psi is singular at " + to_string(p));
                                  }
                                  return C * std::log(C2 * rho2 / (r2 * r2)) /
                                         (std::log(C2) * std::sqrt(r2) * std::exp(C1 * p.z / (2.0 * r2)));
                              },
                              dom};
    }
    return out;
}

std::vector<std::string> harmonic_seed_ids() { return {"x", "y", "z", "sum", "xyz", "xy", "sinexp"}; }

HarmonicSeed harmonic_seed(const std::string& id, double shift, double margin) {
    std::function<Complex(const Point3&)> f;
    std::function<Vector3c(const Point3&)> g;
    if (id == "x") {
        f = [](const Point3& p) { return Complex(p.x); };
        g = [](const Point3&) { return Vector3c{1.0, 0.0, 0.0}; };
    } else if (id == "y") {
        f = [](const Point3& p) { return Complex(p.y); };
        g = [](const Point3&) { return Vector3c{0.0, 1.0, 0.0}; };
    } else if (id == "z") {
        f = [](const Point3& p) { return Complex(p.z); };
        g = [](const Point3&) { return Vector3c{0.0, 0.0, 1.0}; };
    } else if (id == "sum") {
        f = [](const Point3& p) { return Complex(p.x + p.y + p.z); };
        g = [](const Point3&) { return Vector3c{1.0, 1.0, 1.0}; };
    } else if (id == "xyz") {
        f = [](const Point3& p) { return Complex(p.x * p.y * p.z); };
        g = [](const Point3& p) { return Vector3c{p.y * p.z, p.x * p.z, p.x * p.y}; };
    } else if (id == "xy") {
        f = [](const Point3& p) { return Complex(p.x * p.y); };
        g = [](const Point3& p) { return Vector3c{p.y, p.x, 0.0}; };
    } else if (id == "sinexp") {
        f = [](const Point3& p) { return Complex(std::sin(p.x) * std::exp(p.y)); };
        g = [](const Point3& p) {
            return Vector3c{std::cos(p.x) * std::exp(p.y), std::sin(p.x) * std::exp(p.y), 0.0};
        };
    } else {
        throw PreconditionError("unknown harmonic seed '" + id + "'");
    }
    auto psi_eval = [f, shift](const Point3& p) { return f(p) + shift; };
    BoxDomain dom({-3.0, -3.0, -3.0}, {3.0, 3.0, 3.0}, [psi_eval, g, margin](const Point3& p) {
        const double v = std::abs(psi_eval(p));
        const double gn = max_abs(g(p)) * std::sqrt(3.0);
        return v == 0.0 || v < margin * gn;
    });
    return {id, ScalarField{psi_eval, dom}, VectorField{g, dom}};
}

CatalogSolution harmonic_family(const HarmonicSeed& seed, double eps) {
    const ScalarField psi = seed.psi;
    const VectorField g = seed.grad;
    VectorField Q{[psi, g, eps](const Point3& p) {
                      const Complex v = psi.eval(p);
                      if (!(std::abs(v) > eps)) throw ZeroCrossing("harmonic seed vanishes at " + to_string(p));
                      return g.eval(p) * (-1.0 / v);
                  },
                  psi.domain};
    return {"harmonic:" + seed.id, {std::move(Q), constant_field(0.0, psi.domain)}, seed.psi, {1.0, 1.0, 1.0}};
}

CatalogSolution catalog_solution(const std::string& id, const CatalogParams& params) {
    if (id == "rotational") {
        RotationalParams p = params.rotational;
        p.margin = params.margin;
        return rotational(p);
    }
    if (id == "conical") {
        ConicalParams p = params.conical;
        p.margin = params.margin;
        return conical(p);
    }
    const std::string prefix = "harmonic:";
    if (id.rfind(prefix, 0) == 0) {
        return harmonic_family(harmonic_seed(id.substr(prefix.size()), params.harmonic_shift, params.margin));
    }
    throw PreconditionError("unknown solution id '" + id + "'");
}

}  // namespace riccati3d
