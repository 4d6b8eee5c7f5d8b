#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riccati3d/solutions.hpp"
#include "riccati3d/symmetry.hpp"

namespace riccati3d {

/// Tensor grid over [lower, upper] with n points per axis (n = 1 puts the point at the lower bound).
struct Grid {
    Point3 lower;
    Point3 upper;
    std::array<int, 3> n{1, 1, 1};

    /// Parses "x0,x1,nx,y0,y1,ny,z0,z1,nz". Throws ConfigError on malformed input.
    static Grid parse(const std::string& text);
    std::size_t size() const;
    /// Row-major with x slowest and z fastest.
    std::vector<Point3> points() const;
};

/// A table of real columns on grid points; masked rows carry no values.
struct GridTable {
    std::vector<std::string> columns;
    struct Row {
        Point3 x;
        bool masked = false;
        std::vector<double> values;
    };
    std::vector<Row> rows;

    /// Largest |value| in the named column over unmasked rows (0 when none).
    double column_max(const std::string& name) const;
    std::size_t masked_count() const;

    std::string to_csv() const;
    /// Array of records with the CSV column names; masked rows have null values.
    std::string to_json() const;
};

/// Quantities for eval: any of "Q", "q", "psi", "residuals".
GridTable evaluate_on_grid(const CatalogSolution& sol, const Grid& grid, const std::vector<std::string>& fields,
                           const DiffScheme& s = {});

struct TransformSummary {
    GridTable table;
    double max_residual = 0.0;
    double max_discrepancy = 0.0;
    /// Largest gap between the formula as printed and the pushforward (k = 8..10 only).
    std::optional<double> max_printed_discrepancy;
};

/// Transported solution on the grid with its Riccati residual and the transport-vs-pushforward
/// discrepancy per row. Throws PreconditionError when q is not invariant under the group.
TransformSummary transform_on_grid(const CatalogSolution& sol, const GroupElement& g, const Grid& grid,
                                   const DiffScheme& s = {});

/// Largest |determining residual| of q for generator k at a few admitted points of its domain.
double invariance_defect(const ScalarField& q, int k, const DiffScheme& s = {});

/// Throws DomainError unless the grid box lies inside the domain box.
void require_grid_inside(const Grid& grid, const BoxDomain& domain);

}  // namespace riccati3d
