#include "riccati3d/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "riccati3d/parallel.hpp"
#include "riccati3d/sampling.hpp"

namespace riccati3d {

Grid Grid::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 9) throw ConfigError("grid: expected x0,x1,nx,y0,y1,ny,z0,z1,nz, got '" + text + "'");
    Grid g;
    for (int a = 0; a < 3; ++a) {
        try {
            std::size_t used = 0;
            g.lower[a] = std::stod(parts[3 * a], &used);
            g.upper[a] = std::stod(parts[3 * a + 1]);
            const long n = std::stol(parts[3 * a + 2]);
            if (n < 1 || n > 100000) throw ConfigError("grid: point counts must be in 1..100000");
            g.n[static_cast<std::size_t>(a)] = static_cast<int>(n);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("grid: malformed number in '" + text + "'");
        }
        if (!std::isfinite(g.lower[a]) || !std::isfinite(g.upper[a]) || g.upper[a] < g.lower[a]) {
            throw ConfigError("grid: bounds must be finite with lower <= upper");
        }
    }
    return g;
}

std::size_t Grid::size() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]) * static_cast<std::size_t>(n[2]);
}

std::vector<Point3> Grid::points() const {
    auto coord = [this](int axis, int i) {
        const int m = n[static_cast<std::size_t>(axis)];
        if (m == 1) return lower[axis];
        if (i == m - 1) return upper[axis];
        return lower[axis] + (upper[axis] - lower[axis]) * static_cast<double>(i) / (m - 1);
    };
    std::vector<Point3> out;
    out.reserve(size());
    for (int i = 0; i < n[0]; ++i) {
        for (int j = 0; j < n[1]; ++j) {
            for (int k = 0; k < n[2]; ++k) out.push_back({coord(0, i), coord(1, j), coord(2, k)});
        }
    }
    return out;
}

double GridTable::column_max(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw PreconditionError("no column '" + name + "'");
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    double m = 0.0;
    for (const Row& r : rows) {
        if (!r.masked) m = std::max(m, std::abs(r.values[idx]));
    }
    return m;
}

std::size_t GridTable::masked_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.masked; }));
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void push_complex(std::vector<std::string>& cols, const std::string& name) {
    cols.push_back("Re_" + name);
    cols.push_back("Im_" + name);
}

void push_value(std::vector<double>& vals, Complex z) {
    vals.push_back(z.real());
    vals.push_back(z.imag());
}

/// Fills rows in parallel; any library error at a point masks that row.
void fill_rows(GridTable& table, const std::vector<Point3>& pts,
               const std::function<std::vector<double>(const Point3&)>& row) {
    table.rows.assign(pts.size(), {});
    parallel_for(pts.size(), [&](std::size_t i) {
        GridTable::Row& r = table.rows[i];
        r.x = pts[i];
        try {
            r.values = row(pts[i]);
            for (double v : r.values) {
                if (!std::isfinite(v)) throw DomainError("non-finite value");
            }
        } catch (const Error&) {
            r.masked = true;
            r.values.clear();
        }
    });
}

}  // namespace

std::string GridTable::to_csv() const {
    std::string out = "x,y,z";
    for (const auto& c : columns) out += "," + c;
    out += ",masked\n";
    for (const Row& r : rows) {
        out += num(r.x.x) + "," + num(r.x.y) + "," + num(r.x.z);
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out += ",";
            if (!r.masked) out += num(r.values[i]);
        }
        out += r.masked ? ",1\n" : ",0\n";
    }
    return out;
}

std::string GridTable::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
        nlohmann::ordered_json rec;
        rec["x"] = r.x.x;
        rec["y"] = r.x.y;
        rec["z"] = r.x.z;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (r.masked) {
                rec[columns[i]] = nullptr;
            } else {
                rec[columns[i]] = r.values[i];
            }
        }
        rec["masked"] = r.masked ? 1 : 0;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

void require_grid_inside(const Grid& grid, const BoxDomain& domain) {
    for (int a = 0; a < 3; ++a) {
        if (grid.lower[a] < domain.lower()[a] || grid.upper[a] > domain.upper()[a]) {
            throw DomainError("grid " + to_string(grid.lower) + " .. " + to_string(grid.upper) +
                              " is not inside the domain box " + to_string(domain.lower()) + " .. " +
                              to_string(domain.upper()));
        }
    }
}

GridTable evaluate_on_grid(const CatalogSolution& sol, const Grid& grid, const std::vector<std::string>& fields,
                           const DiffScheme& s) {
    const BoxDomain& dom = sol.inst.Q.domain;
    require_grid_inside(grid, dom);
    bool want_Q = false, want_q = false, want_psi = false, want_res = false;
    for (const auto& f : fields) {
        if (f == "Q") {
            want_Q = true;
        } else if (f == "q") {
            want_q = true;
        } else if (f == "psi") {
            want_psi = true;
        } else if (f == "residuals") {
            want_res = true;
        } else {
            throw ConfigError("unknown field '" + f + "' (expected Q, q, psi, residuals)");
        }
    }
    if (want_psi && !sol.psi) throw ConfigError("solution '" + sol.name + "' has no Schrodinger partner psi");

    GridTable table;
    if (want_Q) {
        for (const char* c : {"u", "v", "w"}) push_complex(table.columns, c);
    }
    if (want_q) push_complex(table.columns, "q");
    if (want_psi) push_complex(table.columns, "psi");
    if (want_res) {
        for (const char* c : {"resid_sc", "resid_rx", "resid_ry", "resid_rz"}) push_complex(table.columns, c);
        if (sol.psi) push_complex(table.columns, "resid_schr");
    }

    fill_rows(table, grid.points(), [&](const Point3& p) {
        std::vector<double> vals;
        const Vector3c Q = sol.inst.Q.at(p);
        if (want_Q) {
            for (int i = 0; i < 3; ++i) push_value(vals, Q[i]);
        }
        if (want_q) push_value(vals, sol.inst.q.at(p));
        if (want_psi) push_value(vals, sol.psi->at(p));
        if (want_res) {
            const RiccatiResidual r = riccati_residual(sol.inst, p, s);
            push_value(vals, r.scalar);
            for (int i = 0; i < 3; ++i) push_value(vals, r.vector[i]);
            if (sol.psi) push_value(vals, schrodinger_residual({*sol.psi, sol.inst.q}, p, s));
        }
        return vals;
    });
    return table;
}

double invariance_defect(const ScalarField& q, int k, const DiffScheme& s) {
    const GeneratorParams gen = table_generator(k);
    const BoxDomain& d = q.domain;
    Point3 lo = d.lower(), hi = d.upper();
    for (int a = 0; a < 3; ++a) {
        if (!std::isfinite(lo[a])) lo[a] = -2.0;
        if (!std::isfinite(hi[a])) hi[a] = 2.0;
    }
    const auto pts = sample_points(d, lo, hi, 20, 7, [&](const Point3& p) {
        for (int a = 0; a < 3; ++a) {
            const Vec3 e = unit_vector(a) * (2.0 * s.step(p[a]) + 1e-12);
            if (!d.admits(p + e) || !d.admits(p - e)) return false;
        }
        return true;
    });
    double m = 0.0;
    for (const Point3& p : pts) m = std::max(m, std::abs(determining_residual(gen, q, p, s)));
    return m;
}

TransformSummary transform_on_grid(const CatalogSolution& sol, const GroupElement& g, const Grid& grid,
                                   const DiffScheme& s) {
    if (g.k < 1 || g.k > 10) throw ConfigError("group index must be in 1..10");
    require_grid_inside(grid, sol.inst.Q.domain);
    const double defect = invariance_defect(sol.inst.q, g.k, s);
    if (defect > 1e-6) {
        std::ostringstream msg;
        msg << "the potential of '" << sol.name << "' is not invariant under G" << g.k
            << " (determining residual " << defect << ")";
        throw PreconditionError(msg.str());
    }
    const VectorField Qt = transport_solution(g, sol.inst.Q);
    const VectorField Pf = pushforward_solution(g, sol.inst.Q);
    const bool conical = g.k >= 8;
    std::optional<VectorField> printed;
    if (conical) printed = transport_solution(g, sol.inst.Q, TransportFormula::AsPrinted);
    const RiccatiInstance inst{Qt, sol.inst.q};

    TransformSummary out;
    GridTable& table = out.table;
    for (const char* c : {"u", "v", "w"}) push_complex(table.columns, c);
    for (const char* c : {"resid_sc", "resid_rx", "resid_ry", "resid_rz"}) push_complex(table.columns, c);
    table.columns.push_back("discrepancy");
    if (conical) table.columns.push_back("printed_discrepancy");

    fill_rows(table, grid.points(), [&](const Point3& p) {
        std::vector<double> vals;
        const Vector3c Q = Qt.at(p);
        for (int i = 0; i < 3; ++i) push_value(vals, Q[i]);
        const RiccatiResidual r = riccati_residual(inst, p, s);
        push_value(vals, r.scalar);
        for (int i = 0; i < 3; ++i) push_value(vals, r.vector[i]);
        vals.push_back(max_abs(Q - Pf.eval(p)));
        if (conical) vals.push_back(max_abs(printed->eval(p) - Pf.eval(p)));
        return vals;
    });

    for (const char* c : {"resid_sc", "resid_rx", "resid_ry", "resid_rz"}) {
        out.max_residual = std::max({out.max_residual, table.column_max(std::string("Re_") + c),
                                     table.column_max(std::string("Im_") + c)});
    }
    out.max_discrepancy = table.column_max("discrepancy");
    if (conical) out.max_printed_discrepancy = table.column_max("printed_discrepancy");
    return out;
}

}  // namespace riccati3d
