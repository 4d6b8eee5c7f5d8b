#include "riccati3d/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"
#include "riccati3d/parallel.hpp"
#include "riccati3d/riccati.hpp"
#include "riccati3d/riccati1d.hpp"
#include "riccati3d/sampling.hpp"
#include "riccati3d/solutions.hpp"
#include "riccati3d/symmetry.hpp"

namespace riccati3d {

// ---------------------------------------------------------------------------------------------
// Configuration

namespace {

double parse_positive(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' needs a number, got '" + value + "'");
    }
    if (used != value.size() || !(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError("config: '" + key + "' must be a positive number, got '" + value + "'");
    }
    return v;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError("config: '" + key + "' needs a nonnegative integer, got '" + value + "'");
    }
    return std::stoull(value);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

void RunConfig::set(const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "h") {
        scheme.h = parse_positive(key, value);
    } else if (key == "order") {
        const auto o = parse_count(key, value);
        if (o != 2 && o != 4) throw ConfigError("config: 'order' must be 2 or 4");
        scheme.order = static_cast<int>(o);
    } else if (key == "poly_h") {
        poly_scheme.h = parse_positive(key, value);
    } else if (key == "abs_tol") {
        quad.abs_tol = parse_positive(key, value);
    } else if (key == "gauss_order") {
        quad.gauss_order = static_cast<int>(parse_count(key, value));
    } else if (key == "line_rule") {
        if (value == "simpson") {
            quad.line_rule = LineRule::AdaptiveSimpson;
        } else if (value == "gauss") {
            quad.line_rule = LineRule::GaussLegendre;
        } else {
            throw ConfigError("config: 'line_rule' must be simpson or gauss");
        }
    } else if (key == "max_evaluations") {
        quad.max_evaluations = static_cast<int>(parse_count(key, value));
    } else if (key == "volume_resolution") {
        quad.volume_resolution = static_cast<int>(parse_count(key, value));
    } else if (key == "seed") {
        seed = parse_count(key, value);
    } else if (key == "samples") {
        samples = parse_count(key, value);
    } else if (key == "margin") {
        margin = parse_positive(key, value);
    } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
        tolerances[key.substr(4)] = parse_positive(key, value);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
        }
        set(line.substr(0, eq), line.substr(eq + 1));
    }
}

void RunConfig::validate() const {
    try {
        scheme.validate();
        poly_scheme.validate();
        quad.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (samples < 1) throw ConfigError("config: samples must be positive");
    if (!(margin > 0.0)) throw ConfigError("config: margin must be positive");
}

std::map<std::string, std::string> echo_config(const RunConfig& c) {
    std::map<std::string, std::string> out;
    out["h"] = fmt(c.scheme.h);
    out["order"] = std::to_string(c.scheme.order);
    out["poly_h"] = fmt(c.poly_scheme.h);
    out["abs_tol"] = fmt(c.quad.abs_tol);
    out["line_rule"] = c.quad.line_rule == LineRule::AdaptiveSimpson ? "simpson" : "gauss";
    out["gauss_order"] = std::to_string(c.quad.gauss_order);
    out["max_evaluations"] = std::to_string(c.quad.max_evaluations);
    out["volume_resolution"] = std::to_string(c.quad.volume_resolution);
    out["seed"] = std::to_string(c.seed);
    out["samples"] = std::to_string(c.samples);
    out["margin"] = fmt(c.margin);
    for (const auto& [k, v] : c.tolerances) out["tol." + k] = fmt(v);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Report

std::string VerificationReport::to_json(bool include_seconds) const {
    nlohmann::ordered_json j;
    std::vector<CheckResult> sorted = checks;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : sorted) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        if (std::isfinite(c.max_abs_residual)) {
            e["max_abs_residual"] = c.max_abs_residual;
        } else {
            e["max_abs_residual"] = nullptr;
        }
        e["tolerance"] = c.tolerance;
        e["samples"] = c.samples;
        e["pass"] = c.pass;
        if (include_seconds) e["seconds"] = c.seconds;
        e["comparison"] = c.comparison == Comparison::AtMost ? "<=" : (c.comparison == Comparison::AtLeast ? ">=" : "info");
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["overall_pass"] = overall_pass;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_echo) cfg[k] = v;
    j["config_echo"] = std::move(cfg);
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
    std::vector<CheckResult> sorted = checks;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::size_t width = 10;
    for (const auto& c : sorted) width = std::max(width, c.name.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "check"
       << "  result  value        cmp  tolerance    samples  seconds\n";
    for (const auto& c : sorted) {
        const char* cmp = c.comparison == Comparison::AtMost ? "<=" : (c.comparison == Comparison::AtLeast ? ">=" : "--");
        os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.pass ? "PASS  " : "FAIL  ")
           << "  " << std::scientific << std::setprecision(3) << std::setw(11) << c.max_abs_residual << "  "
           << std::setw(3) << cmp << "  " << std::setw(11) << c.tolerance << "  " << std::setw(7) << c.samples
           << "  " << std::fixed << std::setprecision(3) << c.seconds;
        if (!c.note.empty()) os << "  " << c.note;
        os << "\n";
    }
    os << (overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return os.str();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------------------------
// Check runner

namespace {

struct Measurement {
    double value = 0.0;
    std::size_t samples = 0;
    std::string note;
};

class SuiteRunner {
public:
    SuiteRunner(const RunConfig& config, VerificationReport& report) : config_(config), report_(report) {}

    void add(const std::string& name, const std::string& key, double tolerance, Comparison cmp,
             const std::function<Measurement()>& body) {
        double tol = tolerance;
        if (auto it = config_.tolerances.find(name); it != config_.tolerances.end()) {
            tol = it->second;
        } else if (auto jt = config_.tolerances.find(key); jt != config_.tolerances.end()) {
            tol = jt->second;
        }
        CheckResult r;
        r.name = name;
        r.tolerance = tol;
        r.comparison = cmp;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Measurement m = body();
            r.max_abs_residual = m.value;
            r.samples = m.samples;
            r.note = m.note;
            if (cmp == Comparison::AtMost) {
                r.pass = std::isfinite(m.value) && m.value <= tol;
            } else if (cmp == Comparison::AtLeast) {
                r.pass = std::isfinite(m.value) && m.value >= tol;
            } else {
                r.pass = true;
            }
        } catch (const std::exception& e) {
            r.max_abs_residual = std::numeric_limits<double>::infinity();
            r.pass = cmp == Comparison::Info;
            r.note = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.overall_pass = report_.overall_pass && r.pass;
        report_.checks.push_back(std::move(r));
    }

    void at_most(const std::string& name, const std::string& key, double tol, const std::function<Measurement()>& f) {
        add(name, key, tol, Comparison::AtMost, f);
    }
    void at_least(const std::string& name, const std::string& key, double tol, const std::function<Measurement()>& f) {
        add(name, key, tol, Comparison::AtLeast, f);
    }
    void info(const std::string& name, const std::function<Measurement()>& f) {
        add(name, name, 0.0, Comparison::Info, f);
    }

    const RunConfig& config() const { return config_; }

private:
    const RunConfig& config_;
    VerificationReport& report_;
};

/// Max of f over points, evaluated in parallel and reduced in index order.
Measurement max_over(const std::vector<Point3>& pts, const std::function<double(const Point3&)>& f) {
    std::vector<double> vals(pts.size(), 0.0);
    parallel_for(pts.size(), [&](std::size_t i) { vals[i] = f(pts[i]); });
    double m = 0.0;
    for (double v : vals) m = std::isnan(v) ? std::numeric_limits<double>::infinity() : std::max(m, v);
    return {m, pts.size(), ""};
}

Measurement min_over(const std::vector<Point3>& pts, const std::function<double(const Point3&)>& f) {
    std::vector<double> vals(pts.size(), 0.0);
    parallel_for(pts.size(), [&](std::size_t i) { vals[i] = f(pts[i]); });
    double m = std::numeric_limits<double>::infinity();
    for (double v : vals) m = std::isnan(v) ? 0.0 : std::min(m, v);
    return {m, pts.size(), ""};
}

double vdist(const Vector3c& a, const Vector3c& b) { return max_abs(a - b); }

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (char ch : tag) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
    return h;
}

BoxDomain shrink(const BoxDomain& d, double by) {
    const Point3 lo = d.lower() + Vec3{by, by, by};
    const Point3 hi = d.upper() - Vec3{by, by, by};
    return d.with_bounds(lo, hi);
}

std::vector<Point3> domain_points(const BoxDomain& d, std::size_t n, std::uint64_t seed, const std::string& tag,
                                  const std::function<bool(const Point3&)>& accept = {}) {
    const BoxDomain s = shrink(d, 0.05);
    return sample_points(s, n, derive_seed(seed, tag), accept);
}

/// True when each leg of the A path from base to p stays in the admitted part of d.
bool path_admissible(const BoxDomain& d, const Point3& base, const Point3& p) {
    const Point3 corners[4] = {base, {p.x, base.y, base.z}, {p.x, p.y, base.z}, p};
    for (int leg = 0; leg < 3; ++leg) {
        const double len = norm(corners[leg + 1] - corners[leg]);
        const int n = std::max(2, static_cast<int>(len / 0.005));
        for (int i = 0; i <= n; ++i) {
            const Point3 q = corners[leg] + (static_cast<double>(i) / n) * (corners[leg + 1] - corners[leg]);
            if (!d.admits(q)) return false;
        }
    }
    return true;
}

Biquaternion random_biquaternion(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
}

/// Random quaternion polynomial of total degree <= 3 with complex coefficients.
QuaternionField random_polynomial(std::mt19937_64& rng, bool scalar_only = false) {
    struct Term {
        int a, b, c;
        Biquaternion coef;
    };
    std::vector<Term> terms;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 3; ++b) {
            for (int c = 0; a + b + c <= 3; ++c) {
                Biquaternion coef = random_biquaternion(rng);
                if (scalar_only) coef = Biquaternion(coef.scalar());
                terms.push_back({a, b, c, coef});
            }
        }
    }
    (void)u;
    return {[terms](const Point3& p) {
                Biquaternion acc;
                for (const Term& t : terms) {
                    acc += t.coef * (std::pow(p.x, t.a) * std::pow(p.y, t.b) * std::pow(p.z, t.c));
                }
                return acc;
            },
            BoxDomain::all_space()};
}

Biquaternion quaternion_partial(const QuaternionField& f, const Point3& p, int axis, const DiffScheme& s) {
    return partial(f, p, axis, s);
}

std::string tag_number(double v) {
    std::ostringstream os;
    os << v;
    std::string s = os.str();
    std::replace(s.begin(), s.end(), '.', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Suites

namespace {

/// p and its finite-difference stencil (two steps along each axis) are admitted by every domain.
bool stencil_ok(const Point3& p, const DiffScheme& s, std::initializer_list<const BoxDomain*> domains) {
    for (const BoxDomain* d : domains) {
        if (!d->admits(p)) return false;
        for (int a = 0; a < 3; ++a) {
            const double h = 2.0 * s.step(p[a]) + 1e-12;
            const Vec3 e = unit_vector(a) * h;
            if (!d->admits(p + e) || !d->admits(p - e)) return false;
        }
    }
    return true;
}

/// Stencil points for nested differences (two levels).
bool nested_stencil_ok(const Point3& p, const DiffScheme& s, const BoxDomain& d) {
    DiffScheme wide = s;
    wide.h = 2.0 * s.h;
    return stencil_ok(p, wide, {&d});
}

QuadratureSpec smooth_rule(const QuadratureSpec& q) {
    // A fixed rule depends smoothly on the path end, so differences of A-built fields stay clean.
    QuadratureSpec out = q;
    out.line_rule = LineRule::GaussLegendre;
    return out;
}

// --- algebra ---------------------------------------------------------------------------------

void algebra_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    R.at_most("algebra/basis_table", "basis", 0.0, [] {
        // e_i e_j = -delta_ij + eps_ijk e_k, e_0 the unit.
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                Biquaternion expect;
                if (i == 0) {
                    expect[j] = 1.0;
                } else if (j == 0) {
                    expect[i] = 1.0;
                } else if (i == j) {
                    expect[0] = -1.0;
                } else {
                    const int k = 6 - i - j;
                    const bool cyclic = (i % 3) + 1 == j;
                    expect[k] = cyclic ? 1.0 : -1.0;
                }
                const Biquaternion got = Biquaternion::basis(i) * Biquaternion::basis(j);
                worst = std::max(worst, distance(got, expect));
            }
        }
        return Measurement{worst, 16, ""};
    });

    auto random_relative = [&cfg](const std::string& tag, int n,
                                  const std::function<double(const Biquaternion&, const Biquaternion&,
                                                             const Biquaternion&)>& f) {
        std::mt19937_64 rng(derive_seed(cfg.seed, tag));
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const Biquaternion a = random_biquaternion(rng);
            const Biquaternion b = random_biquaternion(rng);
            const Biquaternion c = random_biquaternion(rng);
            worst = std::max(worst, f(a, b, c));
        }
        return Measurement{worst, static_cast<std::size_t>(n), "relative"};
    };

    R.at_most("algebra/associativity", "algebra", 1e-12, [&] {
        return random_relative("assoc", 1000, [](const auto& a, const auto& b, const auto& c) {
            return distance((a * b) * c, a * (b * c)) / (a.max_abs() * b.max_abs() * c.max_abs());
        });
    });
    R.at_most("algebra/distributivity", "algebra", 1e-12, [&] {
        return random_relative("distrib", 1000, [](const auto& a, const auto& b, const auto& c) {
            const double s = a.max_abs() * std::max(b.max_abs(), c.max_abs());
            const double left = distance(a * (b + c), a * b + a * c);
            const double right = distance((b + c) * a, b * a + c * a);
            return std::max(left, right) / s;
        });
    });
    R.at_most("algebra/conjugation_antihomomorphism", "algebra", 1e-12, [&] {
        return random_relative("conj", 1000, [](const auto& a, const auto& b, const auto&) {
            return distance((a * b).conj(), b.conj() * a.conj()) / (a.max_abs() * b.max_abs());
        });
    });
    R.at_most("algebra/modulus_multiplicative", "algebra", 1e-12, [&] {
        return random_relative("modulus", 1000, [](const auto& a, const auto& b, const auto&) {
            const double s = a.max_abs() * a.max_abs() * b.max_abs() * b.max_abs();
            return std::abs((a * b).modulus_sq() - a.modulus_sq() * b.modulus_sq()) / s;
        });
    });
    R.at_most("algebra/conjugate_product_is_modulus", "algebra", 1e-12, [&] {
        return random_relative("normal", 1000, [](const auto& a, const auto&, const auto&) {
            return distance(a * a.conj(), Biquaternion(a.modulus_sq())) / (a.max_abs() * a.max_abs());
        });
    });
    R.at_most("algebra/inverse", "algebra", 1e-12, [&] {
        return random_relative("inverse", 1000, [](const auto& a, const auto&, const auto&) {
            // Relative to the condition of a: |a| |a^-1|.
            const Biquaternion ai = a.inverse();
            return std::max(distance(a * ai, Biquaternion(1.0)), distance(ai * a, Biquaternion(1.0))) /
                   std::max(1.0, a.max_abs() * ai.max_abs());
        });
    });
    R.at_most("algebra/zero_divisor_rejected", "algebra", 0.0, [] {
        // 1 + i e1 has |x|^2 = 1 + i^2 = 0.
        const Biquaternion z(1.0, Complex(0.0, 1.0), 0.0, 0.0);
        double missed = 0.0;
        try {
            (void)z.inverse();
            missed = 1.0;
        } catch (const ZeroDivisor&) {
        }
        return Measurement{missed, 1, ""};
    });
}

// --- operators -------------------------------------------------------------------------------

void operators_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    const BoxDomain cube({-1, -1, -1}, {1, 1, 1});
    const DiffScheme ps = cfg.poly_scheme;

    auto polys = [&cfg](const std::string& tag, int count, bool scalar_only) {
        std::mt19937_64 rng(derive_seed(cfg.seed, tag));
        std::vector<QuaternionField> out;
        for (int i = 0; i < count; ++i) out.push_back(random_polynomial(rng, scalar_only));
        return out;
    };
    auto points = [&](const std::string& tag) { return sample_points(cube, cfg.samples, derive_seed(cfg.seed, tag)); };

    R.at_most("operators/dirac_squared", "operators", 1e-6, [&] {
        const auto fs = polys("d2", 5, false);
        const auto pts = points("d2");
        std::vector<QuaternionField> Dfs;
        for (const auto& f : fs) Dfs.push_back(dirac_field(f, ps));
        std::size_t i = 0;
        std::vector<std::size_t> idx(pts.size());
        for (auto& v : idx) v = i++ % fs.size();
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](std::size_t n) {
            const auto& f = fs[idx[n]];
            vals[n] = distance(dirac(Dfs[idx[n]], pts[n], ps), -laplacian(f, pts[n], ps));
        });
        return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), ""};
    });

    R.at_most("operators/leibniz", "operators", 1e-6, [&] {
        const auto fs = polys("leibniz_a", 5, false);
        const auto gs = polys("leibniz_b", 5, false);
        const auto pts = points("leibniz");
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](std::size_t n) {
            const auto& f = fs[n % fs.size()];
            const auto& g = gs[n % gs.size()];
            const Point3& p = pts[n];
            QuaternionField fg{[f, g](const Point3& x) { return f.eval(x) * g.eval(x); }, BoxDomain::all_space()};
            Biquaternion rhs = dirac(f, p, ps) * g.eval(p) + f.eval(p).conj() * dirac(g, p, ps);
            const Biquaternion fp = f.eval(p);
            for (int k = 0; k < 3; ++k) rhs -= 2.0 * (fp[k + 1] * quaternion_partial(g, p, k, ps));
            vals[n] = distance(dirac(fg, p, ps), rhs);
        });
        return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), ""};
    });

    R.at_most("operators/leibniz_scalar", "operators", 1e-6, [&] {
        const auto fs = polys("leibniz_s", 5, true);
        const auto gs = polys("leibniz_t", 5, false);
        const auto pts = points("leibniz_s");
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](std::size_t n) {
            const auto& f = fs[n % fs.size()];
            const auto& g = gs[n % gs.size()];
            const Point3& p = pts[n];
            QuaternionField fg{[f, g](const Point3& x) { return f.eval(x) * g.eval(x); }, BoxDomain::all_space()};
            const Biquaternion rhs = dirac(f, p, ps) * g.eval(p) + f.eval(p) * dirac(g, p, ps);
            vals[n] = distance(dirac(fg, p, ps), rhs);
        });
        return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), ""};
    });

    R.at_most("operators/conjugation_intertwines", "operators", 1e-6, [&] {
        const auto fs = polys("intertwine", 5, false);
        const auto pts = points("intertwine");
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](std::size_t n) {
            const auto& f = fs[n % fs.size()];
            QuaternionField fc{[f](const Point3& x) { return f.eval(x).conj(); }, BoxDomain::all_space()};
            vals[n] = distance(dirac(f, pts[n], ps).conj(), -dirac_right(fc, pts[n], ps));
        });
        return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), ""};
    });

    R.at_most("operators/decomposition", "operators", 1e-6, [&] {
        const auto fs = polys("decomp", 5, false);
        const auto pts = points("decomp");
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](std::size_t n) {
            const auto& f = fs[n % fs.size()];
            const Point3& p = pts[n];
            const ScalarField f0 = scalar_part(f);
            const VectorField fv = vector_part(f);
            const Complex d = div(fv, p, ps);
            const Vector3c g = grad(f0, p, ps);
            const Vector3c r = rot(fv, p, ps);
            const Biquaternion left(-d, g + r);
            const Biquaternion right(-d, g - r);
            vals[n] = std::max(distance(dirac(f, p, ps), left), distance(dirac_right(f, p, ps), right));
        });
        return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), ""};
    });

    R.at_most("operators/harmonic_sin_exp", "operators", 1e-6, [&] {
        const ScalarField f{[](const Point3& p) { return Complex(std::sin(p.x) * std::exp(p.y)); },
                            BoxDomain::all_space()};
        const QuaternionField fq = as_quaternion(f);
        const QuaternionField Df = dirac_field(fq, ps);
        const auto pts = points("harmonic");
        return max_over(pts, [&](const Point3& p) {
            return std::max(std::abs(laplacian(f, p, ps)), distance(dirac(Df, p, ps), Biquaternion()));
        });
    });

    // f = e^{ix} y + x y z with its analytic gradient.
    auto f_exact = [](const Point3& p) { return std::exp(Complex(0.0, p.x)) * p.y + p.x * p.y * p.z; };
    const VectorField grad_f{[](const Point3& p) {
                                 const Complex e = std::exp(Complex(0.0, p.x));
                                 return Vector3c(Complex(0.0, 1.0) * e * p.y + p.y * p.z, e + p.x * p.z, p.x * p.y);
                             },
                             BoxDomain::all_space()};
    const BoxDomain wide({-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5});

    R.at_most("operators/A_reconstruction", "A", 1e-9, [&] {
        const Point3 base{0.0, 0.0, 0.0};
        const ScalarField A = operator_A(grad_f, base, 0.0, cfg.quad);
        const auto pts = sample_points(wide, cfg.samples, derive_seed(cfg.seed, "A"));
        return max_over(pts, [&](const Point3& p) { return std::abs(A.eval(p) - (f_exact(p) - f_exact(base))); });
    });

    R.at_most("operators/grad_A", "operators", 1e-6, [&] {
        const ScalarField A = operator_A(grad_f, {0.2, -0.1, 0.3}, 1.5, smooth_rule(cfg.quad));
        const auto pts = sample_points(wide, cfg.samples, derive_seed(cfg.seed, "gradA"));
        return max_over(pts, [&](const Point3& p) { return vdist(grad(A, p, cfg.scheme), grad_f.eval(p)); });
    });

    // Uniform unit ball: B = R^2/2 - r^2/6 inside, R^3/(3r) outside.
    const VectorField ball{[](const Point3& y) {
                               return dot(y, y) <= 1.0 ? Vector3c(1.0, 0.0, 0.0) : Vector3c();
                           },
                           BoxDomain::all_space()};
    const BoxDomain ball_region({-1, -1, -1}, {1, 1, 1});
    R.at_most("operators/B_ball_center", "B_ball", 0.02, [&] {
        const VectorField B = operator_B(ball, ball_region, cfg.quad);
        const Vector3c v = B.eval({0.0, 0.0, 0.0});
        const double err = std::abs(v[0] - 0.5) / 0.5 + std::abs(v[1]) + std::abs(v[2]);
        return Measurement{err, 1, "relative"};
    });
    R.at_most("operators/B_ball_r2", "B_ball", 0.02, [&] {
        const VectorField B = operator_B(ball, ball_region, cfg.quad);
        const Vector3c v = B.eval({2.0, 0.0, 0.0});
        const double err = std::abs(v[0] - 1.0 / 6.0) / (1.0 / 6.0) + std::abs(v[1]) + std::abs(v[2]);
        return Measurement{err, 1, "relative"};
    });
    R.at_most("operators/B_zero", "B_zero", 0.0, [&] {
        const VectorField B = operator_B(zero_vector_field(), ball_region, cfg.quad);
        const auto pts = sample_points(wide, 10, derive_seed(cfg.seed, "Bzero"));
        return max_over(pts, [&](const Point3& p) { return max_abs(B.eval(p)); });
    });
}

// --- solutions -------------------------------------------------------------------------------

struct NamedInstance {
    std::string name;
    CatalogSolution sol;
};

std::vector<NamedInstance> rotational_instances(double margin) {
    std::vector<NamedInstance> out;
    for (double k : {1.0, 2.0}) {
        for (double c : {0.0, std::log(2.0) / 2.0}) {
            RotationalParams rp;
            rp.k = k;
            rp.c = c;
            rp.margin = margin;
            out.push_back({"rotational_k" + tag_number(k) + (c == 0.0 ? "_c0" : "_cln2half"), rotational(rp)});
        }
    }
    return out;
}

std::vector<NamedInstance> conical_instances(double margin) {
    std::vector<NamedInstance> out;
    for (double C1 : {0.0, 2.0}) {
        for (double C2 : {std::numbers::e, 2.0}) {
            ConicalParams cp;
            cp.C1 = C1;
            cp.C2 = C2;
            cp.margin = margin;
            out.push_back({"conical_C1_" + tag_number(C1) + (C2 == 2.0 ? "_C2_2" : "_C2_e"), conical(cp)});
        }
    }
    return out;
}

/// Schrodinger partner for the residual check: the catalog psi, or for c k = 0 the unnormalized
/// radial solution (rho^2k - 1) / rho^k.
std::optional<ScalarField> partner(const NamedInstance& ni, const RotationalParams* rp) {
    if (ni.sol.psi) return ni.sol.psi;
    if (!rp) return std::nullopt;
    const double k = rp->k;
    const double E = std::exp(2.0 * rp->c * k);
    return ScalarField{[k, E](const Point3& p) {
                           const double r2 = p.x * p.x + p.y * p.y;
                           return Complex((std::pow(r2, k) - E) / std::pow(r2, 0.5 * k));
                       },
                       ni.sol.inst.Q.domain};
}

void solutions_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    const DiffScheme s = cfg.scheme;
    const auto rot = rotational_instances(cfg.margin);
    const auto con = conical_instances(cfg.margin);

    auto residual_checks = [&](const NamedInstance& ni, const RotationalParams* rp) {
        const auto& inst = ni.sol.inst;
        R.at_most("solutions/riccati_" + ni.name, "riccati", 1e-6, [&] {
            const auto pts = domain_points(inst.Q.domain, cfg.samples, cfg.seed, ni.name, [&](const Point3& p) {
                return stencil_ok(p, s, {&inst.Q.domain, &inst.q.domain});
            });
            return max_over(pts, [&](const Point3& p) { return riccati_residual(inst, p, s).max_abs(); });
        });
        const auto psi = partner(ni, rp);
        if (!psi) return;
        R.at_most("solutions/schrodinger_" + ni.name, "schrodinger", 1e-5, [&, psi] {
            const SchrodingerInstance sch{*psi, inst.q};
            const auto pts = domain_points(psi->domain, cfg.samples, cfg.seed, "s_" + ni.name, [&](const Point3& p) {
                return stencil_ok(p, s, {&psi->domain, &inst.q.domain});
            });
            return max_over(pts, [&](const Point3& p) { return std::abs(schrodinger_residual(sch, p, s)); });
        });
    };
    for (std::size_t i = 0; i < rot.size(); ++i) {
        RotationalParams rp;
        rp.k = i < 2 ? 1.0 : 2.0;
        rp.c = i % 2 == 0 ? 0.0 : std::log(2.0) / 2.0;
        residual_checks(rot[i], &rp);
    }
    for (const auto& ni : con) residual_checks(ni, nullptr);

    R.at_most("solutions/spot_rotational_Q", "spot", 1e-12, [&] {
        // Q does not depend on z, and z = 5 lies outside the box, so also check z = 1 through the domain.
        const Vector3c Q = rot[0].sol.inst.Q.at({2.0, 0.0, 1.0});
        const Vector3c Qz = rot[0].sol.inst.Q.eval({2.0, 0.0, 5.0});
        const Vector3c expect(-5.0 / 6.0, 0.0, 0.0);
        return Measurement{std::max(vdist(Q, expect), vdist(Qz, expect)), 2, ""};
    });
    R.at_most("solutions/spot_conical_Q", "spot", 1e-12, [&] {
        // C1 = 0, C2 = e.
        const Vector3c Q = con[0].sol.inst.Q.at({1.0, 0.0, 0.0});
        return Measurement{vdist(Q, Vector3c(3.0, 0.0, 0.0)), 1, ""};
    });
    R.at_most("solutions/spot_rotational_psi", "spot", 1e-12, [&] {
        // k = 1, c = ln2/2: psi = (rho^2 - 2) / (rho (1 - 2)); at rho = 2, psi = -1.
        const Complex v = rot[1].sol.psi->at({2.0, 0.0, 0.5});
        return Measurement{std::abs(v - Complex(-1.0)), 1, ""};
    });
    R.at_most("solutions/spot_potentials", "spot", 1e-12, [&] {
        // k = 2: q = 4 / rho^2; conical C1 = 2: q = 1 / r^4.
        const double a = std::abs(rot[2].sol.inst.q.at({2.0, 0.0, 0.0}) - Complex(1.0));
        const double b = std::abs(con[2].sol.inst.q.at({0.0, 1.2, 0.9}) - Complex(1.0 / std::pow(2.25, 2)));
        return Measurement{std::max(a, b), 2, ""};
    });

    R.at_least("solutions/blowup_rotational", "blowup", 1e2, [&] {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& ni : rot) {
            const bool cn = ni.name.find("cln2half") != std::string::npos;
            const double rho = (cn ? std::sqrt(2.0) : 1.0) + 1e-3;
            m = std::min(m, max_abs(ni.sol.inst.Q.eval({rho, 0.0, 0.3})));
        }
        return Measurement{m, rot.size(), "smallest |Q| at distance 1e-3 from the pole set"};
    });
    R.at_least("solutions/blowup_conical", "blowup", 1e2, [&] {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& ni : con) {
            const double C2 = ni.name.find("C2_2") != std::string::npos ? 2.0 : std::numbers::e;
            m = std::min(m, max_abs(ni.sol.inst.Q.eval({std::sqrt(C2) + 1e-3, 0.0, 0.0})));
        }
        return Measurement{m, con.size(), "smallest |Q| at distance 1e-3 from the pole set"};
    });

    for (const auto& id : harmonic_seed_ids()) {
        R.at_most("solutions/riccati_harmonic_" + id, "riccati", 1e-6, [&, id] {
            const auto sol = harmonic_family(harmonic_seed(id, 0.0, cfg.margin));
            const auto& inst = sol.inst;
            const auto pts = domain_points(inst.Q.domain, cfg.samples, cfg.seed, "h_" + id,
                                           [&](const Point3& p) { return stencil_ok(p, s, {&inst.Q.domain}); });
            return max_over(pts, [&](const Point3& p) { return riccati_residual(inst, p, s).max_abs(); });
        });
    }
}

// --- riccati (Cole-Hopf pair and factorization) ---------------------------------------------

struct Family {
    std::string name;
    CatalogSolution sol;
    ScalarField psi;
};

std::vector<Family> cataloged_families(double margin) {
    std::vector<Family> out;
    auto rot = rotational_instances(margin);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        RotationalParams rp;
        rp.k = i < 2 ? 1.0 : 2.0;
        rp.c = i % 2 == 0 ? 0.0 : std::log(2.0) / 2.0;
        out.push_back({rot[i].name, rot[i].sol, *partner(rot[i], &rp)});
    }
    for (auto& ni : conical_instances(margin)) out.push_back({ni.name, ni.sol, *ni.sol.psi});
    for (const auto& id : harmonic_seed_ids()) {
        auto sol = harmonic_family(harmonic_seed(id, 0.0, margin));
        ScalarField psi = *sol.psi;
        out.push_back({"harmonic_" + id, std::move(sol), std::move(psi)});
    }
    return out;
}

Point3 family_base(const Family& f, const DiffScheme& s) {
    const BoxDomain& d = f.sol.inst.Q.domain;
    if (stencil_ok(f.sol.base, s, {&d})) return f.sol.base;
    return {2.0, 0.2, 0.1};
}

void riccati_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    const DiffScheme s = cfg.scheme;
    const auto families = cataloged_families(cfg.margin);

    for (const auto& fam : families) {
        const auto& inst = fam.sol.inst;
        R.at_most("riccati/cole_hopf_" + fam.name, "cole_hopf", 1e-6, [&] {
            const RiccatiInstance ch = cole_hopf({fam.psi, inst.q}, s);
            const auto pts = domain_points(inst.Q.domain, 50, cfg.seed, "ch_" + fam.name, [&](const Point3& p) {
                return stencil_ok(p, s, {&inst.Q.domain, &fam.psi.domain});
            });
            return max_over(pts, [&](const Point3& p) { return vdist(ch.Q.eval(p), inst.Q.eval(p)); });
        });
        R.at_most("riccati/inverse_cole_hopf_" + fam.name, "inverse_cole_hopf", 1e-6, [&] {
            const Point3 base = family_base(fam, s);
            const SchrodingerInstance sch = inverse_cole_hopf(inst, base, 0.0, cfg.quad);
            const Complex scale = fam.psi.eval(base) / sch.psi.eval(base);
            const auto pts = domain_points(inst.Q.domain, 50, cfg.seed, "ich_" + fam.name, [&](const Point3& p) {
                return path_admissible(inst.Q.domain, base, p);
            });
            Measurement m = max_over(pts, [&](const Point3& p) {
                const Complex expect = fam.psi.eval(p);
                return std::abs(sch.psi.eval(p) * scale - expect) / std::max(1.0, std::abs(expect));
            });
            m.note = "relative, normalized at the base point";
            return m;
        });
    }

    auto probes = [&cfg](const std::string& tag) {
        std::mt19937_64 rng(derive_seed(cfg.seed, tag));
        std::uniform_real_distribution<double> u(-0.3, 0.3);
        std::vector<ScalarField> out;
        for (int i = 0; i < 20; ++i) {
            const Vector3c a(Complex(u(rng), u(rng) / 3.0), Complex(u(rng), u(rng) / 3.0),
                             Complex(u(rng), u(rng) / 3.0));
            const Complex b(u(rng), u(rng));
            out.push_back({[a, b](const Point3& p) { return std::exp(dot(a, to_complex(p)) + b); },
                           BoxDomain::all_space()});
        }
        return out;
    };

    for (const auto& fam : families) {
        const auto& inst = fam.sol.inst;
        R.at_most("riccati/factorization_" + fam.name, "factorization", 1e-5, [&] {
            const auto ps = probes("fact_" + fam.name);
            const auto pts = domain_points(inst.Q.domain, 5 * ps.size(), cfg.seed, "fact_" + fam.name,
                                           [&](const Point3& p) { return nested_stencil_ok(p, s, inst.Q.domain); });
            std::vector<double> vals(pts.size());
            parallel_for(pts.size(), [&](std::size_t i) {
                vals[i] = factorization_residual(ps[i % ps.size()], inst, pts[i], s).max_abs();
            });
            return Measurement{*std::max_element(vals.begin(), vals.end()), pts.size(), "both lines, 20 probes"};
        });
    }

    R.at_least("riccati/factorization_detects_non_solution", "factorization_detection", 1e-2, [&] {
        // Q = x e1 with q = 0 is not a solution: DQ + |Q|^2 = x^2 - 1.
        const RiccatiInstance bad{{[](const Point3& p) { return Vector3c(p.x, 0.0, 0.0); }, BoxDomain::all_space()},
                                  constant_field(0.0)};
        const auto ps = probes("detect");
        const auto pts = sample_points(BoxDomain({-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}), 5, derive_seed(cfg.seed, "det"));
        double m = std::numeric_limits<double>::infinity();
        for (const auto& probe : ps) {
            double worst = 0.0;
            for (const auto& p : pts) worst = std::max(worst, factorization_residual(probe, bad, p, s).max_abs());
            m = std::min(m, worst);
        }
        return Measurement{m, ps.size() * pts.size(), "smallest per-probe maximum"};
    });

    R.info("riccati/factorization_as_printed_gap", [&] {
        // The signs as printed factor -Laplacian + q only for -DQ + |Q|^2 = q; report how far off they are.
        const auto& fam = families[1];
        const auto& inst = fam.sol.inst;
        const auto ps = probes("printed");
        const auto pts = domain_points(inst.Q.domain, 20, cfg.seed, "printed",
                                       [&](const Point3& p) { return nested_stencil_ok(p, s, inst.Q.domain); });
        Measurement m = max_over(pts, [&](const Point3& p) {
            return factorization_residual(ps[0], inst, p, s, FactorizationForm::AsPrinted).max_abs();
        });
        m.note = "printed-sign factorization on " + fam.name;
        return m;
    });
}

// --- euler / picard --------------------------------------------------------------------------

/// psi = x on a box elongated along x: Q = -e1 / x, q = 0. The B-built fields are evaluated far
/// from the short faces, where the boundary terms of the bounded volume potential are small.
const BoxDomain& elongated_region() {
    static const BoxDomain d({0.5, -1.5, -1.5}, {40.5, 1.5, 1.5});
    return d;
}

std::vector<Point3> elongated_points(std::size_t n, std::uint64_t seed, const std::string& tag) {
    return sample_points(elongated_region(), {10.0, -0.5, -0.5}, {30.0, 0.5, 0.5}, n, derive_seed(seed, tag));
}

void euler_picard_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    const DiffScheme s = cfg.scheme;

    std::vector<VectorField> Qs;
    for (const char* id : {"x", "y", "z", "sum"}) Qs.push_back(harmonic_family(harmonic_seed(id, 0.0, cfg.margin)).inst.Q);
    const auto picard_pts =
        sample_points(BoxDomain({0.5, 0.5, 0.5}, {2.5, 2.5, 2.5}), 20, derive_seed(cfg.seed, "picard"));

    R.at_most("euler_picard/picard", "picard", 1e-6, [&] {
        return max_over(picard_pts,
                        [&](const Point3& p) { return picard_lhs(Qs[0], Qs[1], Qs[2], Qs[3], p, s).max_abs(); });
    });
    R.at_least("euler_picard/picard_without_cross_terms", "picard_detection", 1e-2, [&] {
        PicardOptions opt;
        opt.cross_terms = false;
        Measurement m = min_over(picard_pts, [&](const Point3& p) {
            return picard_lhs(Qs[0], Qs[1], Qs[2], Qs[3], p, s, opt).max_abs();
        });
        m.note = "smallest over points";
        return m;
    });
    R.at_most("euler_picard/picard_symmetric_cancellation", "picard_symmetric", 0.0, [&] {
        return max_over(picard_pts,
                        [&](const Point3& p) { return picard_lhs(Qs[0], Qs[1], Qs[0], Qs[1], p, s).max_abs(); });
    });
    R.at_least("euler_picard/picard_detects_non_solution", "picard_detection", 1e-2, [&] {
        const VectorField Q4 = Qs[3];
        const VectorField bad{[Q4](const Point3& p) { return Q4.eval(p) + Vector3c(1.0, 0.0, 0.0); }, Q4.domain};
        Measurement m = min_over(picard_pts,
                                 [&](const Point3& p) { return picard_lhs(Qs[0], Qs[1], Qs[2], bad, p, s).max_abs(); });
        m.note = "smallest over points";
        return m;
    });

    // Two q = 0 solutions positive on the whole box: psi = x + y + z + 10 and psi1 = x + 10.
    const CatalogSolution sol = harmonic_family(harmonic_seed("sum", 10.0, cfg.margin));
    const CatalogSolution sol1 = harmonic_family(harmonic_seed("x", 10.0, cfg.margin));
    const BoxDomain wregion({-1, -1, -1}, {1, 1, 1});
    const Point3 wbase{0.0, 0.0, 0.0};
    QuadratureSpec sc_quad = smooth_rule(cfg.quad);
    // The scalar part never touches B, so a coarse volume grid keeps these checks cheap.
    sc_quad.volume_resolution = 8;
    const auto wpts = sample_points(BoxDomain({-0.8, -0.8, -0.8}, {0.8, 0.8, 0.8}), 20, derive_seed(cfg.seed, "wconst"));

    R.at_most("euler_picard/wconst_scalar_part", "wconst", 1e-10, [&] {
        const QuaternionField W =
            w_from_q_pair(sol.inst, sol1.inst, constant_field(0.0), wbase, wregion, wpts, sc_quad, s);
        const ScalarField A = operator_A(sol.inst.Q, wbase, 0.0, cfg.quad);
        return max_over(wpts, [&](const Point3& p) { return std::abs(W.eval(p).scalar() - std::exp(-A.eval(p))); });
    });
    R.at_most("euler_picard/q_from_scw", "q_from_scw", 1e-6, [&] {
        const QuaternionField W =
            w_from_q_pair(sol.inst, sol1.inst, constant_field(0.0), wbase, wregion, wpts, sc_quad, s);
        const VectorField Q = q_from_scw(W, s);
        return max_over(wpts, [&](const Point3& p) { return vdist(Q.eval(p), sol.inst.Q.eval(p)); });
    });
    R.at_most("euler_picard/wconst_rejects_different_potentials", "precondition", 0.0, [&] {
        const CatalogSolution other = rotational(RotationalParams{});
        double missed = 1.0;
        try {
            (void)w_from_q_pair(sol.inst, other.inst, constant_field(0.0), {2, 0, 0}, wregion,
                                {Point3{2.0, 0.5, 0.0}}, sc_quad, s);
        } catch (const PreconditionError&) {
            missed = 0.0;
        }
        return Measurement{missed, 1, ""};
    });

    const BoxDomain& region = elongated_region();
    const VectorField Qx{[](const Point3& p) { return Vector3c(-1.0 / p.x, 0.0, 0.0); }, region};
    const ScalarField phi{[](const Point3& p) { return Complex(p.x); }, region};
    const Point3 base{1.0, 0.0, 0.0};
    const QuadratureSpec bquad = smooth_rule(cfg.quad);

    R.at_most("euler_picard/euler_residual_B_built", "euler", 5e-2, [&] {
        const QuaternionField W =
            w_from_q_pair(Qx, zero_vector_field(region), constant_field(0.0, region), base, region, bquad, s);
        const auto pts = elongated_points(20, cfg.seed, "euler");
        return max_over(pts, [&](const Point3& p) { return euler_residual(W, zero_vector_field(region), p, s).max_abs(); });
    });

    // w = e1 / x solves Dw + w Dphi/phi = 0 for phi = x; with C = 1, A[w/phi] = 2 - 1/x.
    const VectorField w{[](const Point3& p) { return Vector3c(1.0 / p.x, 0.0, 0.0); }, region};
    R.at_most("euler_picard/w_equation", "w_equation", 1e-6, [&] {
        const auto pts = elongated_points(20, cfg.seed, "weq");
        return max_over(pts, [&](const Point3& p) { return w_equation_residual(w, phi, p, s).max_abs(); });
    });
    R.at_most("euler_picard/vekua_from_w", "vekua", 5e-2, [&] {
        const auto c = build_W_prop2(w, phi, constant_field(0.0, region), base, 1.0, region, bquad, s);
        const auto pts = elongated_points(20, cfg.seed, "prop2");
        return max_over(pts, [&](const Point3& p) { return vekua_residual(c.W, phi, p, s).max_abs(); });
    });
    R.at_most("euler_picard/riccati_from_w", "riccati", 1e-6, [&] {
        const auto c = build_W_prop2(w, phi, constant_field(0.0, region), base, 1.0, region, bquad, s);
        const RiccatiInstance inst{c.Q, constant_field(0.0, region)};
        const auto pts = elongated_points(20, cfg.seed, "prop2q");
        return max_over(pts, [&](const Point3& p) { return riccati_residual(inst, p, s).max_abs(); });
    });

    // W0 = 2x - 1 satisfies div[phi^2 grad(W0/phi)] = 0 for phi = x.
    const ScalarField W0{[](const Point3& p) { return Complex(2.0 * p.x - 1.0); }, region};
    R.at_most("euler_picard/vekua_from_W0", "vekua", 5e-2, [&] {
        const QuaternionField W = build_W_from_W0(W0, phi, constant_field(0.0, region), region, bquad, s);
        const auto pts = elongated_points(20, cfg.seed, "prop3");
        return max_over(pts, [&](const Point3& p) { return vekua_residual(W, phi, p, s).max_abs(); });
    });
    R.at_most("euler_picard/W0_round_trip", "round_trip", 5e-2, [&] {
        // The B source phi^2 grad(W0/phi) = e1 is constant, which the subtracted rule integrates
        // exactly at any resolution; a coarse grid keeps the nested differences affordable.
        QuadratureSpec coarse = bquad;
        coarse.volume_resolution = 8;
        const QuaternionField W = build_W_from_W0(W0, phi, constant_field(0.0, region), region, coarse, s);
        // Start the A path far from the short faces too; C matches W0 at the start: -phi (0 + C) = W0.
        const Point3 far_base{20.0, 0.0, 0.0};
        const Complex C = -W0.eval(far_base) / phi.eval(far_base);
        const ScalarField back = build_W0_from_W(vector_part(W), phi, far_base, C, coarse, s);
        const auto pts = elongated_points(5, cfg.seed, "round");
        Measurement m = max_over(pts, [&](const Point3& p) {
            return std::abs(back.eval(p) - W0.eval(p)) / std::abs(W0.eval(p));
        });
        m.note = "relative";
        return m;
    });
}

// --- symmetry --------------------------------------------------------------------------------

double axis_distance(const Point3& p, int axis) {
    const double a = p[(axis + 1) % 3], b = p[(axis + 2) % 3];
    return std::sqrt(a * a + b * b);
}

std::function<double(double, double)> table_potential(int k) {
    switch (k) {
        case 1: return [](double y, double z) { return y * y + z; };
        case 2: return [](double x, double z) { return std::sin(x) + z * z; };
        case 3: return [](double x, double y) { return std::exp(x) * y * y; };
        case 4: return [](double x, double rho) { return x / (1.0 + rho * rho); };
        case 5: return [](double y, double rho) { return y * y * rho; };
        case 6: return [](double z, double rho) { return z * rho + 1.0 / (rho * rho); };
        case 7: return [](double s, double t) { return 1.0 + s * s + t; };
        case 8: return [](double s, double t) { return s + t * t; };
        case 9: return [](double s, double t) { return std::cos(s) + t; };
        default: return [](double s, double t) { return s * t + 1.0; };
    }
}

Vec3 random_vec(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng), u(rng)};
}

double image_distance(const GroupImage& a, const GroupImage& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max({d, std::abs(a.x[i] - b.x[i]), std::abs(a.Q[i] - b.Q[i])});
    return d;
}

double image_scale(const GroupImage& a) {
    double s = 1.0;
    for (int i = 0; i < 3; ++i) s = std::max({s, std::abs(a.x[i]), std::abs(a.Q[i])});
    return s;
}

struct TransportCase {
    std::string instance;
    CatalogSolution sol;
    int k;
    double lambda;
};

std::vector<TransportCase> transport_cases(double margin) {
    std::vector<TransportCase> out;
    RotationalParams rp;
    rp.c = std::log(2.0) / 2.0;
    rp.margin = margin;
    const CatalogSolution rot = rotational(rp);
    for (auto [k, l] : {std::pair{3, 0.5}, {6, 0.3}, {7, 0.2}, {10, 0.05}}) out.push_back({"rotational", rot, k, l});
    ConicalParams cp;
    cp.C1 = 2.0;
    cp.margin = margin;
    const CatalogSolution con = conical(cp);
    for (auto [k, l] : {std::pair{4, 0.3}, {5, 0.3}, {6, 0.3}, {8, 0.05}, {9, 0.05}, {10, 0.05}}) {
        out.push_back({"conical", con, k, l});
    }
    const CatalogSolution harm = harmonic_family(harmonic_seed("sum", 10.0, margin));
    for (int k = 1; k <= 10; ++k) out.push_back({"harmonic_sum", harm, k, k >= 8 ? 0.05 : 0.1});
    return out;
}

void symmetry_suite(SuiteRunner& R) {
    const RunConfig& cfg = R.config();
    const DiffScheme s = cfg.scheme;

    for (int k = 1; k <= 10; ++k) {
        R.at_most("symmetry/determining_G" + std::to_string(k), "determining", 1e-9, [&, k] {
            const ScalarField q = invariant_potential(k, table_potential(k));
            const GeneratorParams gen = table_generator(k);
            const auto pts =
                sample_points(BoxDomain({-2, -2, -2}, {2, 2, 2}), cfg.samples, derive_seed(cfg.seed, "det" + std::to_string(k)),
                              [&](const Point3& p) {
                                  if (norm(p) < 0.5) return false;
                                  if (k == 7 && std::abs(p.x) < 0.5) return false;
                                  if (k >= 4 && k <= 6 && axis_distance(p, k - 4) < 0.3) return false;
                                  return stencil_ok(p, s, {&q.domain});
                              });
            return max_over(pts, [&](const Point3& p) { return std::abs(determining_residual(gen, q, p, s)); });
        });
    }

    R.at_least("symmetry/rotational_potential_not_F8", "not_invariant", 1e-2, [&] {
        const CatalogSolution rot = rotational(RotationalParams{});
        const ScalarField& q = rot.inst.q;
        const auto pts = domain_points(q.domain, 20, cfg.seed, "notF8",
                                       [&](const Point3& p) { return stencil_ok(p, s, {&q.domain}); });
        Measurement m = max_over(pts, [&](const Point3& p) {
            return std::abs(determining_residual(table_generator(8), q, p, s));
        });
        m.note = "largest residual: q = k^2/rho^2 is not of the G8-invariant form";
        return m;
    });

    R.at_most("symmetry/group_identity", "group_identity", 0.0, [&] {
        std::mt19937_64 rng(derive_seed(cfg.seed, "identity"));
        double worst = 0.0;
        for (int k = 1; k <= 10; ++k) {
            for (int i = 0; i < 20; ++i) {
                const Point3 p = random_vec(rng, -1.0, 1.0);
                const Vec3 Q = random_vec(rng, -1.0, 1.0);
                worst = std::max(worst, image_distance(group_act({k, 0.0}, p, Q), GroupImage{p, Q}));
            }
        }
        return Measurement{worst, 200, ""};
    });

    auto composition = [&](int k_lo, int k_hi, double lmax, const std::string& tag) {
        std::mt19937_64 rng(derive_seed(cfg.seed, tag));
        std::uniform_real_distribution<double> ul(-lmax, lmax);
        double worst = 0.0;
        std::size_t n = 0;
        for (int k = k_lo; k <= k_hi; ++k) {
            for (int i = 0; i < 50; ++i) {
                const Point3 p = random_vec(rng, -1.0, 1.0);
                const Vec3 Q = random_vec(rng, -1.0, 1.0);
                if (k >= 8 && axis_distance(p, k - 8) < 0.1) continue;
                const double l1 = ul(rng), l2 = ul(rng);
                const GroupImage two = group_act({k, l1}, p, Q);
                const GroupImage composed = group_act({k, l2}, two.x, two.Q);
                const GroupImage direct = group_act({k, l1 + l2}, p, Q);
                const GroupImage back = group_act(GroupElement{k, l1}.inverse(), two.x, two.Q);
                worst = std::max(worst, image_distance(composed, direct) / image_scale(direct));
                worst = std::max(worst, image_distance(back, GroupImage{p, Q}) / image_scale(back));
                ++n;
            }
        }
        return Measurement{worst, n, "relative; includes g^-1 g = id"};
    };
    R.at_most("symmetry/group_composition", "group_composition", 1e-12,
              [&] { return composition(1, 7, 0.5, "compose"); });
    R.at_most("symmetry/group_composition_conical", "group_composition_conical", 1e-10,
              [&] { return composition(8, 10, 0.1, "compose_conical"); });

    R.at_most("symmetry/rotation_orthogonality", "orthogonality", 1e-14, [&] {
        std::mt19937_64 rng(derive_seed(cfg.seed, "orth"));
        std::uniform_real_distribution<double> ul(-3.0, 3.0);
        double worst = 0.0;
        for (int idx = 1; idx <= 3; ++idx) {
            for (int i = 0; i < 20; ++i) {
                const auto M = rotation_matrix(idx, ul(rng));
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        double v = 0.0;
                        for (int c = 0; c < 3; ++c) v += M[a][c] * M[b][c];
                        worst = std::max(worst, std::abs(v - (a == b ? 1.0 : 0.0)));
                    }
                }
                const double det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
                worst = std::max(worst, std::abs(det - 1.0));
            }
        }
        return Measurement{worst, 60, "M M^T = I and det M = 1"};
    });

    R.at_most("symmetry/generator_matches_flow", "generator", 1e-6, [&] {
        std::mt19937_64 rng(derive_seed(cfg.seed, "vhat"));
        const double eps = 1e-5;
        double worst = 0.0;
        std::size_t n = 0;
        for (int k = 1; k <= 10; ++k) {
            const GeneratorParams gen = flow_generator(k);
            for (int i = 0; i < 20; ++i) {
                const Point3 p = random_vec(rng, -1.0, 1.0);
                const Vec3 Q = random_vec(rng, -1.0, 1.0);
                if (norm(p) < 0.3 || (k >= 8 && axis_distance(p, k - 8) < 0.1)) continue;
                const GroupImage fwd = group_act({k, eps}, p, Q);
                const GroupImage bwd = group_act({k, -eps}, p, Q);
                const auto v = vhat_apply(gen, p, Q);
                for (int c = 0; c < 3; ++c) {
                    worst = std::max(worst, std::abs((fwd.x[c] - bwd.x[c]) / (2.0 * eps) - v[c]));
                    worst = std::max(worst, std::abs((fwd.Q[c] - bwd.Q[c]) / (2.0 * eps) - v[3 + c]));
                }
                ++n;
            }
        }
        return Measurement{worst, n, "central difference in lambda at 0"};
    });

    for (const auto& tc : transport_cases(cfg.margin)) {
        const std::string tag = tc.instance + "_G" + std::to_string(tc.k);
        const GroupElement g{tc.k, tc.lambda};
        auto pts_for = [&cfg, &s, tc, tag](const VectorField& Qt, const std::string& what) {
            return domain_points(Qt.domain, 50, cfg.seed, what + tag, [&](const Point3& p) {
                if (tc.k >= 8 && axis_distance(p, tc.k - 8) < 0.05) return false;
                return stencil_ok(p, s, {&Qt.domain, &tc.sol.inst.q.domain});
            });
        };
        R.at_most("symmetry/transport_riccati_" + tag, "transport", 1e-5, [&, tc, g, tag] {
            const VectorField Qt = transport_solution(g, tc.sol.inst.Q);
            const RiccatiInstance inst{Qt, tc.sol.inst.q};
            const auto pts = pts_for(Qt, "tr_");
            return max_over(pts, [&](const Point3& p) { return riccati_residual(inst, p, s).max_abs(); });
        });
        R.at_most("symmetry/transport_vs_pushforward_" + tag, "pushforward", 1e-8, [&, tc, g, tag] {
            const VectorField Qt = transport_solution(g, tc.sol.inst.Q);
            const VectorField Pf = pushforward_solution(g, tc.sol.inst.Q);
            const auto pts = pts_for(Qt, "pf_");
            return max_over(pts, [&](const Point3& p) { return vdist(Qt.eval(p), Pf.eval(p)); });
        });
        if (tc.k >= 8 && tc.instance == "conical") {
            R.info("symmetry/printed_transport_discrepancy_" + tag, [&, tc, g, tag] {
                const VectorField Qp = transport_solution(g, tc.sol.inst.Q, TransportFormula::AsPrinted);
                const VectorField Pf = pushforward_solution(g, tc.sol.inst.Q);
                const auto pts = pts_for(Qp, "pr_");
                Measurement m = max_over(pts, [&](const Point3& p) { return vdist(Qp.eval(p), Pf.eval(p)); });
                m.note = "formula as printed vs pushforward";
                return m;
            });
        }
    }
}

// --- one-dimensional oracles -----------------------------------------------------------------

void oned_suite(SuiteRunner& R) {
    using namespace oned;
    const RunConfig& cfg = R.config();
    const Coefficients1D tan_eq = constant_coefficients(1.0, 0.0, 1.0);  // y' = 1 + y^2

    R.at_most("oned/integrate_inverse", "integrate", 1e-8, [] {
        const Path1D path = integrate(constant_coefficients(0.0, 0.0, -1.0), 1.0, 1.0, 3.0, 1e-3);
        double worst = path.status == PathStatus::Ok ? 0.0 : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < path.xs.size(); ++i) worst = std::max(worst, std::abs(path.ys[i] - 1.0 / path.xs[i]));
        return Measurement{worst, path.xs.size(), "y' = -y^2 against 1/x"};
    });
    R.at_most("oned/integrate_tan", "integrate", 1e-8, [&] {
        const Path1D path = integrate(tan_eq, 0.0, 0.0, 1.2, 1e-3);
        double worst = path.status == PathStatus::Ok ? 0.0 : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < path.xs.size(); ++i) worst = std::max(worst, std::abs(path.ys[i] - std::tan(path.xs[i])));
        return Measurement{worst, path.xs.size(), "y' = 1 + y^2 against tan x"};
    });
    R.at_most("oned/movable_singularity", "singularity", 1e-2, [&] {
        const Path1D path = integrate(tan_eq, 0.0, 0.0, 2.0, 1e-3);
        if (path.status != PathStatus::MovableSingularity) return Measurement{1.0, 1, "pole not flagged"};
        return Measurement{std::abs(path.xs.back() - std::numbers::pi / 2.0), 1, "distance of the stop to pi/2"};
    });

    R.at_most("oned/cross_ratio_constant", "cross_ratio", 1e-6, [] {
        const Coefficients1D c{[](double x) { return x; }, [](double) { return 0.0; }, [](double) { return -1.0; }};
        std::vector<Path1D> paths;
        for (double y0 : {0.0, 0.5, 1.0, 2.0}) paths.push_back(integrate(c, 0.0, y0, 1.5, 1e-3));
        const double x0 = paths[0].xs.front();
        const double dx = paths[0].xs[1] - paths[0].xs[0];
        auto as_fn = [x0, dx](const Path1D& path) {
            return Fn{[&path, x0, dx](double x) {
                return path.ys[static_cast<std::size_t>(std::llround((x - x0) / dx))];
            }};
        };
        const Fn y1 = as_fn(paths[0]), y2 = as_fn(paths[1]), y3 = as_fn(paths[2]), y4 = as_fn(paths[3]);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        std::size_t n = 0;
        for (std::size_t i = 0; i < paths[0].xs.size(); i += 25) {
            const double v = cross_ratio(y1, y2, y3, y4, paths[0].xs[i]);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            ++n;
        }
        return Measurement{hi - lo, n, "spread along four RK4 paths of y' = x - y^2"};
    });

    auto tan_shift = [](double c) { return Fn{[c](double x) { return std::tan(x + c); }}; };
    const auto xs = [] {
        std::vector<double> v;
        for (int i = 0; i <= 20; ++i) v.push_back(-0.5 + 0.05 * i);
        return v;
    }();

    R.at_most("oned/picard_equivalent", "picardequi", 1e-6, [&] {
        const Fn y1 = tan_shift(0.0), y2 = tan_shift(0.2), y3 = tan_shift(0.4), y4 = tan_shift(0.6);
        double worst = 0.0;
        for (double x : xs) worst = std::max(worst, std::abs(picard_equiv_residual(y1, y2, y3, y4, x)));
        return Measurement{worst, xs.size(), ""};
    });
    R.at_most("oned/superposition", "superposition", 1e-7, [&] {
        const Fn y = superposition(tan_shift(0.0), tan_shift(0.3), tan_shift(-0.3), -1.0);
        double worst = 0.0;
        for (double x : xs) worst = std::max(worst, std::abs(derivative(y, x) - tan_eq.rhs(x, y(x))));
        return Measurement{worst, xs.size(), "y' - (1 + y^2) of the superposed solution"};
    });

    // Reduced radial equation u' = u^2 - u/rho - k^2/rho^2, i.e. p = (-k^2/rho^2, -1/rho, 1).
    const std::vector<RotationalParams> radial = {RotationalParams{1.0, 0.0}, RotationalParams{2.0, std::log(2.0) / 2.0}};
    // Radii clear of each pole set (rho = 1 and rho = sqrt 2).
    auto radii = [](const RotationalParams& rp) {
        return rp.c == 0.0 ? std::vector<double>{1.5, 2.0, 3.0} : std::vector<double>{2.0, 2.5, 3.0};
    };
    R.at_most("oned/reduced_radial_riccati", "reduced_radial", 1e-8, [&] {
        double worst = 0.0;
        for (const auto& rp : radial) {
            const Fn u = reduced_radial(rp);
            const double k = rp.k;
            for (double r : radii(rp)) {
                worst = std::max(worst, std::abs(derivative(u, r) - (u(r) * u(r) - u(r) / r - k * k / (r * r))));
            }
        }
        return Measurement{worst, 3 * radial.size(), ""};
    });
    R.at_most("oned/reduced_radial_linearized", "linearize", 1e-7, [&] {
        double worst = 0.0;
        for (const auto& rp : radial) {
            const double k = rp.k;
            const double E = std::exp(2.0 * rp.c * k);
            const Coefficients1D c{[k](double r) { return -k * k / (r * r); }, [](double r) { return -1.0 / r; },
                                   [](double) { return 1.0; }};
            const Fn g = [k, E](double r) { return (std::pow(r, 2.0 * k) - E) / std::pow(r, k); };
            for (double r : radii(rp)) {
                const LinearizeResidual lr = linearize_check(c, g, r);
                worst = std::max({worst, std::abs(lr.linear), std::abs(lr.riccati)});
                // -g'/g is the closed-form reduced solution.
                worst = std::max(worst, std::abs(-derivative(g, r) / g(r) - reduced_radial(rp)(r)));
            }
        }
        return Measurement{worst, 3 * radial.size(), ""};
    });
    R.at_most("oned/reduced_radial_matches_3d", "tie_in", 1e-10, [&] {
        double worst = 0.0;
        std::size_t n = 0;
        for (const auto& rp : radial) {
            const Fn u = reduced_radial(rp);
            const CatalogSolution sol = rotational(rp);
            for (double r : radii(rp)) {
                for (double sign : {1.0, -1.0}) {
                    const Vector3c Q = sol.inst.Q.at({sign * r, 0.0, 0.3});
                    worst = std::max(worst, vdist(Q, Vector3c(sign * u(r), 0.0, 0.0)));
                    ++n;
                }
            }
        }
        return Measurement{worst, n, "y = 0 slice"};
    });

    R.at_most("oned/linearize_constant_potential", "linearize", 1e-7, [&] {
        // y' + y^2 = 1: p = (1, 0, -1), u = cosh, y = tanh.
        const Coefficients1D c = constant_coefficients(1.0, 0.0, -1.0);
        double worst = 0.0;
        for (double x : xs) {
            const LinearizeResidual lr = linearize_check(c, [](double t) { return std::cosh(t); }, x);
            worst = std::max({worst, std::abs(lr.linear), std::abs(lr.riccati)});
        }
        return Measurement{worst, xs.size(), ""};
    });

    R.at_most("oned/euler_first", "euler_1d", 1e-6, [&] {
        // y1 = tan, y(0) = 0 + 1/2: the solution is tan(x + atan(1/2)).
        const Fn y = euler_first(tan_eq, tan_shift(0.0), 0.0, 2.0, 1.0);
        double worst = 0.0;
        for (int i = 1; i <= 16; ++i) {
            const double x = 0.05 * i;
            worst = std::max(worst, std::abs(y(x) - std::tan(x + std::atan(0.5))));
            worst = std::max(worst, std::abs(derivative(y, x) - tan_eq.rhs(x, y(x))));
        }
        return Measurement{worst, 16, ""};
    });
    R.at_most("oned/euler_second", "euler_1d", 1e-6, [&] {
        const Fn y = euler_second(tan_shift(0.0), tan_shift(0.3), tan_eq, 2.0, 0.0, 1.0);
        double worst = 0.0;
        for (int i = 1; i <= 16; ++i) {
            const double x = 0.05 * i;
            worst = std::max(worst, std::abs(derivative(y, x) - tan_eq.rhs(x, y(x))));
        }
        return Measurement{worst, 16, ""};
    });
    R.at_most("oned/factorization", "factorization_1d", 1e-6, [&] {
        // y = tanh solves y' + y^2 = 1, so the factorization reproduces -u'' + u.
        const Fn q = [](double) { return 1.0; };
        const Fn y = [](double x) { return std::tanh(x); };
        const Fn u = [](double x) { return std::exp(0.5 * x) + x * x; };
        double worst = 0.0;
        for (double x : xs) worst = std::max(worst, std::abs(factorization_1d_residual(q, y, u, x)));
        return Measurement{worst, xs.size(), ""};
    });
    R.at_most("oned/factorization_non_solution", "factorization_1d", 1e-6, [&] {
        // y = x, q = 0: the gap is (1 + x^2) u.
        const Fn q = [](double) { return 0.0; };
        const Fn y = [](double x) { return x; };
        const Fn u = [](double x) { return std::cos(x); };
        double worst = 0.0;
        for (double x : xs) {
            worst = std::max(worst, std::abs(factorization_1d_residual(q, y, u, x) - (1.0 + x * x) * u(x)));
        }
        return Measurement{worst, xs.size(), ""};
    });
    (void)cfg;
}

using SuiteFn = void (*)(SuiteRunner&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"algebra", algebra_suite},     {"operators", operators_suite}, {"riccati", riccati_suite},
        {"euler_picard", euler_picard_suite}, {"symmetry", symmetry_suite}, {"solutions", solutions_suite},
        {"oned", oned_suite},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
}

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
    config.validate();
    bool known = suite == "all";
    for (const auto& [name, fn] : suite_table()) known = known || name == suite;
    if (!known) throw ConfigError("unknown suite '" + suite + "'");

    VerificationReport report;
    report.config_echo = echo_config(config);
    report.config_echo["suite"] = suite;
    SuiteRunner runner(config, report);
    for (const auto& [name, fn] : suite_table()) {
        if (suite == "all" || suite == name) fn(runner);
    }
    return report;
}

}  // namespace riccati3d
