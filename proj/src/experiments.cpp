#include "sgqi/experiments.hpp"

#include "sgqi/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sgqi {

namespace {

double g_factor(double x, int order) {
    const double t = 2.0 * x - 1.0;
    switch (order) {
    case 0: return t * t * t * t * t * t / 5.0 - t * t * t * t + 7.0 * t * t / 5.0;
    case 1: return 2.0 * (6.0 * t * t * t * t * t / 5.0 - 4.0 * t * t * t + 14.0 * t / 5.0);
    case 2: return 4.0 * (6.0 * t * t * t * t - 12.0 * t * t + 14.0 / 5.0);
    default: throw std::invalid_argument("test_fn_periodic: derivative order above 2");
    }
}

CombinationPlan full_grid_plan(int n, int d) {
    CombinationPlan plan;
    plan.n = n;
    plan.d = d;
    CombinationPlan::Shell shell;
    shell.sum = n * d;
    shell.coeff = 1;
    LevelIndex l;
    l.l.assign(d, n);
    shell.levels.push_back(std::move(l));
    plan.shells.push_back(std::move(shell));
    return plan;
}

std::vector<std::vector<double>> closed_grid(int points_per_axis, int d, double lo, double hi) {
    const int P = points_per_axis;
    std::vector<double> axis(P);
    for (int i = 0; i < P; ++i)
        axis[i] = P == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * double(i) / double(P - 1);
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(std::pow(P, d)));
    std::vector<int> idx(d, 0);
    for (;;) {
        std::vector<double> p(d);
        for (int k = 0; k < d; ++k) p[k] = axis[idx[k]];
        pts.push_back(std::move(p));
        int k = d - 1;
        while (k >= 0 && ++idx[k] == P) idx[k--] = 0;
        if (k < 0) break;
    }
    return pts;
}

std::vector<std::vector<double>> torus_grid(int points_per_axis, int d) {
    const int P = points_per_axis;
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(std::pow(P, d)));
    std::vector<int> idx(d, 0);
    for (;;) {
        std::vector<double> p(d);
        for (int k = 0; k < d; ++k) p[k] = (double(idx[k]) + 0.5) / double(P);
        pts.push_back(std::move(p));
        int k = d - 1;
        while (k >= 0 && ++idx[k] == P) idx[k--] = 0;
        if (k < 0) break;
    }
    return pts;
}

double wall_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

double test_fn_periodic(int d, std::span<const double> x, std::span<const int> alpha) {
    if (static_cast<int>(x.size()) != d || static_cast<int>(alpha.size()) != d)
        throw std::domain_error("test_fn_periodic: dimension mismatch");
    for (int k = 1; k < d; ++k)
        if (alpha[k] != 0)
            throw std::invalid_argument(
                "test_fn_periodic: derivatives are supported on coordinate 1 only");
    double prod = g_factor(x[0], alpha[0]);
    for (int k = 1; k < d; ++k) prod *= g_factor(x[k], 0);
    return prod;
}

double test_fn_nonperiodic(int d, std::span<const double> y) {
    if (static_cast<int>(y.size()) != d)
        throw std::domain_error("test_fn_nonperiodic: dimension mismatch");
    double prod = 1.0;
    for (int k = 0; k < d; ++k) prod *= y[k] * y[k] - y[k] + 0.75;
    return prod;
}

void ExperimentConfig::validate() const {
    if (d < 1) throw config_error("config: d must be >= 1");
    if (n_min < 1 || n_max < n_min) throw config_error("config: level range empty");
    if (points_per_axis < 2) throw config_error("config: points_per_axis must be >= 2");
    if (static_cast<int>(alpha.size()) != d) throw config_error("config: alpha length != d");
    for (int a : alpha)
        if (a < 0 || a > 2) throw config_error("config: alpha entries must lie in 0..2");
    if (kind == ExperimentKind::nonperiodic && static_cast<int>(eta.size()) != d)
        throw config_error("config: eta length != d");
    for (int n = n_min; n <= n_max; ++n) {
        auto it = A.find(n);
        if (it == A.end()) throw config_error("config: missing A row for n = " + std::to_string(n));
        if (static_cast<int>(it->second.size()) != d)
            throw config_error("config: A row for n = " + std::to_string(n) + " has wrong length");
        for (double a : it->second)
            if (!(a > 0.0)) throw config_error("config: A values must be positive");
    }
    if (threads < 1) throw config_error("config: threads must be >= 1");
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::vector<double> parse_doubles(const std::string& s, const std::string& key) {
    std::vector<double> out;
    std::istringstream iss(s);
    double v;
    while (iss >> v) out.push_back(v);
    if (out.empty()) throw config_error("config: no numeric value for '" + key + "'");
    return out;
}

// replicate a singleton to d entries; otherwise require exactly d
template <typename T>
std::vector<T> fit_length(std::vector<T> v, int d, const std::string& key) {
    if (static_cast<int>(v.size()) == d) return v;
    if (v.size() == 1) return std::vector<T>(d, v[0]);
    throw config_error("config: '" + key + "' needs 1 or d values");
}

} // namespace

ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    cfg.alpha.clear();
    cfg.eta.clear();
    std::vector<int> raw_alpha;
    std::vector<double> raw_eta;
    std::map<int, std::vector<double>> raw_A;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const auto keys = split_ws(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);
        if (keys.empty()) throw config_error("config line " + std::to_string(lineno) + ": no key");
        const std::string& key = keys[0];
        auto one = [&](auto& dst) {
            std::istringstream vs(value);
            if (!(vs >> dst))
                throw config_error("config line " + std::to_string(lineno) + ": bad value");
        };
        if (key == "version") one(cfg.version);
        else if (key == "name") one(cfg.name);
        else if (key == "kind") {
            std::string v; one(v);
            if (v == "periodic") cfg.kind = ExperimentKind::periodic;
            else if (v == "nonperiodic") cfg.kind = ExperimentKind::nonperiodic;
            else throw config_error("config: unknown kind '" + v + "'");
        } else if (key == "d") one(cfg.d);
        else if (key == "n_min") one(cfg.n_min);
        else if (key == "n_max") one(cfg.n_max);
        else if (key == "alpha") {
            for (double v : parse_doubles(value, key)) raw_alpha.push_back(static_cast<int>(v));
        } else if (key == "shape_mode") {
            std::string v; one(v);
            if (v == "fixed") cfg.shape_mode = ShapeMode::fixed;
            else if (v == "power") cfg.shape_mode = ShapeMode::power_law;
            else throw config_error("config: unknown shape_mode '" + v + "'");
        } else if (key == "r") one(cfg.r);
        else if (key == "grid_mode") {
            std::string v; one(v);
            if (v == "sparse") cfg.grid_mode = GridMode::sparse;
            else if (v == "full") cfg.grid_mode = GridMode::full;
            else throw config_error("config: unknown grid_mode '" + v + "'");
        } else if (key == "endpoint") {
            std::string v; one(v);
            if (v == "identify") cfg.endpoint = EndpointPolicy::identify;
            else if (v == "duplicate") cfg.endpoint = EndpointPolicy::duplicate;
            else throw config_error("config: unknown endpoint '" + v + "'");
        } else if (key == "points_per_axis") one(cfg.points_per_axis);
        else if (key == "prediction_grid") {
            std::string v; one(v);
            if (v == "closed") cfg.prediction_grid = PredictionGrid::closed;
            else if (v == "torus") cfg.prediction_grid = PredictionGrid::torus;
            else throw config_error("config: unknown prediction_grid '" + v + "'");
        }
        else if (key == "transform") {
            std::string v; one(v);
            if (v == "identity") cfg.transform = TransformKind::identity;
            else if (v == "logarithmic") cfg.transform = TransformKind::logarithmic;
            else throw config_error("config: unknown transform '" + v + "'");
        } else if (key == "eta") raw_eta = parse_doubles(value, key);
        else if (key == "budget") one(cfg.budget);
        else if (key == "threads") one(cfg.threads);
        else if (key == "A") {
            if (keys.size() != 2)
                throw config_error("config line " + std::to_string(lineno) + ": use 'A <n> = ...'");
            raw_A[std::stoi(keys[1])] = parse_doubles(value, key);
        } else
            throw config_error("config: unknown key '" + key + "'");
    }
    if (raw_alpha.empty()) {
        cfg.alpha.assign(cfg.d, 0);
    } else if (raw_alpha.size() == 1) {
        // a single alpha value means "derivative on coordinate 1"
        cfg.alpha.assign(cfg.d, 0);
        cfg.alpha[0] = raw_alpha[0];
    } else {
        cfg.alpha = fit_length(std::move(raw_alpha), cfg.d, "alpha");
    }
    if (cfg.kind == ExperimentKind::nonperiodic || !raw_eta.empty())
        cfg.eta = raw_eta.empty() ? std::vector<double>(cfg.d, 1.0)
                                  : fit_length(std::move(raw_eta), cfg.d, "eta");
    for (auto& [n, row] : raw_A) cfg.A[n] = fit_length(std::move(row), cfg.d, "A");
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("config: cannot open '" + path + "'");
    return parse_config(is);
}

void emit_config(const ExperimentConfig& cfg, std::ostream& os) {
    os.precision(17);
    os << "version = " << cfg.version << "\n";
    os << "name = " << cfg.name << "\n";
    os << "kind = " << (cfg.kind == ExperimentKind::periodic ? "periodic" : "nonperiodic") << "\n";
    os << "d = " << cfg.d << "\n";
    os << "n_min = " << cfg.n_min << "\nn_max = " << cfg.n_max << "\n";
    os << "alpha =";
    for (int a : cfg.alpha) os << ' ' << a;
    os << "\nshape_mode = " << (cfg.shape_mode == ShapeMode::fixed ? "fixed" : "power") << "\n";
    os << "r = " << cfg.r << "\n";
    os << "grid_mode = " << (cfg.grid_mode == GridMode::sparse ? "sparse" : "full") << "\n";
    os << "endpoint = " << (cfg.endpoint == EndpointPolicy::identify ? "identify" : "duplicate")
       << "\n";
    os << "points_per_axis = " << cfg.points_per_axis << "\n";
    os << "prediction_grid = "
       << (cfg.prediction_grid == PredictionGrid::closed ? "closed" : "torus") << "\n";
    os << "transform = "
       << (cfg.transform == TransformKind::identity ? "identity" : "logarithmic") << "\n";
    if (!cfg.eta.empty()) {
        os << "eta =";
        for (double e : cfg.eta) os << ' ' << e;
        os << "\n";
    }
    os << "budget = " << cfg.budget << "\n";
    os << "threads = " << cfg.threads << "\n";
    for (const auto& [n, row] : cfg.A) {
        os << "A " << n << " =";
        for (double a : row) os << ' ' << a;
        os << "\n";
    }
}

std::vector<double> fit_order(std::span<const double> errors) {
    if (errors.size() < 2) throw std::domain_error("fit_order: need at least two errors");
    std::vector<double> orders;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (!(errors[i - 1] > 0.0) || !(errors[i] > 0.0))
            throw std::domain_error("fit_order: errors must be positive");
        orders.push_back(std::log2(errors[i - 1] / errors[i]));
    }
    return orders;
}

std::vector<ResultRow> run_periodic(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.kind != ExperimentKind::periodic) throw config_error("run_periodic: wrong kind");
    const int d = cfg.d;
    std::vector<std::vector<double>> points;
    if (cfg.prediction_grid == PredictionGrid::torus) {
        points = torus_grid(cfg.points_per_axis, d);
    } else {
        // closed grid; x = 1 duplicates x = 0 by periodicity, so fold and
        // dedupe (the max error over the full closed grid is unchanged)
        points = closed_grid(cfg.points_per_axis, d, 0.0, 1.0);
        for (auto& p : points)
            for (double& x : p)
                if (x == 1.0) x = 0.0;
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
    }
    std::vector<double> exact(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        exact[i] = test_fn_periodic(d, points[i], cfg.alpha);
    const std::vector<int> zero(d, 0);
    FieldFunction f = [d, &zero](std::span<const double> x) {
        return test_fn_periodic(d, x, zero);
    };

    std::vector<ResultRow> rows;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const CombinationPlan plan = cfg.grid_mode == GridMode::sparse
                                         ? combination_plan(n, d)
                                         : full_grid_plan(n, d);
        SampledField field = sample_periodic(f, n, d, plan, cfg.endpoint, cfg.budget);
        ShapePolicy policy{cfg.shape_mode, cfg.A.at(n), cfg.r, cfg.alpha};
        QuasiInterpolant q(std::move(field), policy);
        const auto approx = q.evaluate_batch(points, cfg.alpha, cfg.threads);
        double err = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
            err = std::max(err, std::abs(approx[i] - exact[i]));
        ResultRow row;
        row.n = n;
        row.nodes = cfg.grid_mode == GridMode::sparse
                        ? count_sparse_nodes(n, d, GridConvention::cube, cfg.budget)
                        : subgrid_size(LevelIndex{std::vector<int>(d, n)}, GridConvention::cube);
        row.error = err;
        if (!rows.empty()) row.order = std::log2(rows.back().error / err);
        row.seconds = wall_seconds(t0);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ResultRow> run_nonperiodic(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.kind != ExperimentKind::nonperiodic) throw config_error("run_nonperiodic: wrong kind");
    const int d = cfg.d;
    TransformSpec transform(cfg.transform, cfg.eta);
    const double lo = transform.domain_lo();
    const double hi = transform.domain_hi();
    const auto points = closed_grid(cfg.points_per_axis, d, lo, hi);
    FieldFunction g = [d](std::span<const double> y) { return test_fn_nonperiodic(d, y); };

    // interior points with their torus preimages and the weight sqrt(1/rho)
    std::vector<std::vector<double>> preimages;
    std::vector<double> weighted_g;
    for (const auto& y : points) {
        bool boundary = false;
        for (int k = 0; k < d; ++k)
            if (y[k] <= lo || y[k] >= hi) boundary = true;
        if (boundary) continue;
        std::vector<double> x(d);
        double w = 1.0;
        for (int k = 0; k < d; ++k) {
            x[k] = inverse(transform, y[k], k) - lo;
            w *= std::sqrt(transform.omega(k, y[k]) / density(transform, y[k], k));
        }
        weighted_g.push_back(w * g(y));
        preimages.push_back(std::move(x));
    }

    const std::vector<int> zero(d, 0);
    std::vector<ResultRow> rows;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const CombinationPlan plan = cfg.grid_mode == GridMode::sparse
                                         ? combination_plan(n, d)
                                         : full_grid_plan(n, d);
        SampledField field = periodize_samples(g, transform, n, plan, cfg.endpoint, cfg.budget);
        ShapePolicy policy{cfg.shape_mode, cfg.A.at(n), cfg.r, cfg.alpha};
        QuasiInterpolant q(std::move(field), policy);
        // sqrt(omega/rho) (g - Qg)(y) == (w g)(y) - Q_{n,d}f(preimage)
        const auto qf = q.evaluate_batch(preimages, zero, cfg.threads);
        double err = 0.0;
        for (std::size_t i = 0; i < preimages.size(); ++i)
            err = std::max(err, std::abs(weighted_g[i] - qf[i]));
        ResultRow row;
        row.n = n;
        row.nodes = cfg.grid_mode == GridMode::sparse
                        ? count_sparse_nodes(n, d, GridConvention::cube, cfg.budget)
                        : subgrid_size(LevelIndex{std::vector<int>(d, n)}, GridConvention::cube);
        row.error = err;
        if (!rows.empty()) row.order = std::log2(rows.back().error / err);
        row.seconds = wall_seconds(t0);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    return cfg.kind == ExperimentKind::periodic ? run_periodic(cfg) : run_nonperiodic(cfg);
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
    os << "n,nodes,error,order,seconds\n";
    char buf[160];
    for (const auto& row : rows) {
        if (std::isnan(row.order))
            std::snprintf(buf, sizeof buf, "%d,%llu,%.10e,,%.3f\n", row.n,
                          static_cast<unsigned long long>(row.nodes), row.error, row.seconds);
        else
            std::snprintf(buf, sizeof buf, "%d,%llu,%.10e,%.4f,%.3f\n", row.n,
                          static_cast<unsigned long long>(row.nodes), row.error, row.order,
                          row.seconds);
        os << buf;
    }
}

void write_json_summary(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows,
                        std::ostream& os) {
    nlohmann::json j;
    std::ostringstream cfg_text;
    emit_config(cfg, cfg_text);
    j["config"] = cfg_text.str();
    j["name"] = cfg.name;
    j["environment"] = {{"compiler", __VERSION__},
                        {"pointer_bits", 8 * sizeof(void*)},
                        {"threads", cfg.threads}};
    auto& jrows = j["rows"] = nlohmann::json::array();
    auto& jplot = j["log2_error_points"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = {{"n", row.n},
                            {"nodes", row.nodes},
                            {"error", row.error},
                            {"seconds", row.seconds}};
        if (!std::isnan(row.order)) r["order"] = row.order;
        jrows.push_back(std::move(r));
        jplot.push_back({row.n, std::log2(row.error)});
    }
    os << j.dump(2) << "\n";
}

const std::map<std::string, std::string>& bundled_configs() {
    static const std::map<std::string, std::string> configs = {
        {"table1", R"(# periodic d=5 benchmark (function values)
version = 1
name = table1
kind = periodic
d = 5
n_min = 5
n_max = 8
alpha = 0
shape_mode = fixed
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 5
A 5 = 0.29
A 6 = 0.22
A 7 = 0.18
A 8 = 0.15
A 9 = 0.13
A 10 = 0.11
A 11 = 0.10
)"},
        {"fig2_d7_alpha0", R"(# periodic d=7, function values
version = 1
name = fig2_d7_alpha0
kind = periodic
d = 7
n_min = 3
n_max = 8
alpha = 0
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 3 = 1.10
A 4 = 1.10
A 5 = 1.10
A 6 = 0.22
A 7 = 0.37
A 8 = 0.10
)"},
        {"fig2_d7_alpha1", R"(# periodic d=7, first derivative in x1
version = 1
name = fig2_d7_alpha1
kind = periodic
d = 7
n_min = 3
n_max = 8
alpha = 1
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 3 = 2.11 0.01 0.01 0.01 0.01 0.01 0.01
A 4 = 1.55 0.01 0.01 0.01 0.01 0.01 0.01
A 5 = 1.31 0.01 0.01 0.01 0.01 0.01 0.01
A 6 = 1.00 0.01 0.01 0.01 0.01 0.01 0.01
A 7 = 0.46 0.01 0.01 0.01 0.01 0.01 0.01
A 8 = 0.40 0.01 0.01 0.01 0.01 0.01 0.01
)"},
        {"fig2_d7_alpha2", R"(# periodic d=7, second derivative in x1
version = 1
name = fig2_d7_alpha2
kind = periodic
d = 7
n_min = 3
n_max = 8
alpha = 2
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 3 = 0.240 0.01 0.01 0.01 0.01 0.01 0.01
A 4 = 0.355 0.01 0.01 0.01 0.01 0.01 0.01
A 5 = 0.470 0.01 0.01 0.01 0.01 0.01 0.01
A 6 = 0.630 0.01 0.01 0.01 0.01 0.01 0.01
A 7 = 0.690 0.01 0.01 0.01 0.01 0.01 0.01
A 8 = 0.700 0.01 0.01 0.01 0.01 0.01 0.01
)"},
        {"fig2_d10_alpha0", R"(# periodic d=10, function values
version = 1
name = fig2_d10_alpha0
kind = periodic
d = 10
n_min = 2
n_max = 6
alpha = 0
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 2 = 0.880
A 3 = 0.650
A 4 = 0.595
A 5 = 0.983
A 6 = 0.100
)"},
        {"fig2_d10_alpha1", R"(# periodic d=10, first derivative in x1
version = 1
name = fig2_d10_alpha1
kind = periodic
d = 10
n_min = 2
n_max = 6
alpha = 1
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 2 = 0.090 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 3 = 1.190 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 4 = 2.020 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 5 = 2.118 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 6 = 0.185 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
)"},
        {"fig2_d10_alpha2", R"(# periodic d=10, second derivative in x1
version = 1
name = fig2_d10_alpha2
kind = periodic
d = 10
n_min = 2
n_max = 6
alpha = 2
shape_mode = power
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 2
prediction_grid = torus
A 2 = 1.04 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 3 = 1.10 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 4 = 2.10 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 5 = 2.08 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
A 6 = 1.80 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01 0.01
)"},
        {"table2_sparse", R"(# nonperiodic d=2, logarithmic transform eta=4, sparse grids
version = 1
name = table2_sparse
kind = nonperiodic
d = 2
n_min = 6
n_max = 11
alpha = 0
shape_mode = fixed
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 101
transform = logarithmic
eta = 4
A 6 = 2.7
A 7 = 0.98
A 8 = 0.54
A 9 = 0.40
A 10 = 0.11
A 11 = 0.01
)"},
        {"table2_full", R"(# nonperiodic d=2, logarithmic transform eta=4, full grids
version = 1
name = table2_full
kind = nonperiodic
d = 2
n_min = 6
n_max = 11
alpha = 0
shape_mode = fixed
r = 2
grid_mode = full
endpoint = identify
points_per_axis = 101
transform = logarithmic
eta = 4
A 6 = 0.38
A 7 = 0.38
A 8 = 0.30
A 9 = 0.30
A 10 = 0.02
A 11 = 0.01
)"},
        {"fig3_d7", R"(# nonperiodic d=7, logarithmic transform eta=2
version = 1
name = fig3_d7
kind = nonperiodic
d = 7
n_min = 4
n_max = 8
alpha = 0
shape_mode = fixed
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 5
transform = logarithmic
eta = 2
A 4 = 0.05
A 5 = 0.05
A 6 = 0.05
A 7 = 0.05
A 8 = 0.05
)"},
        {"fig3_d10", R"(# nonperiodic d=10, logarithmic transform eta=2
version = 1
name = fig3_d10
kind = nonperiodic
d = 10
n_min = 2
n_max = 6
alpha = 0
shape_mode = fixed
r = 2
grid_mode = sparse
endpoint = identify
points_per_axis = 3
transform = logarithmic
eta = 2
A 2 = 1.08
A 3 = 0.72
A 4 = 0.28
A 5 = 0.61
A 6 = 0.40
)"},
    };
    return configs;
}

} // namespace sgqi
