#pragma once

#include "sgqi/periodic_qi.hpp"
#include "sgqi/periodization.hpp"

#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace sgqi {

// Periodic test target f_d(x) = prod_j g(x_j) with
// g(x) = (2x-1)^6/5 - (2x-1)^4 + 7(2x-1)^2/5, and its exact partial
// derivatives in x_1 (the only coordinate the derivative studies use).
double test_fn_periodic(int d, std::span<const double> x, std::span<const int> alpha);

// Non-periodic test target prod_j (y_j^2 - y_j + 3/4) on [-0.5, 0.5]^d.
double test_fn_nonperiodic(int d, std::span<const double> y);

enum class ExperimentKind { periodic, nonperiodic };
enum class GridMode { sparse, full };

// Prediction-point layout: closed includes both endpoints (matching the
// hypercube tables); torus uses the half-open midpoint grid (j + 1/2)/P (periodic
// studies — a closed grid folds onto the symmetry zeros of the derivative
// targets).
enum class PredictionGrid { closed, torus };

struct ExperimentConfig {
    int version = 1;
    std::string name = "experiment";
    ExperimentKind kind = ExperimentKind::periodic;
    int d = 1;
    int n_min = 1;
    int n_max = 1;
    std::vector<int> alpha;                   // length d
    ShapeMode shape_mode = ShapeMode::power_law;
    int r = 2;
    GridMode grid_mode = GridMode::sparse;
    EndpointPolicy endpoint = EndpointPolicy::identify;
    int points_per_axis = 0;
    PredictionGrid prediction_grid = PredictionGrid::closed;
    TransformKind transform = TransformKind::identity;
    std::vector<double> eta;                  // length d (nonperiodic)
    std::map<int, std::vector<double>> A;     // per-level shape coefficients
    std::uint64_t budget = kDefaultNodeBudget;
    int threads = 1;

    void validate() const; // throws config_error
};

struct ResultRow {
    int n = 0;
    std::uint64_t nodes = 0;
    double error = 0.0;
    double order = std::numeric_limits<double>::quiet_NaN(); // undefined on first row
    double seconds = 0.0;
};

ExperimentConfig parse_config(std::istream& is);
ExperimentConfig parse_config_file(const std::string& path);
void emit_config(const ExperimentConfig& cfg, std::ostream& os);

// order_i = log2(e_{i-1} / e_i); h halves per level
std::vector<double> fit_order(std::span<const double> errors);

std::vector<ResultRow> run_periodic(const ExperimentConfig& cfg);
std::vector<ResultRow> run_nonperiodic(const ExperimentConfig& cfg);
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

// CSV columns exactly: n, nodes, error, order, seconds
void write_csv(const std::vector<ResultRow>& rows, std::ostream& os);
// JSON summary: config echo, environment metadata, rows, (n, log2 error) pairs
void write_json_summary(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows,
                        std::ostream& os);

// Bundled configs reproducing the shipped studies (shape coefficients from the
// published tuning tables).  Known names: table1, table2_sparse, table2_full,
// fig2_d7_alpha{0,1,2}, fig2_d10_alpha{0,1,2}, fig3_d7, fig3_d10.
const std::map<std::string, std::string>& bundled_configs();

} // namespace sgqi
