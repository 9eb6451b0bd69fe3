#pragma once

#include "sgqi/sparse_grid.hpp"
#include "sgqi/trig_kernel.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace sgqi {

// Node values at j_k = 2^{l_k}: identify reads them from coordinate 0 (torus
// convention, the default); duplicate stores both endpoints and reproduces the
// paper's literal index range {0, ..., 2^{l_k}}.
enum class EndpointPolicy { identify, duplicate };

enum class ShapeMode { fixed, power_law };

// Shape-parameter selection: fixed mode takes c_j = A_j h_j, power-law mode
// c_j = A_j h_j^{(r+2)/(r+2+alpha_j)} (the directionally optimal balance).
struct ShapePolicy {
    ShapeMode mode = ShapeMode::fixed;
    std::vector<double> A;
    int r = 2;
    std::vector<int> alpha; // target derivative order per coordinate (power-law)
};

// c_j per coordinate, clamped to e^{-1}.  Returns the number of clamped
// entries through *clamped when given.
std::vector<double> shape_parameters(const ShapePolicy& policy, const LevelIndex& l,
                                     int* clamped = nullptr);

using FieldFunction = std::function<double(std::span<const double>)>;

// Function samples over every subgrid of a combination plan, row-major per
// subgrid (last axis fastest).
struct SampledField {
    struct Subgrid {
        LevelIndex level;
        long long coeff = 0; // combination coefficient of the owning shell
        std::vector<double> values;
    };

    int d = 0;
    int n = 0;
    EndpointPolicy endpoint = EndpointPolicy::identify;
    std::vector<Subgrid> subgrids; // plan order: shells ascending, levels lex

    std::uint64_t total_nodes() const;
};

SampledField sample_periodic(const FieldFunction& f, int n, int d, const CombinationPlan& plan,
                             EndpointPolicy endpoint = EndpointPolicy::identify,
                             std::uint64_t budget = kDefaultNodeBudget);

// Immutable sparse-grid quasi-interpolant: signed sum of subgrid sums
//   sum_shells coeff * sum_{|l|=s} sum_j f(t_{l,j}) prod_k D^{alpha_k}
//     Psi_{c_k,h_k}(x_k - t_{l_k,j_k}) * w(h_k),
// where w is sin(2 pi h)/(2 pi) under WeightRule::trig and h under mesh.
class QuasiInterpolant {
public:
    QuasiInterpolant(SampledField field, const ShapePolicy& policy,
                     WeightRule rule = WeightRule::trig);
    // Explicit per-subgrid kernels (global-c ablations, deserialization).
    QuasiInterpolant(SampledField field, std::vector<KernelSpec> kernels,
                     WeightRule rule = WeightRule::trig);

    double evaluate(std::span<const double> x, std::span<const int> alpha) const;

    // Elementwise evaluate; per-point summation order is fixed, so results do
    // not depend on the thread count.
    std::vector<double> evaluate_batch(const std::vector<std::vector<double>>& points,
                                       std::span<const int> alpha, int threads = 1) const;

    const SampledField& field() const { return field_; }
    const std::vector<KernelSpec>& kernels() const { return kernels_; }
    WeightRule weight_rule() const { return rule_; }

private:
    SampledField field_;
    std::vector<KernelSpec> kernels_; // one per subgrid, aligned with field_
    WeightRule rule_;
};

// General scattered-data form Q_X f = sum_i f(x_i) mu_i Psi_{c,h}(x - x_i):
// arbitrary (node, weight, value) triples with one shared kernel.
class ScatteredQuasiInterpolant {
public:
    ScatteredQuasiInterpolant(std::vector<std::vector<double>> nodes, std::vector<double> weights,
                              std::vector<double> values, KernelSpec spec);

    double evaluate(std::span<const double> x, std::span<const int> alpha) const;

private:
    std::vector<std::vector<double>> nodes_;
    std::vector<double> weights_;
    std::vector<double> values_;
    KernelSpec spec_;
};

// Versioned text serialization for experiment reproducibility.
void save_field(const SampledField& field, std::ostream& os);
SampledField load_field(std::istream& is);
void save_interpolant(const QuasiInterpolant& q, std::ostream& os);
QuasiInterpolant load_interpolant(std::istream& is);

// Deterministic pairwise reduction, shared with the oracle-free summations.
double pairwise_sum(std::span<const double> v);

} // namespace sgqi
