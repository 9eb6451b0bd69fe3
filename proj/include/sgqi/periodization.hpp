#pragma once

#include "sgqi/periodic_qi.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sgqi {

enum class TransformKind { identity, logarithmic };

// Torus-to-cube map per axis.  The logarithmic family
//   gamma(x, eta) = [(1+2x)^eta - (1-2x)^eta] / (2 [(1+2x)^eta + (1-2x)^eta])
// lives on [-0.5, 0.5]; identity lives on [0, 1].  Torus coordinates t in
// [0, 1) are shifted to the axis domain via x = lo + t.
struct TransformSpec {
    TransformKind kind = TransformKind::identity;
    std::vector<double> eta;                        // one per axis; unused for identity
    std::vector<std::function<double(double)>> weight; // omega_j; empty means omega == 1

    explicit TransformSpec(int d)
        : kind(TransformKind::identity), eta(d, 1.0) {}
    TransformSpec(TransformKind k, std::vector<double> etas)
        : kind(k), eta(std::move(etas)) {}

    int dim() const { return static_cast<int>(eta.size()); }
    double domain_lo() const { return kind == TransformKind::logarithmic ? -0.5 : 0.0; }
    double domain_hi() const { return domain_lo() + 1.0; }
    double omega(int axis, double y) const {
        return weight.empty() || !weight[axis] ? 1.0 : weight[axis](y);
    }
};

double forward(const TransformSpec& t, double x, int axis);
double forward_deriv(const TransformSpec& t, double x, int axis);
double inverse(const TransformSpec& t, double y, int axis);

// rho_j(y) = 1/gamma_j'(gamma_j^{-1}(y)); diverges at endpoints when the
// derivative vanishes there (logarithmic with eta > 1).
double density(const TransformSpec& t, double y, int axis);

// Samples of the periodized function
//   f(t) = g(gamma(x)) prod_j [omega_j(gamma_j(x_j)) gamma_j'(x_j)]^{1/p},
// x = domain_lo + t, over every subgrid of the plan.  p = 2 throughout.
SampledField periodize_samples(const FieldFunction& g, const TransformSpec& t, int n,
                               const CombinationPlan& plan,
                               EndpointPolicy endpoint = EndpointPolicy::identify,
                               std::uint64_t budget = kDefaultNodeBudget);

// Non-periodic quasi-interpolant on the cube: Qg(y) = prod_j
// sqrt(rho_j(y_j)/omega_j(y_j)) * Q_{n,d}f(gamma^{-1}(y)).  Throws
// singularity_error where the density diverges.
double evaluate_nonperiodic(const QuasiInterpolant& q, const TransformSpec& t,
                            std::span<const double> y);

// max_i |sqrt(omega/rho)(y_i) (g(y_i) - Qg(y_i))| over the given points.
// Points with a coordinate on the domain boundary contribute 0 (the weight
// sqrt(omega/rho) -> 0 there); strictly interior points are evaluated exactly.
double weighted_sup_error(const FieldFunction& g, const QuasiInterpolant& q,
                          const TransformSpec& t,
                          const std::vector<std::vector<double>>& points);

} // namespace sgqi
