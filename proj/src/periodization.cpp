#include "sgqi/periodization.hpp"

#include "sgqi/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sgqi {

namespace {
void check_axis(const TransformSpec& t, int axis) {
    if (axis < 0 || axis >= t.dim())
        throw std::domain_error("transform: axis out of range");
}
} // namespace

double forward(const TransformSpec& t, double x, int axis) {
    check_axis(t, axis);
    if (x < t.domain_lo() - 1e-15 || x > t.domain_hi() + 1e-15)
        throw std::domain_error("forward: x outside the axis domain");
    if (t.kind == TransformKind::identity) return x;
    const double eta = t.eta[axis];
    const double a = std::pow(1.0 + 2.0 * x, eta);
    const double b = std::pow(1.0 - 2.0 * x, eta);
    return 0.5 * (a - b) / (a + b);
}

double forward_deriv(const TransformSpec& t, double x, int axis) {
    check_axis(t, axis);
    if (x < t.domain_lo() - 1e-15 || x > t.domain_hi() + 1e-15)
        throw std::domain_error("forward_deriv: x outside the axis domain");
    if (t.kind == TransformKind::identity) return 1.0;
    const double eta = t.eta[axis];
    const double a = std::pow(1.0 + 2.0 * x, eta);
    const double b = std::pow(1.0 - 2.0 * x, eta);
    const double q = 1.0 - 4.0 * x * x;
    return 4.0 * eta * std::pow(q, eta - 1.0) / ((a + b) * (a + b));
}

double inverse(const TransformSpec& t, double y, int axis) {
    check_axis(t, axis);
    if (y < t.domain_lo() - 1e-15 || y > t.domain_hi() + 1e-15)
        throw std::domain_error("inverse: y outside the axis range");
    if (t.kind == TransformKind::identity) return y;
    if (y >= 0.5) return 0.5;
    if (y <= -0.5) return -0.5;
    const double eta = t.eta[axis];
    const double u = (1.0 + 2.0 * y) / (1.0 - 2.0 * y);
    const double v = std::pow(u, 1.0 / eta);
    return 0.5 * (v - 1.0) / (v + 1.0);
}

double density(const TransformSpec& t, double y, int axis) {
    const double x = inverse(t, y, axis);
    const double g = forward_deriv(t, x, axis);
    if (g <= 0.0) {
        std::ostringstream oss;
        oss << "density: gamma' vanishes at y = " << y << " (axis " << axis << ")";
        throw singularity_error(oss.str());
    }
    return 1.0 / g;
}

SampledField periodize_samples(const FieldFunction& g, const TransformSpec& t, int n,
                               const CombinationPlan& plan, EndpointPolicy endpoint,
                               std::uint64_t budget) {
    const int d = t.dim();
    const double lo = t.domain_lo();
    FieldFunction f = [&, d, lo](std::span<const double> torus) {
        std::vector<double> y(d);
        double factor = 1.0;
        for (int k = 0; k < d; ++k) {
            const double x = lo + torus[k];
            y[k] = forward(t, x, k);
            factor *= std::sqrt(t.omega(k, y[k]) * forward_deriv(t, x, k));
        }
        return g(y) * factor;
    };
    return sample_periodic(f, n, d, plan, endpoint, budget);
}

double evaluate_nonperiodic(const QuasiInterpolant& q, const TransformSpec& t,
                            std::span<const double> y) {
    const int d = t.dim();
    if (static_cast<int>(y.size()) != d || q.field().d != d)
        throw std::domain_error("evaluate_nonperiodic: dimension mismatch");
    std::vector<double> x(d);
    double factor = 1.0;
    for (int k = 0; k < d; ++k) {
        factor *= std::sqrt(density(t, y[k], k) / t.omega(k, y[k]));
        x[k] = inverse(t, y[k], k) - t.domain_lo();
    }
    const std::vector<int> alpha(d, 0);
    return factor * q.evaluate(x, alpha);
}

double weighted_sup_error(const FieldFunction& g, const QuasiInterpolant& q,
                          const TransformSpec& t,
                          const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw std::domain_error("weighted_sup_error: empty point list");
    const int d = t.dim();
    double worst = 0.0;
    for (const auto& y : points) {
        bool boundary = false;
        for (int k = 0; k < d; ++k)
            if (y[k] <= t.domain_lo() || y[k] >= t.domain_hi()) boundary = true;
        if (boundary) continue; // weight sqrt(omega/rho) -> 0 there
        double w = 1.0;
        for (int k = 0; k < d; ++k) w *= std::sqrt(t.omega(k, y[k]) / density(t, y[k], k));
        const double res = std::abs(w * (g(y) - evaluate_nonperiodic(q, t, y)));
        worst = std::max(worst, res);
    }
    return worst;
}

} // namespace sgqi
