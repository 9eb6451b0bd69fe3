#include "sgqi/trig_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgqi {

namespace {
constexpr double kPi = std::numbers::pi;

// Neumaier-compensated sum of three terms; guards the second difference
// against cancellation at tiny h.
double compensated_sum3(double a, double b, double c) {
    double s = a, comp = 0.0;
    for (double v : {b, c}) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            comp += (s - t) + v;
        else
            comp += (v - t) + s;
        s = t;
    }
    return s + comp;
}
} // namespace

void KernelSpec::validate() const {
    if (c.empty() || c.size() != h.size())
        throw std::invalid_argument("KernelSpec: c and h must be nonempty and equally sized");
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!(c[k] >= 0.0))
            throw std::invalid_argument("KernelSpec: shape parameter must be nonnegative");
        if (!(h[k] > 0.0 && h[k] <= 0.5))
            throw std::invalid_argument("KernelSpec: step must lie in (0, 1/2]");
    }
}

double eval_phi(double c, double x, int order) {
    if (order < 0 || order > 2)
        throw std::invalid_argument("eval_phi: derivative order " + std::to_string(order) +
                                    " unsupported (0..2)");
    if (!(c >= 0.0))
        throw std::domain_error("eval_phi: shape parameter must be nonnegative");
    const double sp = std::sin(kPi * x);
    const double s2 = c * c + sp * sp;
    if (order == 0) return std::sqrt(s2) / (2.0 * kPi);
    if (c == 0.0 && sp == 0.0)
        throw std::domain_error("eval_phi: derivative of the c = 0 limit kernel at a kink");
    const double s = std::sqrt(s2);
    if (order == 1) return std::sin(2.0 * kPi * x) / (4.0 * s);
    const double s2x = std::sin(2.0 * kPi * x);
    return kPi * std::cos(2.0 * kPi * x) / (2.0 * s) - kPi * s2x * s2x / (8.0 * s * s2);
}

double eval_psi_c(double c, double x) {
    if (!(c > 0.0))
        throw std::domain_error("eval_psi_c: shape parameter must be positive");
    const double sp = std::sin(kPi * x);
    const double s2 = c * c + sp * sp;
    return kPi * c * c * (c * c + 1.0) / (2.0 * s2 * std::sqrt(s2));
}

double eval_psi_ch(double c, double h, double x, int order) {
    if (!(h > 0.0 && h < 0.5))
        throw std::domain_error("eval_psi_ch: step must lie in (0, 1/2)");
    const double a = eval_phi(c, x + h, order);
    const double b = -2.0 * std::cos(kPi * h) * eval_phi(c, x, order);
    const double d = eval_phi(c, x - h, order);
    const double num = (h < 0x1p-16) ? compensated_sum3(a, b, d) : a + b + d;
    return 2.0 * kPi * kPi * num / (std::sin(2.0 * kPi * h) * std::sin(kPi * h));
}

double eval_tensor_kernel(const KernelSpec& spec, std::span<const double> x,
                          std::span<const int> alpha) {
    spec.validate();
    const std::size_t d = spec.c.size();
    if (x.size() != d || alpha.size() != d)
        throw std::domain_error("eval_tensor_kernel: dimension mismatch");
    double prod = 1.0;
    for (std::size_t k = 0; k < d; ++k)
        prod *= eval_psi_ch(spec.c[k], spec.h[k], x[k], alpha[k]) * std::sin(2.0 * kPi * spec.h[k]);
    return prod;
}

double node_weight(double h, WeightRule rule) {
    return rule == WeightRule::trig ? std::sin(2.0 * kPi * h) / (2.0 * kPi) : h;
}

double eval_weighted_psi_ch(double c, double h, double x, int order, WeightRule rule) {
    const double upper = rule == WeightRule::trig ? 0.5 : 0.4999999999999999;
    if (!(h > 0.0 && h <= upper))
        throw std::domain_error("eval_weighted_psi_ch: step out of range");
    const double a = eval_phi(c, x + h, order);
    const double b = -2.0 * std::cos(kPi * h) * eval_phi(c, x, order);
    const double d = eval_phi(c, x - h, order);
    const double num = (h < 0x1p-16) ? compensated_sum3(a, b, d) : a + b + d;
    if (rule == WeightRule::trig) return kPi * num / std::sin(kPi * h);
    return 2.0 * kPi * kPi * h * num / (std::sin(2.0 * kPi * h) * std::sin(kPi * h));
}

} // namespace sgqi
