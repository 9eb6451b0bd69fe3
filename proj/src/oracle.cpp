#include "sgqi/oracle.hpp"

#include "sgqi/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sgqi::oracle {

double integrate_periodic(const std::function<double(double)>& fn, const QuadratureSpec& q) {
    const std::size_t m = q.resolution();
    const double h = 1.0 / static_cast<double>(m);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += fn((static_cast<double>(i) + 0.5) * h);
    return sum * h;
}

double integrate_psi_c(double c, const QuadratureSpec& q) {
    return integrate_periodic([c](double x) { return eval_psi_c(c, x); }, q);
}

double integrate_abs_phi2(double c, const QuadratureSpec& q) {
    return integrate_periodic([c](double x) { return std::abs(eval_phi(c, x, 2)); }, q);
}

double convolve(const std::function<double(std::span<const double>)>& f, const KernelSpec& spec,
                std::span<const double> x, std::span<const int> alpha, const QuadratureSpec& q) {
    spec.validate();
    const int d = spec.dim();
    if (d > 3) throw budget_error("convolve: oracle quadrature capped at d <= 3");
    if (static_cast<int>(x.size()) != d || static_cast<int>(alpha.size()) != d)
        throw std::domain_error("convolve: dimension mismatch");
    const std::size_t m = q.resolution();
    const double step = 1.0 / static_cast<double>(m);
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> t(d);
    double sum = 0.0;
    for (;;) {
        double prod = 1.0;
        for (int k = 0; k < d; ++k) {
            t[k] = (static_cast<double>(idx[k]) + 0.5) * step;
            prod *= eval_psi_ch(spec.c[k], spec.h[k], x[k] - t[k], alpha[k]);
        }
        sum += f(t) * prod;
        int k = d - 1;
        while (k >= 0 && ++idx[k] == m) idx[k--] = 0;
        if (k < 0) break;
    }
    return sum * std::pow(step, d);
}

double finite_diff(const std::function<double(double)>& fn, double x, int order, double step) {
    if (order == 1) return (fn(x + step) - fn(x - step)) / (2.0 * step);
    if (order == 2) return (fn(x + step) - 2.0 * fn(x) + fn(x - step)) / (step * step);
    throw std::invalid_argument("finite_diff: order " + std::to_string(order) + " unsupported");
}

} // namespace sgqi::oracle
