#pragma once

#include "sgqi/trig_kernel.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sgqi {
// Independent brute-force references for tests and acceptance.  Nothing here
// is called by the evaluation path.
namespace oracle {

// Composite midpoint rule on the torus; midpoint and trapezoid coincide in
// accuracy for smooth periodic integrands and midpoint has no endpoint
// duplication questions.
struct QuadratureSpec {
    int log2_resolution = 12; // nodes per axis = 2^log2_resolution

    std::size_t resolution() const { return std::size_t{1} << log2_resolution; }
};

// integral over T of Psi_c = phi_c'' + pi^2 phi_c
double integrate_psi_c(double c, const QuadratureSpec& q = {});

// integral over T of |phi_c''|
double integrate_abs_phi2(double c, const QuadratureSpec& q = {});

// integral over T of an arbitrary 1-periodic integrand
double integrate_periodic(const std::function<double(double)>& fn, const QuadratureSpec& q = {});

// Tensor midpoint quadrature of int f(t) D^alpha Psi_{c,h}(x - t) dt, d <= 3.
double convolve(const std::function<double(std::span<const double>)>& f, const KernelSpec& spec,
                std::span<const double> x, std::span<const int> alpha,
                const QuadratureSpec& q = {});

// Central finite differences, order 1 or 2.
double finite_diff(const std::function<double(double)>& fn, double x, int order, double step);

} // namespace oracle
} // namespace sgqi
