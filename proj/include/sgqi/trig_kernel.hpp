#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sgqi {

// Anisotropic tensor-product kernel parameters: one shape parameter c_k and
// one step size h_k per coordinate.  Steps produced from a dyadic level l_k
// satisfy h_k = 2^{-l_k} <= 1/2.
struct KernelSpec {
    std::vector<double> c;
    std::vector<double> h;

    int dim() const { return static_cast<int>(c.size()); }
    void validate() const; // throws std::invalid_argument on bad sizes/values
};

// Multiquadric trigonometric function phi_c(x) = sqrt(c^2 + sin^2(pi x))/(2 pi)
// and its first two derivatives (closed forms).  1-periodic in x, no range
// reduction needed.  c = 0 is the trigonometric B-spline limit; it is valid
// for order 0 only (the kernel has kinks at sin(pi x) = 0).
double eval_phi(double c, double x, int order = 0);

// Psi_c(x) = phi_c''(x) + pi^2 phi_c(x) = pi c^2 (c^2+1) / (2 (c^2+sin^2 pi x)^{3/2}).
// Strictly positive for c > 0.
double eval_psi_c(double c, double x);

// Second-order trigonometric divided difference of phi_c with step h:
//   Psi_{c,h}(x) = 2 pi^2 [phi_c(x+h) - 2 cos(pi h) phi_c(x) + phi_c(x-h)]
//                  / (sin(2 pi h) sin(pi h)),
// together with its derivatives (the difference commutes with d/dx).
// Requires 0 < h < 1/2.
double eval_psi_ch(double c, double h, double x, int order = 0);

// Tensor-product kernel with the paper's per-axis factor sin(2 pi h_k):
//   prod_k D^{alpha_k} Psi_{c_k,h_k}(x_k) * sin(2 pi h_k).
double eval_tensor_kernel(const KernelSpec& spec, std::span<const double> x,
                          std::span<const int> alpha);

// Quadrature weight attached to one axis of a dyadic subgrid.  The trig rule
// sin(2 pi h)/(2 pi) = h - (2 pi h)^2 h / 6 + ... keeps the kernel translates
// a partition of unity; the mesh rule is the plain rectangle weight h.
enum class WeightRule { trig, mesh };

double node_weight(double h, WeightRule rule);

// node_weight(h, rule) * eval_psi_ch(c, h, x, order), with the sin(2 pi h)
// factor cancelled analytically under the trig rule.  That cancellation makes
// the weighted kernel regular at h = 1/2 (level-1 axes), where the raw
// divided difference has a vanishing denominator; trig accepts 0 < h <= 1/2,
// mesh requires h < 1/2.
double eval_weighted_psi_ch(double c, double h, double x, int order, WeightRule rule);

} // namespace sgqi
