#include "sgqi/errors.hpp"
#include "sgqi/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sgqi;
namespace orc = sgqi::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("periodic quadrature") {
    // exact for low-order trigonometric polynomials
    CHECK(orc::integrate_periodic([](double x) { return std::sin(2 * kPi * x) *
                                                        std::sin(2 * kPi * x); }) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK(orc::integrate_periodic([](double) { return 3.0; }) ==
          doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("kernel integral near one") {
    // int Psi_c = 1 + O(c^2 |ln c|)
    CHECK(orc::integrate_psi_c(0.1) == doctest::Approx(1.0).epsilon(2e-2));
    // exact excess is sqrt(1+c^2) E(1/(1+c^2)) - 1 ~ (|ln c| + ln 4 + 1/2) c^2 / 2
    const double excess = orc::integrate_psi_c(0.01, orc::QuadratureSpec{16}) - 1.0;
    CHECK(excess >= -1e-9);
    CHECK(excess < (std::log(4.0) + 0.5 + std::abs(std::log(0.01))) * 1e-4 / 2 + 1e-9);
}

TEST_CASE("abs second derivative integral obeys the log bound") {
    for (double c : {0.1, 0.01}) {
        const double bound = (24.0 + 12.0 * std::log(2.0)) * std::abs(std::log(c));
        CHECK(orc::integrate_abs_phi2(c, orc::QuadratureSpec{16}) <= bound);
    }
}

TEST_CASE("finite differences") {
    const auto fn = [](double x) { return std::sin(x); };
    CHECK(orc::finite_diff(fn, 0.4, 1, 1e-5) == doctest::Approx(std::cos(0.4)).epsilon(1e-8));
    CHECK(orc::finite_diff(fn, 0.4, 2, 1e-4) == doctest::Approx(-std::sin(0.4)).epsilon(1e-6));
    CHECK_THROWS(orc::finite_diff(fn, 0.4, 3, 1e-4));
}

TEST_CASE("convolution oracle approximates the identity") {
    // smooth periodic target: the mollified convolution reproduces it to O(h^2 + c^2 ln c)
    KernelSpec spec;
    spec.c = {0.02};
    spec.h = {1.0 / 128};
    const auto f = [](std::span<const double> x) { return std::sin(2 * kPi * x[0]); };
    const int a0[] = {0};
    for (double x : {0.1, 0.62}) {
        const double pt[] = {x};
        CHECK(orc::convolve(f, spec, pt, a0, orc::QuadratureSpec{12}) ==
              doctest::Approx(std::sin(2 * kPi * x)).epsilon(5e-3));
    }
    // derivative flag differentiates the kernel
    const int a1[] = {1};
    const double pt[] = {0.3};
    CHECK(orc::convolve(f, spec, pt, a1, orc::QuadratureSpec{12}) ==
          doctest::Approx(2 * kPi * std::cos(2 * kPi * 0.3)).epsilon(5e-3));
}

TEST_CASE("convolution oracle rejects high dimensions") {
    KernelSpec spec;
    spec.c = {0.1, 0.1, 0.1, 0.1};
    spec.h = {0.25, 0.25, 0.25, 0.25};
    const auto f = [](std::span<const double>) { return 1.0; };
    const double pt[] = {0.1, 0.2, 0.3, 0.4};
    const int a0[] = {0, 0, 0, 0};
    CHECK_THROWS_AS(orc::convolve(f, spec, pt, a0, orc::QuadratureSpec{4}), budget_error);
}
