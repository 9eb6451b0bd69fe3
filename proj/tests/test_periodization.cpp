#include "sgqi/errors.hpp"
#include "sgqi/experiments.hpp"
#include "sgqi/oracle.hpp"
#include "sgqi/periodization.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sgqi;

TEST_CASE("identity transform is the identity") {
    TransformSpec t(2);
    CHECK(t.domain_lo() == 0.0);
    CHECK(forward(t, 0.3, 0) == doctest::Approx(0.3));
    CHECK(forward_deriv(t, 0.3, 1) == doctest::Approx(1.0));
    CHECK(inverse(t, 0.3, 0) == doctest::Approx(0.3));
    CHECK(density(t, 0.3, 0) == doctest::Approx(1.0));
}

TEST_CASE("logarithmic transform round-trips") {
    for (double eta : {1.0, 2.0, 4.0}) {
        TransformSpec t(TransformKind::logarithmic, {eta});
        CHECK(t.domain_lo() == -0.5);
        CHECK(forward(t, 0.0, 0) == doctest::Approx(0.0));
        CHECK(forward(t, 0.5, 0) == doctest::Approx(0.5));
        CHECK(forward(t, -0.5, 0) == doctest::Approx(-0.5));
        for (double x : {-0.49, -0.2, 0.0, 0.13, 0.37}) {
            const double y = forward(t, x, 0);
            CHECK(inverse(t, y, 0) == doctest::Approx(x).epsilon(1e-10));
            // monotone into the same interval
            CHECK(y >= -0.5);
            CHECK(y <= 0.5);
        }
    }
    // eta = 1 is the identity on [-0.5, 0.5]
    TransformSpec t1(TransformKind::logarithmic, {1.0});
    CHECK(forward(t1, 0.31, 0) == doctest::Approx(0.31).epsilon(1e-13));
}

TEST_CASE("transform derivative and density") {
    TransformSpec t(TransformKind::logarithmic, {4.0, 2.0});
    for (double x : {-0.3, 0.0, 0.24}) {
        for (int axis : {0, 1}) {
            auto fn = [&](double u) { return forward(t, u, axis); };
            CHECK(forward_deriv(t, x, axis) ==
                  doctest::Approx(oracle::finite_diff(fn, x, 1, 1e-6)).epsilon(1e-6));
        }
    }
    // rho(0) = 1/gamma'(0) = 1/eta
    CHECK(density(t, 0.0, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(density(t, 0.0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    // gamma' vanishes at the boundary for eta >= 2, so the density diverges
    CHECK_THROWS_AS(density(t, 0.5, 0), singularity_error);
    CHECK_THROWS_AS(density(t, -0.5, 0), singularity_error);
}

TEST_CASE("periodized samples") {
    const int d = 2;
    FieldFunction g = [d](std::span<const double> y) { return test_fn_nonperiodic(d, y); };
    const auto plan = combination_plan(4, d);

    SUBCASE("eta = 1: plain change of variables, no boundary damping") {
        TransformSpec t(TransformKind::logarithmic, {1.0, 1.0});
        const auto field = periodize_samples(g, t, 4, plan);
        // node t = 0 maps to y = (-0.5, -0.5); gamma' = 1, so
        // f(0) = g(-0.5, -0.5) = 1.5^2
        CHECK(field.subgrids[0].values[0] == doctest::Approx(2.25).epsilon(1e-12));
    }
    SUBCASE("eta = 2: samples at boundary-touching nodes vanish") {
        TransformSpec t(TransformKind::logarithmic, {2.0, 2.0});
        const auto field = periodize_samples(g, t, 4, plan);
        CHECK(field.subgrids[0].values[0] == doctest::Approx(0.0));
        bool interior_nonzero = false;
        for (double v : field.subgrids[0].values) interior_nonzero |= (v != 0.0);
        CHECK(interior_nonzero);
    }
}

TEST_CASE("norm transfer: weighted cube residual equals the torus residual") {
    const int d = 2;
    FieldFunction g = [d](std::span<const double> y) { return test_fn_nonperiodic(d, y); };
    for (double eta : {2.0, 4.0}) {
        TransformSpec t(TransformKind::logarithmic, {eta, eta});
        const int n = 6;
        const auto plan = combination_plan(n, d);
        auto field = periodize_samples(g, t, n, plan);
        // keep a copy of f for the torus-side residual
        FieldFunction f = [&](std::span<const double> x) {
            double prod = 1.0;
            std::vector<double> y(d);
            for (int k = 0; k < d; ++k) {
                const double xk = t.domain_lo() + x[k];
                y[k] = forward(t, xk, k);
                prod *= std::sqrt(t.omega(k, y[k]) * forward_deriv(t, xk, k));
            }
            return prod * g(y);
        };
        QuasiInterpolant q(std::move(field), ShapePolicy{ShapeMode::fixed, {0.5, 0.5}, 2, {}});

        std::mt19937 rng(11);
        std::uniform_real_distribution<double> unif(-0.45, 0.45);
        const int a0[] = {0, 0};
        for (int i = 0; i < 50; ++i) {
            const double y[] = {unif(rng), unif(rng)};
            double w = 1.0;
            std::vector<double> x(d);
            for (int k = 0; k < d; ++k) {
                w *= std::sqrt(t.omega(k, y[k]) / density(t, y[k], k));
                x[k] = inverse(t, y[k], k) - t.domain_lo();
            }
            const double lhs = w * (g(y) - evaluate_nonperiodic(q, t, y));
            const double rhs = f(x) - q.evaluate(x, a0);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("weighted sup error") {
    const int d = 2;
    FieldFunction g = [d](std::span<const double> y) { return test_fn_nonperiodic(d, y); };
    TransformSpec t(TransformKind::logarithmic, {4.0, 4.0});
    const auto plan = combination_plan(5, d);
    QuasiInterpolant q(periodize_samples(g, t, 5, plan),
                       ShapePolicy{ShapeMode::fixed, {0.5, 0.5}, 2, {}});

    CHECK_THROWS(weighted_sup_error(g, q, t, {}));
    // boundary-only point lists give 0 (the weight vanishes there)
    CHECK(weighted_sup_error(g, q, t, {{0.5, 0.1}, {-0.5, 0.3}}) == doctest::Approx(0.0));
    // interior points give a positive residual bounded by a crude cap
    const double err = weighted_sup_error(g, q, t, {{0.0, 0.0}, {0.2, -0.3}, {0.41, 0.11}});
    CHECK(err > 0.0);
    CHECK(err < 0.5);
}
