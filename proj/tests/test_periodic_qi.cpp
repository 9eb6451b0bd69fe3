#include "sgqi/errors.hpp"
#include "sgqi/experiments.hpp"
#include "sgqi/periodic_qi.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

using namespace sgqi;

namespace {

FieldFunction product_test_fn(int d) {
    return [d](std::span<const double> x) {
        std::vector<int> zero(d, 0);
        return test_fn_periodic(d, x, zero);
    };
}

} // namespace

TEST_CASE("shape parameters") {
    LevelIndex l{{3, 5}};
    SUBCASE("fixed mode: c_j = A_j h_j") {
        ShapePolicy p{ShapeMode::fixed, {0.4, 0.8}, 2, {}};
        const auto c = shape_parameters(p, l);
        CHECK(c[0] == doctest::Approx(0.4 / 8));
        CHECK(c[1] == doctest::Approx(0.8 / 32));
    }
    SUBCASE("power law: c_j = A_j h_j^{(r+2)/(r+2+alpha_j)}") {
        ShapePolicy p{ShapeMode::power_law, {1.0, 1.0}, 2, {0, 2}};
        const auto c = shape_parameters(p, l);
        CHECK(c[0] == doctest::Approx(std::pow(0.125, 1.0)));
        CHECK(c[1] == doctest::Approx(std::pow(1.0 / 32, 4.0 / 6.0)));
    }
    SUBCASE("clamped to e^{-1}") {
        int clamped = 0;
        ShapePolicy p{ShapeMode::fixed, {100.0, 0.1}, 2, {}};
        const auto c = shape_parameters(p, l, &clamped);
        CHECK(clamped == 1);
        CHECK(c[0] == doctest::Approx(std::exp(-1.0)));
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(shape_parameters(ShapePolicy{ShapeMode::fixed, {0.4}, 2, {}}, l),
                        std::domain_error);
        CHECK_THROWS_AS(shape_parameters(ShapePolicy{ShapeMode::fixed, {0.4, -1.0}, 2, {}}, l),
                        std::domain_error);
    }
}

TEST_CASE("sampling stores the origin value first") {
    const int d = 5;
    const auto plan = combination_plan(5, d);
    const auto field = sample_periodic(product_test_fn(d), 5, d, plan);
    REQUIRE(!field.subgrids.empty());
    // f_5(0) = g(0)^5 = 0.6^5
    CHECK(field.subgrids[0].values[0] == doctest::Approx(0.07776).epsilon(1e-12));
    CHECK(field.d == d);
    CHECK(field.total_nodes() > 0);
}

TEST_CASE("sampling rejects non-finite values and tiny budgets") {
    const auto plan = combination_plan(3, 2);
    FieldFunction bad = [](std::span<const double> x) {
        return x[0] == 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    CHECK_THROWS_AS(sample_periodic(bad, 3, 2, plan), data_error);
    CHECK_THROWS_AS(sample_periodic(product_test_fn(2), 3, 2, plan,
                                    EndpointPolicy::identify, 5),
                    budget_error);
    CHECK_THROWS_AS(sample_periodic(product_test_fn(2), 4, 2, plan), std::domain_error);
}

TEST_CASE("constants are reproduced") {
    FieldFunction one = [](std::span<const double>) { return 1.0; };
    const auto plan = combination_plan(5, 2);
    QuasiInterpolant q(sample_periodic(one, 5, 2, plan),
                       ShapePolicy{ShapeMode::fixed, {0.05, 0.05}, 2, {}});
    const int a0[] = {0, 0};
    for (double x : {0.0, 0.21, 0.93}) {
        const double pt[] = {x, 0.5 * x};
        CHECK(q.evaluate(pt, a0) == doctest::Approx(1.0).epsilon(5e-3));
    }
}

TEST_CASE("derivative evaluation matches finite differences of the value") {
    const int d = 2;
    const auto plan = combination_plan(6, d);
    ShapePolicy policy{ShapeMode::power_law, {0.5, 0.5}, 2, {1, 0}};
    QuasiInterpolant q(sample_periodic(product_test_fn(d), 6, d, plan), policy);
    const int a0[] = {0, 0};
    const int a1[] = {1, 0};
    const double eps = 1e-5;
    for (double x : {0.13, 0.62}) {
        const double lo[] = {x - eps, 0.4};
        const double hi[] = {x + eps, 0.4};
        const double mid[] = {x, 0.4};
        const double fd = (q.evaluate(hi, a0) - q.evaluate(lo, a0)) / (2 * eps);
        CHECK(q.evaluate(mid, a1) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("batch evaluation is deterministic across thread counts") {
    const int d = 2;
    const auto plan = combination_plan(5, d);
    QuasiInterpolant q(sample_periodic(product_test_fn(d), 5, d, plan),
                       ShapePolicy{ShapeMode::fixed, {0.3, 0.3}, 2, {}});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 101; ++i) pts.push_back({unif(rng), unif(rng)});
    const std::vector<int> a0 = {0, 0};
    const auto serial = q.evaluate_batch(pts, a0, 1);
    const auto parallel = q.evaluate_batch(pts, a0, 4);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(serial[i] == parallel[i]); // bitwise
}

TEST_CASE("scattered form agrees with the gridded evaluator in 1-D") {
    const int n = 5, m = 1 << n;
    const double h = 1.0 / m;
    const auto plan = combination_plan(n, 1);
    FieldFunction f = [](std::span<const double> x) { return std::sin(2 * std::numbers::pi * x[0]); };
    QuasiInterpolant q(sample_periodic(f, n, 1, plan),
                       ShapePolicy{ShapeMode::fixed, {0.5}, 2, {}});

    std::vector<std::vector<double>> nodes;
    std::vector<double> weights, values;
    for (int j = 0; j < m; ++j) {
        nodes.push_back({j * h});
        weights.push_back(node_weight(h, WeightRule::trig));
        values.push_back(f(nodes.back()));
    }
    KernelSpec spec;
    spec.c = {0.5 * h};
    spec.h = {h};
    ScatteredQuasiInterpolant sq(nodes, weights, values, spec);
    const int a0[] = {0};
    for (double x : {0.05, 0.41, 0.88}) {
        const double pt[] = {x};
        CHECK(q.evaluate(pt, a0) == doctest::Approx(sq.evaluate(pt, a0)).epsilon(1e-11));
    }
}

TEST_CASE("field and interpolant serialization round-trips") {
    const int d = 2;
    const auto plan = combination_plan(4, d);
    auto field = sample_periodic(product_test_fn(d), 4, d, plan);
    std::stringstream buf;
    save_field(field, buf);
    const auto loaded = load_field(buf);
    REQUIRE(loaded.subgrids.size() == field.subgrids.size());
    CHECK(loaded.d == field.d);
    CHECK(loaded.n == field.n);
    for (std::size_t i = 0; i < field.subgrids.size(); ++i) {
        CHECK(loaded.subgrids[i].level == field.subgrids[i].level);
        CHECK(loaded.subgrids[i].coeff == field.subgrids[i].coeff);
        CHECK(loaded.subgrids[i].values == field.subgrids[i].values);
    }

    QuasiInterpolant q(std::move(field), ShapePolicy{ShapeMode::fixed, {0.3, 0.3}, 2, {}});
    std::stringstream buf2;
    save_interpolant(q, buf2);
    const auto q2 = load_interpolant(buf2);
    const int a0[] = {0, 0};
    for (double x : {0.11, 0.73}) {
        const double pt[] = {x, 1.0 - x};
        CHECK(q.evaluate(pt, a0) == doctest::Approx(q2.evaluate(pt, a0)).epsilon(1e-14));
    }

    std::stringstream junk("sgqi-field 2\n");
    CHECK_THROWS_AS(load_field(junk), data_error);
}

TEST_CASE("evaluate validates arguments") {
    const auto plan = combination_plan(3, 2);
    QuasiInterpolant q(sample_periodic(product_test_fn(2), 3, 2, plan),
                       ShapePolicy{ShapeMode::fixed, {0.3, 0.3}, 2, {}});
    const double pt[] = {0.1, 0.2};
    const int bad_alpha[] = {3, 0};
    CHECK_THROWS_AS(q.evaluate(pt, bad_alpha), std::invalid_argument);
    const double short_pt[] = {0.1};
    const int a0[] = {0, 0};
    CHECK_THROWS_AS(q.evaluate(std::span<const double>(short_pt, 1), a0), std::domain_error);
}
