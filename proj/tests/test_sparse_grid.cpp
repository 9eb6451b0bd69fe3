#include "sgqi/errors.hpp"
#include "sgqi/sparse_grid.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sgqi;

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(9, 9) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("shell enumeration") {
    CHECK(enumerate_shell(3, 4).empty()); // s < d
    const auto shell = enumerate_shell(4, 2);
    REQUIRE(shell.size() == 3);
    CHECK(shell[0].l == std::vector<int>{1, 3});
    CHECK(shell[1].l == std::vector<int>{2, 2});
    CHECK(shell[2].l == std::vector<int>{3, 1});
    // count of compositions of s into d positive parts
    for (int d = 1; d <= 4; ++d)
        for (int s = d; s <= d + 5; ++s)
            CHECK(enumerate_shell(s, d).size() == binomial(s - 1, d - 1));
}

TEST_CASE("combination plan coefficients") {
    const auto plan = combination_plan(4, 3);
    CHECK(plan.n == 4);
    CHECK(plan.d == 3);
    REQUIRE(plan.shells.size() == 3);
    // shells |l| = n..n+d-1 with coefficients (-1)^{d-1-k} binom(d-1, k)
    CHECK(plan.shells[0].sum == 4);
    CHECK(plan.shells[0].coeff == 1);
    CHECK(plan.shells[1].sum == 5);
    CHECK(plan.shells[1].coeff == -2);
    CHECK(plan.shells[2].sum == 6);
    CHECK(plan.shells[2].coeff == 1);
    // signed subgrid count is 1 (constants reproduced once)
    for (int d : {1, 2, 4, 7, 10}) {
        const auto p = combination_plan(3, d);
        long long total = 0;
        for (const auto& s : p.shells) total += s.coeff * (long long)s.levels.size();
        CHECK(total == 1);
    }
}

TEST_CASE("subgrid sizes and nodes") {
    LevelIndex l{{2, 3}};
    CHECK(subgrid_size(l, GridConvention::torus) == 4 * 8);
    CHECK(subgrid_size(l, GridConvention::cube) == 5 * 9);
    const auto nodes = subgrid_nodes(l, GridConvention::torus);
    REQUIRE(nodes.size() == 32);
    // row-major: last axis fastest
    CHECK(nodes[0].coords() == std::vector<double>{0.0, 0.0});
    CHECK(nodes[1].coords() == std::vector<double>{0.0, 0.125});
    CHECK(nodes[8].coords() == std::vector<double>{0.25, 0.0});
    CHECK_THROWS_AS(subgrid_nodes(LevelIndex{{20, 20}}, GridConvention::cube, 1000),
                    budget_error);
}

TEST_CASE("sparse node counts") {
    CHECK(count_sparse_nodes(7, 2, GridConvention::cube) == 1281);
    CHECK(subgrid_size(LevelIndex{{7, 7}}, GridConvention::cube) == 16641);
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 6; ++n)
            CHECK(count_sparse_nodes(n, d, GridConvention::torus) ==
                  count_sparse_nodes_union(n, d, GridConvention::torus));
}

TEST_CASE("sparse node union is sorted and unique") {
    const auto nodes = sparse_nodes(4, 2, GridConvention::cube);
    CHECK(nodes.size() == count_sparse_nodes(4, 2, GridConvention::cube));
    std::vector<std::vector<double>> coords;
    for (const auto& gn : nodes) coords.push_back(gn.coords());
    CHECK(std::is_sorted(coords.begin(), coords.end()));
    CHECK(std::adjacent_find(coords.begin(), coords.end()) == coords.end());
}
