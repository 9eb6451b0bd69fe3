#include "sgqi/sparse_grid.hpp"

#include "sgqi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sgqi {

int LevelIndex::sum() const { return std::accumulate(l.begin(), l.end(), 0); }

std::vector<double> LevelIndex::mesh() const {
    std::vector<double> h(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) h[k] = std::ldexp(1.0, -l[k]);
    return h;
}

std::vector<double> GridNode::coords() const {
    std::vector<double> t(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        t[k] = std::ldexp(static_cast<double>(j[k]), -level.l[k]);
    return t;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

std::vector<LevelIndex> enumerate_shell(int s, int d) {
    if (d < 1) throw std::invalid_argument("enumerate_shell: d must be >= 1");
    std::vector<LevelIndex> out;
    if (s < d) return out;
    LevelIndex cur;
    cur.l.assign(d, 1);
    // lexicographic walk over compositions of s into d positive parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur.l[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= remaining - (d - 1 - pos); ++v) {
            cur.l[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, s);
    return out;
}

CombinationPlan combination_plan(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("combination_plan: need n >= 1 and d >= 1");
    CombinationPlan plan;
    plan.n = n;
    plan.d = d;
    const long long sign_d = (d % 2 == 0) ? -1 : 1; // (-1)^{d-1}
    for (int k = 0; k < d; ++k) {
        CombinationPlan::Shell shell;
        shell.sum = n + k;
        const long long sign_k = (k % 2 == 0) ? 1 : -1;
        shell.coeff = sign_d * sign_k * static_cast<long long>(binomial(d - 1, k));
        shell.levels = enumerate_shell(shell.sum, d);
        plan.shells.push_back(std::move(shell));
    }
    return plan;
}

std::uint64_t subgrid_size(const LevelIndex& l, GridConvention conv) {
    std::uint64_t n = 1;
    for (int lk : l.l) {
        const std::uint64_t m = (std::uint64_t{1} << lk) + (conv == GridConvention::cube ? 1 : 0);
        n *= m;
    }
    return n;
}

std::vector<GridNode> subgrid_nodes(const LevelIndex& l, GridConvention conv,
                                    std::uint64_t budget) {
    const int d = l.dim();
    for (int lk : l.l)
        if (lk < 1) throw std::invalid_argument("subgrid_nodes: levels must be >= 1");
    const std::uint64_t total = subgrid_size(l, conv);
    if (total > budget)
        throw budget_error("subgrid_nodes: " + std::to_string(total) + " nodes exceed budget " +
                           std::to_string(budget));
    std::vector<std::int64_t> m(d);
    for (int k = 0; k < d; ++k)
        m[k] = (std::int64_t{1} << l.l[k]) + (conv == GridConvention::cube ? 1 : 0);
    std::vector<GridNode> out;
    out.reserve(total);
    GridNode node;
    node.level = l;
    node.j.assign(d, 0);
    // row-major odometer, last axis fastest
    for (std::uint64_t it = 0;; ++it) {
        out.push_back(node);
        int k = d - 1;
        while (k >= 0 && ++node.j[k] == m[k]) node.j[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

namespace {

// Canonical per-axis key of the dyadic rational j * 2^{-l}: reduce to odd
// numerator (or j = 0), pack (level, numerator) into one 64-bit word.
std::uint64_t axis_key(int l, std::int64_t j) {
    while (j != 0 && j % 2 == 0 && l > 0) {
        j /= 2;
        --l;
    }
    if (j == 0) l = 0;
    return (static_cast<std::uint64_t>(l) << 40) | static_cast<std::uint64_t>(j);
}

std::set<std::vector<std::uint64_t>> union_keys(int n, int d, GridConvention conv,
                                                std::uint64_t budget) {
    std::set<std::vector<std::uint64_t>> keys;
    std::uint64_t visited = 0;
    for (const LevelIndex& l : enumerate_shell(n + d - 1, d)) {
        visited += subgrid_size(l, conv);
        if (visited > budget)
            throw budget_error("sparse grid union: node budget " + std::to_string(budget) +
                               " exceeded");
        for (const GridNode& node : subgrid_nodes(l, conv, budget)) {
            std::vector<std::uint64_t> key(d);
            for (int k = 0; k < d; ++k) key[k] = axis_key(l.l[k], node.j[k]);
            keys.insert(std::move(key));
        }
    }
    return keys;
}

} // namespace

std::uint64_t count_sparse_nodes(int n, int d, GridConvention conv, std::uint64_t) {
    // closed-form signed sum: never enumerates, so the budget does not apply
    if (n < 1 || d < 1) throw std::invalid_argument("count_sparse_nodes: need n, d >= 1");
    long long total = 0;
    for (int k = 0; k < d; ++k) {
        const long long sign = ((k + d - 1) % 2 == 0) ? 1 : -1;
        long long shell_sum = 0;
        for (const LevelIndex& l : enumerate_shell(n + k, d))
            shell_sum += static_cast<long long>(subgrid_size(l, conv));
        total += sign * static_cast<long long>(binomial(d - 1, k)) * shell_sum;
    }
    return static_cast<std::uint64_t>(total);
}

std::uint64_t count_sparse_nodes_union(int n, int d, GridConvention conv, std::uint64_t budget) {
    return union_keys(n, d, conv, budget).size();
}

std::vector<GridNode> sparse_nodes(int n, int d, GridConvention conv, std::uint64_t budget) {
    std::vector<GridNode> out;
    for (const auto& key : union_keys(n, d, conv, budget)) {
        GridNode node;
        node.level.l.resize(d);
        node.j.resize(d);
        for (int k = 0; k < d; ++k) {
            int lk = static_cast<int>(key[k] >> 40);
            std::int64_t jk = static_cast<std::int64_t>(key[k] & ((std::uint64_t{1} << 40) - 1));
            if (lk < 1) { // re-express integers 0, 1 at level 1
                jk <<= (1 - lk);
                lk = 1;
            }
            node.level.l[k] = lk;
            node.j[k] = jk;
        }
        out.push_back(std::move(node));
    }
    std::sort(out.begin(), out.end(), [](const GridNode& a, const GridNode& b) {
        return a.coords() < b.coords();
    });
    return out;
}

} // namespace sgqi
