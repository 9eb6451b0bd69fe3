#pragma once

#include <cstdint>
#include <vector>

namespace sgqi {

// Multi-index of dyadic refinement levels, all >= 1.  Mesh h_k = 2^{-l_k}.
struct LevelIndex {
    std::vector<int> l;

    int dim() const { return static_cast<int>(l.size()); }
    int sum() const;
    std::vector<double> mesh() const;

    auto operator<=>(const LevelIndex&) const = default;
};

// Per-axis index range convention for a dyadic subgrid.
//   torus: j_k in {0, ..., 2^{l_k} - 1}   (coordinate 1 identified with 0)
//   cube:  j_k in {0, ..., 2^{l_k}}       (both endpoints present)
enum class GridConvention { torus, cube };

struct GridNode {
    LevelIndex level;
    std::vector<std::int64_t> j;

    std::vector<double> coords() const; // t_k = j_k * 2^{-l_k}, exact dyadics
};

// Signed Boolean-sum plan over level shells |l| = n + k, k = 0..d-1, with
// coefficients (-1)^{d-1} (-1)^k binom(d-1, k).
struct CombinationPlan {
    struct Shell {
        int sum = 0;               // |l| for this shell
        long long coeff = 0;       // signed combination coefficient
        std::vector<LevelIndex> levels;
    };
    int n = 0;
    int d = 0;
    std::vector<Shell> shells;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ull;

// All compositions of s into d parts >= 1, lexicographic.  Empty when s < d.
std::vector<LevelIndex> enumerate_shell(int s, int d);

CombinationPlan combination_plan(int n, int d);

// Number of nodes of the single subgrid W_l under the given convention.
std::uint64_t subgrid_size(const LevelIndex& l, GridConvention conv);

// Full Cartesian product of the per-axis ranges, row-major (last axis fastest).
std::vector<GridNode> subgrid_nodes(const LevelIndex& l, GridConvention conv,
                                    std::uint64_t budget = kDefaultNodeBudget);

// |W_{n,d}| by the inclusion-exclusion formula
//   sum_{k=0}^{d-1} (-1)^{k+d-1} binom(d-1,k) sum_{|l|=n+k} |W_l|.
std::uint64_t count_sparse_nodes(int n, int d, GridConvention conv = GridConvention::cube,
                                 std::uint64_t budget = kDefaultNodeBudget);

// Same count by direct set-union enumeration of the top shell; test oracle.
std::uint64_t count_sparse_nodes_union(int n, int d, GridConvention conv = GridConvention::cube,
                                       std::uint64_t budget = kDefaultNodeBudget);

// Deduplicated union of the top-shell subgrids, sorted by coordinates.
std::vector<GridNode> sparse_nodes(int n, int d, GridConvention conv = GridConvention::cube,
                                   std::uint64_t budget = kDefaultNodeBudget);

std::uint64_t binomial(int n, int k);

} // namespace sgqi
