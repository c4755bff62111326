#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace lczmbt {

/// Maximum-weight assignment on a square matrix of non-negative weights
/// (Kuhn-Munkres, O(n^3)). Returns the column assigned to each row. Rows
/// whose assigned weight is zero are effectively unmatched.
inline std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<long>>& weight) {
    const std::size_t n = weight.size();
    if (n == 0) return {};
    constexpr long kInf = std::numeric_limits<long>::max() / 4;
    // Minimise cost = -weight; 1-based potentials as in the classic
    // formulation, column 0 is the virtual start.
    std::vector<long> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match_of_col(n + 1, 0), way(n + 1, 0);
    for (std::size_t row = 1; row <= n; ++row) {
        match_of_col[0] = row;
        std::size_t col0 = 0;
        std::vector<long> min_slack(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col0] = true;
            const std::size_t r = match_of_col[col0];
            long delta = kInf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= n; ++c) {
                if (used[c]) continue;
                const long cur = -weight[r - 1][c - 1] - u[r] - v[c];
                if (cur < min_slack[c]) {
                    min_slack[c] = cur;
                    way[c] = col0;
                }
                if (min_slack[c] < delta) {
                    delta = min_slack[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= n; ++c) {
                if (used[c]) {
                    u[match_of_col[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_slack[c] -= delta;
                }
            }
            col0 = col1;
        } while (match_of_col[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            match_of_col[col0] = match_of_col[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t c = 1; c <= n; ++c) assignment[match_of_col[c] - 1] = c - 1;
    return assignment;
}

}  // namespace lczmbt
