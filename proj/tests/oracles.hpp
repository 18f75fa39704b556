#pragma once

// Independent reference computations for the tests. None of these call the
// library's transfer, neighbor or clique code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// p(n) for 0..max_n from Euler's pentagonal number recurrence.
inline std::vector<std::int64_t> partition_counts(int max_n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

using Parts = std::vector<int>;

/// Every partition of n, generated recursively (largest part first).
inline std::vector<Parts> all_partitions(int n) {
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Is mu obtained from lambda by moving one unit between two row positions
/// (or onto a new row)? Brute force over positions.
inline bool one_transfer_apart(const Parts& lambda, const Parts& mu) {
    if (lambda == mu)
        return false;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (std::size_t j = 0; j <= lambda.size(); ++j) {
            if (j == i)
                continue;
            Parts m = lambda;
            m[i] -= 1;
            if (j == lambda.size())
                m.push_back(1);
            else
                m[j] += 1;
            m.erase(std::remove(m.begin(), m.end(), 0), m.end());
            std::sort(m.begin(), m.end(), std::greater<>());
            if (m == mu)
                return true;
        }
    }
    return false;
}

/// Adjacency matrix of G_n over all_partitions(n) by pairwise testing.
inline std::vector<std::vector<char>> brute_force_adjacency(const std::vector<Parts>& verts) {
    const std::size_t k = verts.size();
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v)
            adj[u][v] = one_transfer_apart(verts[u], verts[v]) ? 1 : 0;
    return adj;
}

/// Per-vertex (largest clique through v) − 1, by enumerating every clique.
inline std::vector<int> all_cliques_local_dimension(const std::vector<std::vector<char>>& adj) {
    const std::size_t k = adj.size();
    std::vector<int> best(k, 0);
    std::vector<std::size_t> clique;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        for (std::size_t v : clique)
            best[v] = std::max(best[v], static_cast<int>(clique.size()) - 1);
        for (std::size_t w = start; w < k; ++w) {
            bool ok = std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return adj[u][w] != 0; });
            if (!ok)
                continue;
            clique.push_back(w);
            extend(w + 1);
            clique.pop_back();
        }
    };
    extend(0);
    return best;
}

} // namespace oracle
