#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace partgraph {

/// Exact maximum clique of a small dense graph given as an adjacency matrix.
/// Branch and bound with a greedy-coloring upper bound: vertices are colored
/// greedily, and a branch is cut once |current| + colors-left cannot beat the
/// incumbent.
class MaxCliqueSolver {
public:
    /// `adj[i * size + j]` is nonzero iff i ~ j.
    MaxCliqueSolver(std::size_t size, std::vector<char> adj) : size_(size), adj_(std::move(adj)) {}

    std::size_t solve() {
        best_ = 0;
        std::vector<std::uint32_t> all(size_);
        for (std::uint32_t i = 0; i < size_; ++i)
            all[i] = i;
        // higher-degree vertices first gives tighter colorings
        std::vector<std::size_t> deg(size_, 0);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                deg[i] += adj_[i * size_ + j] != 0;
        std::stable_sort(all.begin(), all.end(), [&](auto x, auto y) { return deg[x] > deg[y]; });
        expand(0, all);
        return best_;
    }

private:
    bool adjacent(std::uint32_t i, std::uint32_t j) const { return adj_[i * size_ + j] != 0; }

    void color_sort(std::span<const std::uint32_t> candidates, std::vector<std::uint32_t>& order,
                    std::vector<std::size_t>& colors) const {
        std::vector<std::vector<std::uint32_t>> classes;
        for (std::uint32_t v : candidates) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = std::any_of(classes[k].begin(), classes[k].end(),
                                         [&](std::uint32_t u) { return adjacent(u, v); });
                if (!clash)
                    break;
            }
            if (k == classes.size())
                classes.emplace_back();
            classes[k].push_back(v);
        }
        order.clear();
        colors.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::uint32_t v : classes[k]) {
                order.push_back(v);
                colors.push_back(k + 1);
            }
    }

    void expand(std::size_t current, std::vector<std::uint32_t> candidates) {
        if (candidates.empty()) {
            best_ = std::max(best_, current);
            return;
        }
        std::vector<std::uint32_t> order;
        std::vector<std::size_t> colors;
        color_sort(candidates, order, colors);
        while (!order.empty()) {
            if (current + colors.back() <= best_)
                return;
            std::uint32_t v = order.back();
            order.pop_back();
            colors.pop_back();
            std::vector<std::uint32_t> next;
            for (std::uint32_t u : order)
                if (adjacent(u, v))
                    next.push_back(u);
            expand(current + 1, std::move(next));
        }
    }

    std::size_t size_;
    std::vector<char> adj_;
    std::size_t best_ = 0;
};

} // namespace partgraph
