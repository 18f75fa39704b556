#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "partgraph/partition.hpp"

namespace partgraph {

using VertexId = std::uint32_t;

struct OrientedEdge {
    VertexId source = 0;
    VertexId target = 0;

    OrientedEdge reversed() const noexcept { return {target, source}; }
    friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

struct UnorientedEdge {
    VertexId lo = 0;
    VertexId hi = 0;

    OrientedEdge forward() const noexcept { return {lo, hi}; }
    friend auto operator<=>(const UnorientedEdge&, const UnorientedEdge&) = default;
};

/// G_n: vertices are Par(n) in canonical order, adjacency by elementary
/// transfers. Immutable after construction.
class PartitionGraph {
public:
    explicit PartitionGraph(int n) : n_(n), vertices_(enumerate_partitions(n)) {
        adjacency_.resize(vertices_.size());
        for (VertexId v = 0; v < vertices_.size(); ++v) {
            for (const Partition& mu : neighbors(vertices_[v])) {
                auto w = find(mu);
                if (!w)
                    throw ConsistencyError("neighbor " + to_string(mu) + " is not a partition of " + std::to_string(n));
                adjacency_[v].push_back(*w);
            }
            std::sort(adjacency_[v].begin(), adjacency_[v].end());
            edge_count_ += adjacency_[v].size();
        }
        edge_count_ /= 2;
    }

    int n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Partition>& vertices() const noexcept { return vertices_; }
    const Partition& vertex(VertexId v) const { return vertices_.at(v); }

    std::span<const VertexId> adjacent(VertexId v) const { return adjacency_.at(v); }

    std::size_t degree(VertexId v) const {
        if (v >= vertices_.size())
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
        return adjacency_[v].size();
    }

    bool has_edge(VertexId u, VertexId v) const {
        const auto& adj = adjacency_.at(u);
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    /// Index of a partition of n, if it is one.
    std::optional<VertexId> find(const Partition& p) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p, canonical_before);
        if (it == vertices_.end() || *it != p)
            return std::nullopt;
        return static_cast<VertexId>(it - vertices_.begin());
    }

    VertexId index_of(const Partition& p) const {
        auto v = find(p);
        if (!v)
            throw std::invalid_argument(to_string(p) + " is not a partition of " + std::to_string(n_));
        return *v;
    }

private:
    int n_;
    std::vector<Partition> vertices_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

inline PartitionGraph build_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("build_graph: n must be >= 1, got " + std::to_string(n));
    return PartitionGraph(n);
}

inline std::size_t degree(const PartitionGraph& g, VertexId v) { return g.degree(v); }

/// Both orientations of every edge, ordered by source then target.
inline std::vector<OrientedEdge> oriented_edges(const PartitionGraph& g) {
    std::vector<OrientedEdge> out;
    out.reserve(2 * g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.adjacent(v))
            out.push_back({v, w});
    return out;
}

/// One entry per edge with lo < hi, ordered by lo then hi.
inline std::vector<UnorientedEdge> unoriented_edges(const PartitionGraph& g) {
    std::vector<UnorientedEdge> out;
    out.reserve(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.adjacent(v))
            if (v < w)
                out.push_back({v, w});
    return out;
}

/// Edges of the subgraph induced on `members`, reported with the original
/// vertex indices. `members` need not be sorted.
inline std::vector<UnorientedEdge> induced_edges(const PartitionGraph& g, std::span<const VertexId> members) {
    std::vector<char> inside(g.vertex_count(), 0);
    for (VertexId v : members)
        inside.at(v) = 1;
    std::vector<UnorientedEdge> out;
    for (const auto& e : unoriented_edges(g))
        if (inside[e.lo] && inside[e.hi])
            out.push_back(e);
    return out;
}

/// Edge-list dump: one "[λ] [μ]" line per unoriented edge.
inline void write_edge_list(std::ostream& os, const PartitionGraph& g) {
    for (const auto& e : unoriented_edges(g))
        os << to_string(g.vertex(e.lo)) << ' ' << to_string(g.vertex(e.hi)) << '\n';
}

} // namespace partgraph
