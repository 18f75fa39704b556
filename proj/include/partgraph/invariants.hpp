#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/clique.hpp"
#include "partgraph/graph.hpp"

namespace partgraph {

/// δ(λ): the largest dimension of a simplex of the clique complex that
/// contains λ. A clique through v is v plus a clique of N(v), so this is the
/// clique number of the subgraph induced on N(v); an isolated vertex gives 0.
inline int local_dimension(const PartitionGraph& g, VertexId v) {
    auto nbrs = g.adjacent(v);
    const std::size_t k = nbrs.size();
    if (k == 0)
        return 0;
    std::vector<char> adj(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.has_edge(nbrs[i], nbrs[j]))
                adj[i * k + j] = adj[j * k + i] = 1;
    return static_cast<int>(MaxCliqueSolver(k, std::move(adj)).solve());
}

/// A named integer-valued vertex invariant on one fixed G_n.
struct VertexInvariant {
    std::string name;
    std::vector<int> values;

    int operator()(VertexId v) const { return values.at(v); }

    /// V_F(n): the distinct values taken, ascending.
    std::vector<int> realized_values() const {
        std::set<int> s(values.begin(), values.end());
        return {s.begin(), s.end()};
    }
};

struct VertexInvariants {
    int d = 0;
    int delta = 0;
    int sigma = 0;
    int a = 0;
    int b = 0;
    int alpha = 0;
    int adist = 0;
};

/// Registered invariant names, in registry order.
inline constexpr std::string_view kInvariantNames[] = {"d", "delta", "sigma", "a", "b", "alpha", "adist"};

/// Dense per-vertex cache of every registered invariant.
class InvariantTable {
public:
    explicit InvariantTable(const PartitionGraph& g) : rows_(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const Partition& p = g.vertex(v);
            auto& r = rows_[v];
            r.d = static_cast<int>(g.degree(v));
            r.delta = local_dimension(g, v);
            r.sigma = p.support_size();
            r.a = p.largest_part();
            r.b = p.length();
            r.alpha = r.a - r.b;
            r.adist = std::abs(r.alpha);
        }
        for (std::string_view name : kInvariantNames)
            registry_.push_back(extract(name));
    }

    std::size_t size() const noexcept { return rows_.size(); }
    const VertexInvariants& operator[](VertexId v) const { return rows_.at(v); }
    const std::vector<VertexInvariants>& rows() const noexcept { return rows_; }

    const std::vector<VertexInvariant>& registry() const noexcept { return registry_; }

    const VertexInvariant& invariant(std::string_view name) const {
        for (const auto& f : registry_)
            if (f.name == name)
                return f;
        throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
    }

    static int value(const VertexInvariants& r, std::string_view name) {
        if (name == "d")
            return r.d;
        if (name == "delta")
            return r.delta;
        if (name == "sigma")
            return r.sigma;
        if (name == "a")
            return r.a;
        if (name == "b")
            return r.b;
        if (name == "alpha")
            return r.alpha;
        if (name == "adist")
            return r.adist;
        throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
    }

private:
    VertexInvariant extract(std::string_view name) const {
        VertexInvariant f{std::string(name), {}};
        f.values.reserve(rows_.size());
        for (const auto& r : rows_)
            f.values.push_back(value(r, name));
        return f;
    }

    std::vector<VertexInvariants> rows_;
    std::vector<VertexInvariant> registry_;
};

inline InvariantTable invariant_table(const PartitionGraph& g) { return InvariantTable(g); }

/// Columns: partition,d,delta,sigma,a,b,alpha,adist
inline void write_invariant_csv(std::ostream& os, const PartitionGraph& g, const InvariantTable& t) {
    os << "partition,d,delta,sigma,a,b,alpha,adist\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& r = t[v];
        os << '"' << to_string(g.vertex(v)) << '"' << ',' << r.d << ',' << r.delta << ',' << r.sigma << ',' << r.a
           << ',' << r.b << ',' << r.alpha << ',' << r.adist << '\n';
    }
}

} // namespace partgraph
