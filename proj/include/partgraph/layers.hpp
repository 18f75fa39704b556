#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/errors.hpp"
#include "partgraph/graph.hpp"
#include "partgraph/invariants.hpp"
#include "partgraph/jumps.hpp"

namespace partgraph {

/// L_F^{≥r}: vertices with F ≥ r.
struct ThresholdLayer {
    std::string invariant;
    int threshold = 0;
    std::vector<VertexId> members;
};

inline ThresholdLayer threshold_layer(const VertexInvariant& f, int r) {
    ThresholdLayer layer{f.name, r, {}};
    for (VertexId v = 0; v < f.values.size(); ++v)
        if (f.values[v] >= r)
            layer.members.push_back(v);
    return layer;
}

/// ∂_E L_F^{≥r} together with its unoriented and oriented counts.
struct EdgeBoundary {
    std::vector<UnorientedEdge> edges;
    std::size_t count = 0;       // B_r
    std::size_t count_plus = 0;  // oriented (λ,μ) with F(λ) < r ≤ F(μ)
    std::size_t count_minus = 0; // oriented (λ,μ) with F(μ) < r ≤ F(λ)
};

inline EdgeBoundary edge_boundary(const PartitionGraph& g, const VertexInvariant& f, int r) {
    EdgeBoundary out;
    for (const auto& e : oriented_edges(g)) {
        const bool in_source = f(e.source) >= r;
        const bool in_target = f(e.target) >= r;
        if (!in_source && in_target)
            ++out.count_plus;
        if (in_source && !in_target)
            ++out.count_minus;
        if (e.source < e.target && in_source != in_target)
            out.edges.push_back({e.source, e.target});
    }
    out.count = out.edges.size();
    return out;
}

enum class SignConstraint { nonnegative, nonpositive, zero, nonzero, any };

/// Per-component sign box on (Δd, Δδ, Δσ), optionally requiring at least one
/// nonzero component.
struct Cone {
    std::array<SignConstraint, 3> components{SignConstraint::any, SignConstraint::any, SignConstraint::any};
    bool strict_somewhere = false;

    bool contains(const JumpSignature& j) const noexcept {
        const auto c = j.components();
        for (std::size_t i = 0; i < 3; ++i) {
            switch (components[i]) {
            case SignConstraint::nonnegative:
                if (c[i] < 0)
                    return false;
                break;
            case SignConstraint::nonpositive:
                if (c[i] > 0)
                    return false;
                break;
            case SignConstraint::zero:
                if (c[i] != 0)
                    return false;
                break;
            case SignConstraint::nonzero:
                if (c[i] == 0)
                    return false;
                break;
            case SignConstraint::any:
                break;
            }
        }
        return !strict_somewhere || c != std::array<int, 3>{0, 0, 0};
    }

    friend bool operator==(const Cone&, const Cone&) = default;
};

/// Three symbols from "+-0*!" (≥0, ≤0, =0, unconstrained, ≠0), optionally
/// followed by "/strict". Example: "++*/strict".
inline Cone parse_cone(std::string_view spec) {
    Cone cone;
    std::string_view body = spec;
    if (auto slash = spec.find('/'); slash != std::string_view::npos) {
        if (spec.substr(slash) != "/strict")
            throw std::invalid_argument("bad cone suffix in '" + std::string(spec) + "' (only /strict is allowed)");
        cone.strict_somewhere = true;
        body = spec.substr(0, slash);
    }
    if (body.size() != 3)
        throw std::invalid_argument("cone '" + std::string(spec) + "' must have exactly three symbols");
    for (std::size_t i = 0; i < 3; ++i) {
        switch (body[i]) {
        case '+':
            cone.components[i] = SignConstraint::nonnegative;
            break;
        case '-':
            cone.components[i] = SignConstraint::nonpositive;
            break;
        case '0':
            cone.components[i] = SignConstraint::zero;
            break;
        case '*':
            cone.components[i] = SignConstraint::any;
            break;
        case '!':
            cone.components[i] = SignConstraint::nonzero;
            break;
        default:
            throw std::invalid_argument("bad cone symbol '" + std::string(1, body[i]) + "' in '" + std::string(spec) +
                                        "'");
        }
    }
    return cone;
}

inline std::string to_string(const Cone& cone) {
    std::string out;
    for (auto c : cone.components) {
        switch (c) {
        case SignConstraint::nonnegative:
            out += '+';
            break;
        case SignConstraint::nonpositive:
            out += '-';
            break;
        case SignConstraint::zero:
            out += '0';
            break;
        case SignConstraint::nonzero:
            out += '!';
            break;
        case SignConstraint::any:
            out += '*';
            break;
        }
    }
    if (cone.strict_somewhere)
        out += "/strict";
    return out;
}

/// Strict F-gradient orientation: every edge with F(λ) < F(μ) directed
/// λ → μ; edges with equal endpoint values are plateau edges.
struct GradientDag {
    std::string invariant;
    std::size_t vertex_count = 0;
    std::vector<OrientedEdge> directed;
    std::vector<UnorientedEdge> plateau;
    std::vector<std::vector<VertexId>> successors;
};

struct AcyclicityCertificate {
    bool acyclic = false;
    std::vector<VertexId> order; // topological order when acyclic
};

/// Kahn's algorithm; the smallest ready vertex index is emitted first so the
/// order is deterministic.
inline AcyclicityCertificate check_acyclic(const GradientDag& dag) {
    std::vector<std::size_t> indeg(dag.vertex_count, 0);
    for (const auto& e : dag.directed)
        ++indeg[e.target];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < dag.vertex_count; ++v)
        if (indeg[v] == 0)
            ready.push(v);
    AcyclicityCertificate cert;
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        cert.order.push_back(v);
        for (VertexId w : dag.successors[v])
            if (--indeg[w] == 0)
                ready.push(w);
    }
    cert.acyclic = cert.order.size() == dag.vertex_count;
    if (!cert.acyclic)
        cert.order.clear();
    return cert;
}

inline GradientDag gradient_dag(const PartitionGraph& g, const VertexInvariant& f) {
    GradientDag dag;
    dag.invariant = f.name;
    dag.vertex_count = g.vertex_count();
    dag.successors.resize(g.vertex_count());
    for (const auto& e : oriented_edges(g)) {
        const int dj = jump(e, f);
        if (dj > 0) {
            dag.directed.push_back(e);
            dag.successors[e.source].push_back(e.target);
        } else if (dj == 0 && e.source < e.target) {
            dag.plateau.push_back({e.source, e.target});
        }
    }
    if (!check_acyclic(dag).acyclic)
        throw ConsistencyError("strict gradient orientation of '" + f.name + "' has a cycle");
    return dag;
}

struct StrictPath {
    std::size_t length = 0; // number of edges
    std::vector<VertexId> vertices;
};

/// Longest directed path of the DAG. Among maximum-length paths the
/// lexicographically smallest vertex sequence is returned.
inline StrictPath longest_strict_path(const GradientDag& dag) {
    StrictPath out;
    if (dag.vertex_count == 0)
        return out;
    const auto cert = check_acyclic(dag);
    if (!cert.acyclic)
        throw ConsistencyError("longest_strict_path: orientation of '" + dag.invariant + "' is not acyclic");
    // from[v]: longest path length starting at v
    std::vector<std::size_t> from(dag.vertex_count, 0);
    for (auto it = cert.order.rbegin(); it != cert.order.rend(); ++it)
        for (VertexId w : dag.successors[*it])
            from[*it] = std::max(from[*it], from[w] + 1);
    VertexId v = static_cast<VertexId>(std::max_element(from.begin(), from.end()) - from.begin());
    out.length = from[v];
    out.vertices.push_back(v);
    while (from[v] > 0) {
        VertexId next = 0;
        bool found = false;
        for (VertexId w : dag.successors[v])
            if (from[w] + 1 == from[v] && (!found || w < next)) {
                next = w;
                found = true;
            }
        v = next;
        out.vertices.push_back(v);
    }
    return out;
}

struct CorridorCheck {
    bool ok = true;
    std::optional<std::size_t> first_violation; // step index i: path[i] → path[i+1]
    std::optional<JumpSignature> violating_signature;
};

/// Does every step of `path` have its jump signature inside `cone`?
inline CorridorCheck is_corridor(const PartitionGraph& g, const InvariantTable& t, std::span<const VertexId> path,
                                 const Cone& cone) {
    CorridorCheck out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] >= g.vertex_count() || path[i + 1] >= g.vertex_count() || !g.has_edge(path[i], path[i + 1]))
            throw InvalidPath("path step " + std::to_string(i) + " is not an edge of G_" + std::to_string(g.n()));
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto j = jump_signature(t, {path[i], path[i + 1]});
        if (!cone.contains(j)) {
            out.ok = false;
            out.first_violation = i;
            out.violating_signature = j;
            return out;
        }
    }
    return out;
}

enum class AxialClass { inward, outward, neutral };

inline std::string_view to_string(AxialClass c) {
    switch (c) {
    case AxialClass::inward:
        return "inward";
    case AxialClass::outward:
        return "outward";
    case AxialClass::neutral:
        return "neutral";
    }
    return "?";
}

inline AxialClass axial_class_of(int dadist) noexcept {
    return dadist < 0 ? AxialClass::inward : (dadist > 0 ? AxialClass::outward : AxialClass::neutral);
}

inline AxialClass classify_axial(const InvariantTable& t, const OrientedEdge& e) {
    return axial_class_of(t[e.target].adist - t[e.source].adist);
}

} // namespace partgraph
