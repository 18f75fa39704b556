#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "partgraph/atlas/dataset.hpp"
#include "partgraph/atlas/tables.hpp"
#include "partgraph/graph.hpp"
#include "partgraph/invariants.hpp"
#include "partgraph/jumps.hpp"
#include "partgraph/layers.hpp"

namespace partgraph::atlas {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::string counterexample; // empty when passed
};

struct VerificationReport {
    int n = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
    }
    const PropertyResult* find(std::string_view name) const {
        for (const auto& p : properties)
            if (p.name == name)
                return &p;
        return nullptr;
    }
};

namespace detail {

/// Records the first failure only; later checks still count.
class PropertyRecorder {
public:
    explicit PropertyRecorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.checked;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

inline std::string edge_text(const PartitionGraph& g, const OrientedEdge& e) {
    return to_string(g.vertex(e.source)) + " -> " + to_string(g.vertex(e.target));
}

/// p(n) by the standard parts-at-most-k dynamic program.
inline std::size_t partition_count_dp(int n) {
    std::vector<std::size_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways[static_cast<std::size_t>(n)];
}

} // namespace detail

/// Runs every structural property against G_n. Failures are returned as
/// data with the first counterexample found.
inline VerificationReport verify(const PartitionGraph& g, const InvariantTable& table, const EdgeDataset& rows) {
    using detail::PropertyRecorder;
    VerificationReport report;
    report.n = g.n();
    auto& out = report.properties;
    const auto& verts = g.vertices();
    const auto oriented = oriented_edges(g);
    const auto unoriented = unoriented_edges(g);
    auto etext = [&](const OrientedEdge& e) { return detail::edge_text(g, e); };

    {
        PropertyRecorder p("partition-count");
        p.check(verts.size() == detail::partition_count_dp(g.n()), [&] {
            return "|Par(n)| = " + std::to_string(verts.size()) + ", expected " +
                   std::to_string(detail::partition_count_dp(g.n()));
        });
        out.push_back(p.take());
    }
    {
        PropertyRecorder sym("adjacency-symmetric");
        PropertyRecorder self("neighbors-exclude-self");
        PropertyRecorder weight("weight-conservation");
        PropertyRecorder closure("adjacency-equals-neighbor-sets");
        for (VertexId v = 0; v < verts.size(); ++v) {
            const auto nb = neighbors(verts[v]);
            std::vector<VertexId> ids;
            for (const auto& mu : nb) {
                weight.check(mu.weight() == verts[v].weight(),
                             [&] { return to_string(verts[v]) + " has neighbor " + to_string(mu); });
                self.check(mu != verts[v], [&] { return to_string(verts[v]) + " lists itself"; });
                ids.push_back(g.index_of(mu));
            }
            std::sort(ids.begin(), ids.end());
            auto adj = g.adjacent(v);
            closure.check(std::equal(ids.begin(), ids.end(), adj.begin(), adj.end()),
                          [&] { return "adjacency row of " + to_string(verts[v]) + " differs from N(λ)"; });
            for (VertexId w : adj)
                sym.check(g.has_edge(w, v), [&] { return etext({v, w}) + " has no reverse"; });
        }
        out.push_back(sym.take());
        out.push_back(self.take());
        out.push_back(weight.take());
        out.push_back(closure.take());
    }
    {
        PropertyRecorder local("multiplicity-change-locality");
        PropertyRecorder sjl("support-jump-local-equals-direct");
        for (const auto& lambda : verts) {
            for (Transfer t : legal_transfers(lambda)) {
                const auto mu = apply_transfer(lambda, t);
                const int top = std::max(lambda.largest_part(), mu.largest_part());
                for (int i = 1; i <= top; ++i) {
                    const bool affected = i == t.donor || i == t.recipient || i == t.donor - 1 || i == t.recipient + 1;
                    local.check(affected || lambda.multiplicity(i) == mu.multiplicity(i), [&] {
                        return to_string(lambda) + " -> " + to_string(mu) + " changes m_" + std::to_string(i);
                    });
                }
                const int direct = mu.support_size() - lambda.support_size();
                const int by_mult = support_jump_local(lambda, t);
                sjl.check(direct == by_mult, [&] {
                    return to_string(lambda) + " transfer (" + std::to_string(t.donor) + "," +
                           std::to_string(t.recipient) + "): local " + std::to_string(by_mult) + " vs direct " +
                           std::to_string(direct);
                });
            }
        }
        out.push_back(local.take());
        out.push_back(sjl.take());
    }
    {
        PropertyRecorder hs("handshake");
        std::size_t deg_sum = 0;
        for (VertexId v = 0; v < verts.size(); ++v)
            deg_sum += g.degree(v);
        hs.check(deg_sum == 2 * g.edge_count() && oriented.size() == 2 * unoriented.size() &&
                     unoriented.size() == g.edge_count(),
                 [&] { return "degree sum " + std::to_string(deg_sum) + ", |E| " + std::to_string(g.edge_count()); });
        out.push_back(hs.take());
    }
    {
        PropertyRecorder dd("local-dimension-at-most-degree");
        PropertyRecorder sb("support-size-bounds");
        PropertyRecorder reg("registry-agrees-with-direct");
        for (VertexId v = 0; v < verts.size(); ++v) {
            const auto& r = table[v];
            dd.check(r.delta <= r.d && r.delta >= 0, [&] { return to_string(verts[v]) + ": delta > d"; });
            sb.check(r.sigma >= 1 && r.sigma <= std::min(r.a, r.b),
                     [&] { return to_string(verts[v]) + ": sigma outside [1, min(a,b)]"; });
            const auto& p = verts[v];
            const bool agree = table.invariant("d")(v) == static_cast<int>(degree(g, v)) &&
                               table.invariant("delta")(v) == local_dimension(g, v) &&
                               table.invariant("sigma")(v) == support_size(p) &&
                               table.invariant("adist")(v) == std::abs(p.largest_part() - p.length()) &&
                               table.invariant("a")(v) == p.largest_part() && table.invariant("b")(v) == p.length();
            reg.check(agree, [&] { return to_string(p) + ": registry value differs"; });
        }
        out.push_back(dd.take());
        out.push_back(sb.take());
        out.push_back(reg.take());
    }
    {
        PropertyRecorder bound("support-jump-bound");
        PropertyRecorder anti("signature-antisymmetry");
        PropertyRecorder crossed("crossed-thresholds-count");
        PropertyRecorder rank("rank-equals-crossed-layer-systems");
        PropertyRecorder reorg("degree-reorganization");
        for (const auto& e : oriented) {
            const auto j = jump_signature(table, e);
            bound.check(std::abs(j.dsigma) <= 2,
                        [&] { return etext(e) + ": dsigma = " + std::to_string(j.dsigma); });
            const auto jr = jump_signature(table, e.reversed());
            anti.check(jr == -j && jr.absolute() == j.absolute(), [&] { return etext(e); });
            for (const auto& f : table.registry()) {
                const auto ct = crossed_thresholds(e, f);
                crossed.check(static_cast<int>(ct.size()) == std::abs(jump(e, f)),
                              [&] { return etext(e) + " invariant " + f.name; });
            }
            int layers = 0;
            for (auto name : kSignatureInvariants)
                layers += !crossed_thresholds(e, table.invariant(name)).empty();
            rank.check(classify(j).rank == layers, [&] { return etext(e); });

            const auto dr = degree_reorganization(g, e);
            const int births = static_cast<int>(dr.births.size());
            const int deaths = static_cast<int>(dr.deaths.size());
            const bool has_endpoints = std::binary_search(dr.births.begin(), dr.births.end(), e.source) &&
                                       std::binary_search(dr.deaths.begin(), dr.deaths.end(), e.target);
            reorg.check(j.dd == births - deaths && std::abs(j.dd) <= dr.rho && dr.rho >= 2 && has_endpoints,
                        [&] { return etext(e) + ": dd " + std::to_string(j.dd) + ", rho " + std::to_string(dr.rho); });
        }
        out.push_back(bound.take());
        out.push_back(anti.take());
        out.push_back(crossed.take());
        out.push_back(rank.take());
        out.push_back(reorg.take());
    }
    {
        PropertyRecorder hist("signed-histogram-symmetry");
        for (auto name : kHistogramInvariants) {
            const auto h = signed_histogram(rows, name);
            const auto bad = histogram_asymmetry(h);
            hist.check(!bad, [&] { return std::string(name) + ": H(" + std::to_string(*bad) + ") != H(-k)"; });
        }
        out.push_back(hist.take());
    }
    {
        PropertyRecorder acyclic("strict-gradient-acyclic");
        PropertyRecorder split("gradient-edge-partition");
        PropertyRecorder upward("strict-edges-are-upward-crossings");
        PropertyRecorder balance("boundary-orientation-balance");
        PropertyRecorder length("longest-strict-path-bound");
        for (const auto& f : table.registry()) {
            std::optional<GradientDag> dag;
            try {
                dag = gradient_dag(g, f);
                acyclic.check(true, [] { return std::string(); });
            } catch (const ConsistencyError& err) {
                acyclic.check(false, [&] { return std::string(err.what()); });
                continue;
            }
            split.check(2 * dag->directed.size() + 2 * dag->plateau.size() == oriented.size(),
                        [&] { return "invariant " + f.name; });

            const auto values = f.realized_values();
            for (const auto& e : oriented) {
                bool crosses_up = false;
                for (int r : values)
                    crosses_up |= f(e.source) < r && f(e.target) >= r;
                upward.check((jump(e, f) > 0) == crosses_up, [&] { return etext(e) + " invariant " + f.name; });
            }
            for (int r = values.front(); r <= values.back() + 1; ++r) {
                const auto b = edge_boundary(g, f, r);
                balance.check(b.count_plus == b.count_minus && b.count_plus == b.count, [&] {
                    return f.name + " r=" + std::to_string(r) + ": B+ " + std::to_string(b.count_plus) + ", B- " +
                           std::to_string(b.count_minus);
                });
            }
            const auto path = longest_strict_path(*dag);
            length.check(path.length + 1 <= values.size(), [&] {
                return f.name + ": path length " + std::to_string(path.length) + " exceeds |V_F|-1 = " +
                       std::to_string(values.size() - 1);
            });
        }
        out.push_back(acyclic.take());
        out.push_back(split.take());
        out.push_back(upward.take());
        out.push_back(balance.take());
        out.push_back(length.take());
    }
    {
        PropertyRecorder spec("absolute-spectrum-support-bound");
        for (const auto& t : absolute_spectrum(rows))
            spec.check(t[2] >= 0 && t[2] <= 2, [&] { return "|dsigma| = " + std::to_string(t[2]); });
        for (const auto& t : signed_spectrum(rows))
            spec.check(t[2] >= -2 && t[2] <= 2, [&] { return "dsigma = " + std::to_string(t[2]); });
        out.push_back(spec.take());

        PropertyRecorder classes("active-set-classes-partition-edges");
        const auto ast = active_set_table(rows);
        std::size_t total = 0;
        for (auto c : ast)
            total += c;
        const auto rt = rank_table(rows);
        const std::size_t rank_total = rt.counts[0] + rt.counts[1] + rt.counts[2] + rt.counts[3];
        classes.check(total == g.edge_count() && rank_total == g.edge_count(), [&] {
            return "class total " + std::to_string(total) + ", rank total " + std::to_string(rank_total) + ", |E| " +
                   std::to_string(g.edge_count());
        });
        out.push_back(classes.take());

        PropertyRecorder joint("joint-count-symmetry");
        const auto jc = joint_counts(rows);
        for (const auto& [t, c] : jc) {
            auto it = jc.find({-t[0], -t[1], -t[2]});
            joint.check(it != jc.end() && it->second == c, [&, t = t] {
                return "C(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
                       ") has no mirror";
            });
        }
        out.push_back(joint.take());
    }
    {
        PropertyRecorder rt("csv-roundtrip-reproduces-tables");
        std::stringstream ss;
        write_edge_csv(ss, rows);
        const auto back = read_edge_csv(ss);
        bool same = back.size() == rows.size();
        for (std::size_t i = 0; same && i < rows.size(); ++i)
            same = back[i].source == rows[i].source && back[i].target == rows[i].target &&
                   back[i].jump == rows[i].jump && back[i].rho == rows[i].rho;
        same = same && rank_table(back).counts == rank_table(rows).counts &&
               active_set_table(back) == active_set_table(rows) && joint_counts(back) == joint_counts(rows);
        rt.check(same, [] { return std::string("re-imported dataset differs"); });
        out.push_back(rt.take());
    }

    if (g.n() == 4) {
        PropertyRecorder fx("fixture-g4");
        auto P = [](std::vector<int> parts) { return Partition(std::move(parts)); };
        fx.check(neighbors(P({3, 1})) == std::vector{P({4}), P({2, 2}), P({2, 1, 1})},
                 [] { return std::string("N((3,1)) differs"); });
        fx.check(neighbors(P({2, 1, 1})) == std::vector{P({3, 1}), P({2, 2}), P({1, 1, 1, 1})},
                 [] { return std::string("N((2,1,1)) differs"); });
        const auto rtab = rank_table(rows);
        fx.check(rtab.counts == std::array<std::size_t, 4>{1, 0, 2, 2},
                 [] { return std::string("rank distribution is not (1,0,2,2)"); });
        const OrientedEdge e{g.index_of(P({3, 1})), g.index_of(P({2, 1, 1}))};
        fx.check(jump_signature(table, e) == JumpSignature{0, 0, 0}, [] { return std::string("J != (0,0,0)"); });
        out.push_back(fx.take());
    }
    if (g.n() == 8) {
        PropertyRecorder fx("fixture-g8-support-jump-two");
        const auto u = g.index_of(Partition({4, 4}));
        const auto v = g.index_of(Partition({4, 3, 1}));
        fx.check(g.has_edge(u, v), [] { return std::string("(4,4) ~ (4,3,1) missing"); });
        fx.check(jump_signature(table, {u, v}).dsigma == 2 && jump_signature(table, {v, u}).dsigma == -2,
                 [] { return std::string("dsigma is not +2 toward (4,3,1)"); });
        fx.check(jump_ranges(rows)[2].max_abs == 2, [] { return std::string("max |dsigma| != 2"); });
        out.push_back(fx.take());
    }
    return report;
}

inline VerificationReport verify(int n) {
    const auto g = build_graph(n);
    const auto t = invariant_table(g);
    return verify(g, t, build_edge_dataset(g, t));
}

} // namespace partgraph::atlas
