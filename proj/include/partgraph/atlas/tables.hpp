#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partgraph/atlas/dataset.hpp"

namespace partgraph::atlas {

using Triple = std::array<int, 3>;

/// Non-negative exact fraction, always reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den) {
        if (den <= 0)
            throw std::invalid_argument("Rational: denominator must be positive");
        const auto g = std::gcd(num, den);
        return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Fixed six-digit decimal rendering.
    std::string decimal() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
        return buf;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Invariants whose jumps get histograms.
inline constexpr std::string_view kHistogramInvariants[] = {"d", "delta", "sigma", "a", "b", "adist"};
/// The three components of J(e).
inline constexpr std::string_view kSignatureInvariants[] = {"d", "delta", "sigma"};

struct JumpRange {
    int min = 0;
    int max = 0;
    int max_abs = 0;
};

/// min Δ, max Δ and max |Δ| per component of J over oriented edges.
/// All zero for an edgeless graph.
inline std::array<JumpRange, 3> jump_ranges(const EdgeDataset& rows) {
    std::array<JumpRange, 3> out{};
    bool first = true;
    for (const auto& r : rows) {
        const auto c = r.jump.components();
        for (std::size_t i = 0; i < 3; ++i) {
            auto& jr = out[i];
            jr.min = first ? c[i] : std::min(jr.min, c[i]);
            jr.max = first ? c[i] : std::max(jr.max, c[i]);
            jr.max_abs = std::max(jr.max_abs, std::abs(c[i]));
        }
        first = false;
    }
    return out;
}

/// 𝒥(n): signatures realized on oriented edges.
inline std::set<Triple> signed_spectrum(const EdgeDataset& rows) {
    std::set<Triple> out;
    for (const auto& r : rows)
        out.insert(r.jump.components());
    return out;
}

/// 𝒥_abs(n): absolute signatures realized on unoriented edges.
inline std::set<Triple> absolute_spectrum(const EdgeDataset& rows) {
    std::set<Triple> out;
    for (const auto& r : rows)
        if (r.is_forward())
            out.insert(r.jump.absolute().components());
    return out;
}

/// Realized values of Δ_e F over oriented edges.
inline std::set<int> component_spectrum(const EdgeDataset& rows, std::string_view invariant) {
    std::set<int> out;
    for (const auto& r : rows)
        out.insert(r.jump_of(invariant));
    return out;
}

struct Histogram {
    std::string invariant;
    bool oriented = true;
    std::map<int, std::size_t> counts;

    std::size_t at(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }
    std::size_t total() const {
        std::size_t s = 0;
        for (const auto& [k, c] : counts)
            s += c;
        return s;
    }
};

/// H_F(k) over oriented edges.
inline Histogram signed_histogram(const EdgeDataset& rows, std::string_view invariant) {
    Histogram h{std::string(invariant), true, {}};
    for (const auto& r : rows)
        ++h.counts[r.jump_of(invariant)];
    return h;
}

/// H_{|F|}(k) over unoriented edges.
inline Histogram absolute_histogram(const EdgeDataset& rows, std::string_view invariant) {
    Histogram h{std::string(invariant), false, {}};
    for (const auto& r : rows)
        if (r.is_forward())
            ++h.counts[std::abs(r.jump_of(invariant))];
    return h;
}

/// First k with H(k) != H(−k), if any.
inline std::optional<int> histogram_asymmetry(const Histogram& h) {
    for (const auto& [k, c] : h.counts)
        if (h.at(-k) != c)
            return k;
    return std::nullopt;
}

/// T_r(n) for r = 0..3 over unoriented edges, with τ_r = T_r / |E|.
struct RankTable {
    std::array<std::size_t, 4> counts{};
    std::size_t edges = 0;

    Rational tau(int r) const {
        if (edges == 0)
            return {0, 1};
        return Rational::of(static_cast<std::int64_t>(counts.at(static_cast<std::size_t>(r))),
                            static_cast<std::int64_t>(edges));
    }

    /// Smallest rank attaining the maximal count.
    int dominant_rank() const {
        return static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    }

    bool dominant_tied() const {
        const auto best = counts[static_cast<std::size_t>(dominant_rank())];
        return std::count(counts.begin(), counts.end(), best) > 1;
    }
};

inline RankTable rank_table(const EdgeDataset& rows) {
    RankTable t;
    for (const auto& r : rows)
        if (r.is_forward()) {
            ++t.counts.at(static_cast<std::size_t>(r.transition.rank));
            ++t.edges;
        }
    return t;
}

/// Edge counts of the eight active-set classes, indexed by ActiveSet.
using ActiveSetTable = std::array<std::size_t, 8>;

/// Reporting order: E_000, E_d, E_δ, E_σ, E_dδ, E_dσ, E_δσ, E_dδσ.
inline constexpr std::array<ActiveSet, 8> kActiveSetOrder = {0, 1, 2, 4, 3, 5, 6, 7};

inline ActiveSetTable active_set_table(const EdgeDataset& rows) {
    ActiveSetTable t{};
    for (const auto& r : rows)
        if (r.is_forward())
            ++t[r.transition.active];
    return t;
}

/// C_n(u,v,w) over oriented edges.
inline std::map<Triple, std::size_t> joint_counts(const EdgeDataset& rows) {
    std::map<Triple, std::size_t> out;
    for (const auto& r : rows)
        ++out[r.jump.components()];
    return out;
}

/// C_n^abs(u,v,w) over unoriented edges.
inline std::map<Triple, std::size_t> joint_counts_absolute(const EdgeDataset& rows) {
    std::map<Triple, std::size_t> out;
    for (const auto& r : rows)
        if (r.is_forward())
            ++out[r.jump.absolute().components()];
    return out;
}

struct BoundaryRow {
    std::string invariant;
    int threshold = 0;
    std::size_t count = 0;
    std::size_t count_plus = 0;
    std::size_t count_minus = 0;
};

/// B_r, B_r^+ and B_r^- for every r between the smallest and largest value
/// of F seen on an edge endpoint.
inline std::vector<BoundaryRow> boundary_table(const EdgeDataset& rows, std::string_view invariant) {
    std::vector<BoundaryRow> out;
    if (rows.empty())
        return out;
    int lo = rows.front().endpoint_value(invariant, false);
    int hi = lo;
    for (const auto& r : rows)
        for (bool at_target : {false, true}) {
            lo = std::min(lo, r.endpoint_value(invariant, at_target));
            hi = std::max(hi, r.endpoint_value(invariant, at_target));
        }
    for (int t = lo; t <= hi; ++t) {
        BoundaryRow b{std::string(invariant), t, 0, 0, 0};
        for (const auto& r : rows) {
            const bool in_l = r.endpoint_value(invariant, false) >= t;
            const bool in_m = r.endpoint_value(invariant, true) >= t;
            b.count_plus += !in_l && in_m;
            b.count_minus += in_l && !in_m;
            b.count += r.is_forward() && in_l != in_m;
        }
        out.push_back(std::move(b));
    }
    return out;
}

enum class HeatmapMetric { abs_dd, abs_ddelta, abs_dsigma, total_activity };
enum class Positioning { midpoint, min_adist };

inline std::string_view to_string(HeatmapMetric m) {
    switch (m) {
    case HeatmapMetric::abs_dd:
        return "abs-dd";
    case HeatmapMetric::abs_ddelta:
        return "abs-ddelta";
    case HeatmapMetric::abs_dsigma:
        return "abs-dsigma";
    case HeatmapMetric::total_activity:
        return "total-activity";
    }
    return "?";
}

inline HeatmapMetric parse_heatmap_metric(std::string_view s) {
    for (auto m : {HeatmapMetric::abs_dd, HeatmapMetric::abs_ddelta, HeatmapMetric::abs_dsigma,
                   HeatmapMetric::total_activity})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown heatmap metric '" + std::string(s) +
                                "' (expected abs-dd, abs-ddelta, abs-dsigma or total-activity)");
}

inline std::string_view to_string(Positioning p) {
    return p == Positioning::midpoint ? "midpoint" : "min-adist";
}

inline Positioning parse_positioning(std::string_view s) {
    if (s == "midpoint")
        return Positioning::midpoint;
    if (s == "min-adist")
        return Positioning::min_adist;
    throw std::invalid_argument("unknown positioning '" + std::string(s) + "' (expected midpoint or min-adist)");
}

inline int metric_value(const EdgeDatasetRow& r, HeatmapMetric m) {
    switch (m) {
    case HeatmapMetric::abs_dd:
        return std::abs(r.jump.dd);
    case HeatmapMetric::abs_ddelta:
        return std::abs(r.jump.ddelta);
    case HeatmapMetric::abs_dsigma:
        return std::abs(r.jump.dsigma);
    case HeatmapMetric::total_activity:
        return r.l1;
    }
    return 0;
}

struct HeatmapCell {
    std::size_t count = 0;
    std::int64_t sum = 0; // Σ metric over the cell's edges

    double mean() const { return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0; }
};

/// Cells keyed by doubled (a, b) coordinates so half-integers are exact.
struct HeatmapGrid {
    HeatmapMetric metric = HeatmapMetric::total_activity;
    Positioning positioning = Positioning::midpoint;
    std::map<std::pair<int, int>, HeatmapCell> cells;

    std::size_t total_count() const {
        std::size_t s = 0;
        for (const auto& [k, c] : cells)
            s += c.count;
        return s;
    }
};

/// Doubled (a, b) position of an unoriented edge under the given convention.
/// min-adist places the edge at the endpoint nearer the axis a = b; ties go
/// to the canonically earlier endpoint.
inline std::pair<int, int> edge_position2(const EdgeDatasetRow& r, Positioning p) {
    const auto& l = r.at_lambda;
    const auto& m = r.at_mu;
    if (p == Positioning::midpoint)
        return {l.a + m.a, l.b + m.b};
    const bool lambda_first = r.source < r.target;
    const VertexInvariants* pick = nullptr;
    if (l.adist != m.adist)
        pick = l.adist < m.adist ? &l : &m;
    else
        pick = lambda_first ? &l : &m;
    return {2 * pick->a, 2 * pick->b};
}

/// A_F / A_J over unoriented edges.
inline HeatmapGrid heatmap(const EdgeDataset& rows, HeatmapMetric metric, Positioning positioning) {
    HeatmapGrid grid{metric, positioning, {}};
    for (const auto& r : rows) {
        if (!r.is_forward())
            continue;
        auto& cell = grid.cells[edge_position2(r, positioning)];
        ++cell.count;
        cell.sum += metric_value(r, metric);
    }
    return grid;
}

enum class JumpNorm { l1, linf, abs_d, abs_delta, abs_sigma };

inline std::string_view to_string(JumpNorm n) {
    switch (n) {
    case JumpNorm::l1:
        return "l1";
    case JumpNorm::linf:
        return "linf";
    case JumpNorm::abs_d:
        return "abs-d";
    case JumpNorm::abs_delta:
        return "abs-delta";
    case JumpNorm::abs_sigma:
        return "abs-sigma";
    }
    return "?";
}

inline JumpNorm parse_norm(std::string_view s) {
    for (auto n : {JumpNorm::l1, JumpNorm::linf, JumpNorm::abs_d, JumpNorm::abs_delta, JumpNorm::abs_sigma})
        if (to_string(n) == s)
            return n;
    throw std::invalid_argument("unknown norm '" + std::string(s) +
                                "' (expected l1, linf, abs-d, abs-delta or abs-sigma)");
}

inline int activity(const EdgeDatasetRow& r, JumpNorm n) {
    switch (n) {
    case JumpNorm::l1:
        return r.l1;
    case JumpNorm::linf:
        return r.linf;
    case JumpNorm::abs_d:
        return std::abs(r.jump.dd);
    case JumpNorm::abs_delta:
        return std::abs(r.jump.ddelta);
    case JumpNorm::abs_sigma:
        return std::abs(r.jump.dsigma);
    }
    return 0;
}

struct LargeJumpEdge {
    Partition lambda; // canonically earlier endpoint
    Partition mu;
    JumpSignature jump; // oriented λ → μ
    int activity = 0;
};

struct LargeJumpList {
    JumpNorm norm = JumpNorm::l1;
    int threshold = 0;
    std::vector<LargeJumpEdge> edges;
};

/// Unoriented edges whose activity under `norm` is at least `threshold`.
inline LargeJumpList large_jump_edges(const EdgeDataset& rows, JumpNorm norm, int threshold) {
    if (threshold < 0)
        throw std::invalid_argument("large_jump_edges: threshold must be >= 0");
    LargeJumpList out{norm, threshold, {}};
    for (const auto& r : rows) {
        if (!r.is_forward())
            continue;
        const int act = activity(r, norm);
        if (act >= threshold)
            out.edges.push_back({r.lambda, r.mu, r.jump, act});
    }
    return out;
}

inline LargeJumpList large_jump_edges(const EdgeDataset& rows, std::string_view norm, int threshold) {
    return large_jump_edges(rows, parse_norm(norm), threshold);
}

} // namespace partgraph::atlas
