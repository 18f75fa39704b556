#pragma once

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "partgraph/atlas/dataset.hpp"
#include "partgraph/atlas/tables.hpp"
#include "partgraph/atlas/verify.hpp"
#include "partgraph/errors.hpp"

namespace partgraph::atlas {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "atlas-schema 1";

struct ReportOptions {
    HeatmapMetric metric = HeatmapMetric::total_activity;
    Positioning positioning = Positioning::midpoint;
    JumpNorm norm = JumpNorm::linf;
    int large_jump_threshold = 2;
    bool run_verification = true;
};

struct AtlasReport {
    int n = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::array<JumpRange, 3> ranges{};
    std::set<Triple> spectrum;
    std::set<Triple> spectrum_abs;
    std::map<std::string, std::set<int>> component_spectra;
    std::vector<Histogram> signed_histograms;
    std::vector<Histogram> absolute_histograms;
    RankTable ranks;
    ActiveSetTable active_sets{};
    std::map<Triple, std::size_t> joint;
    std::map<Triple, std::size_t> joint_abs;
    std::vector<BoundaryRow> boundaries; // d, delta, sigma in that order
    HeatmapGrid heat;
    LargeJumpList large_jumps;
    std::optional<VerificationReport> verification;
};

/// Builds every table from the dataset alone. Throws ConsistencyError if
/// the tables contradict each other or the support-jump bound.
inline AtlasReport build_report_from_dataset(int n, const EdgeDataset& rows, const ReportOptions& options = {}) {
    AtlasReport rep;
    rep.n = n;
    rep.vertex_count = enumerate_partitions(n).size();
    for (const auto& r : rows)
        rep.edge_count += r.is_forward();
    if (rows.size() != 2 * rep.edge_count)
        throw ConsistencyError("dataset is not closed under reversal");

    rep.ranges = jump_ranges(rows);
    if (rep.ranges[2].max_abs > 2)
        throw ConsistencyError("max |dsigma| = " + std::to_string(rep.ranges[2].max_abs) + " exceeds 2");
    rep.spectrum = signed_spectrum(rows);
    rep.spectrum_abs = absolute_spectrum(rows);
    for (auto name : kSignatureInvariants)
        rep.component_spectra[std::string(name)] = component_spectrum(rows, name);
    for (auto name : kHistogramInvariants) {
        rep.signed_histograms.push_back(signed_histogram(rows, name));
        rep.absolute_histograms.push_back(absolute_histogram(rows, name));
        if (histogram_asymmetry(rep.signed_histograms.back()))
            throw ConsistencyError("signed histogram of " + std::string(name) + " is not symmetric");
    }
    rep.ranks = rank_table(rows);
    if (rep.ranks.edges != rep.edge_count)
        throw ConsistencyError("rank table does not sum to |E|");
    rep.active_sets = active_set_table(rows);
    std::size_t classes = 0;
    for (auto c : rep.active_sets)
        classes += c;
    if (classes != rep.edge_count)
        throw ConsistencyError("active-set classes do not sum to |E|");
    rep.joint = joint_counts(rows);
    rep.joint_abs = joint_counts_absolute(rows);
    for (auto name : kSignatureInvariants) {
        auto table = boundary_table(rows, name);
        rep.boundaries.insert(rep.boundaries.end(), table.begin(), table.end());
    }
    rep.heat = heatmap(rows, options.metric, options.positioning);
    if (rep.heat.total_count() != rep.edge_count)
        throw ConsistencyError("heatmap cells do not sum to |E|");
    rep.large_jumps = large_jump_edges(rows, options.norm, options.large_jump_threshold);
    return rep;
}

inline AtlasReport build_report(int n, const ReportOptions& options = {}) {
    const auto g = build_graph(n);
    const auto t = invariant_table(g);
    const auto rows = build_edge_dataset(g, t);
    auto rep = build_report_from_dataset(n, rows, options);
    if (options.run_verification)
        rep.verification = verify(g, t, rows);
    return rep;
}

namespace detail {

inline Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

inline Json histogram_json(const Histogram& h) {
    Json counts = Json::array();
    for (const auto& [k, c] : h.counts)
        counts.push_back(Json::array({k, c}));
    return counts;
}

inline Json joint_json(const std::map<Triple, std::size_t>& m) {
    Json out = Json::array();
    for (const auto& [t, c] : m)
        out.push_back(Json::array({t[0], t[1], t[2], c}));
    return out;
}

} // namespace detail

/// Doubled heatmap coordinates rendered as exact decimals ("3.5").
inline std::string half_integer(int doubled) {
    std::string s = std::to_string(doubled / 2);
    if (doubled % 2 != 0)
        s += ".5";
    return s;
}

inline Json heatmap_json(const HeatmapGrid& grid) {
    Json cells = Json::array();
    for (const auto& [xy, c] : grid.cells) {
        Json cell;
        cell["x"] = half_integer(xy.first);
        cell["y"] = half_integer(xy.second);
        cell["count"] = c.count;
        cell["sum"] = c.sum;
        cell["mean"] = Rational::of(c.sum, static_cast<std::int64_t>(c.count)).decimal();
        cells.push_back(std::move(cell));
    }
    Json out;
    out["metric"] = to_string(grid.metric);
    out["positioning"] = to_string(grid.positioning);
    out["cells"] = std::move(cells);
    return out;
}

inline Json large_jumps_json(const LargeJumpList& l) {
    Json edges = Json::array();
    for (const auto& e : l.edges) {
        Json row;
        row["lambda"] = to_string(e.lambda);
        row["mu"] = to_string(e.mu);
        row["J"] = detail::triple_json(e.jump.components());
        row["activity"] = e.activity;
        edges.push_back(std::move(row));
    }
    Json out;
    out["norm"] = to_string(l.norm);
    out["threshold"] = l.threshold;
    out["edges"] = std::move(edges);
    return out;
}

inline Json verification_json(const VerificationReport& v) {
    Json out = Json::array();
    for (const auto& p : v.properties) {
        Json row;
        row["property"] = p.name;
        row["passed"] = p.passed;
        row["checked"] = p.checked;
        row["counterexample"] = p.counterexample.empty() ? Json(nullptr) : Json(p.counterexample);
        out.push_back(std::move(row));
    }
    return out;
}

/// `config` is embedded verbatim under "config".
inline Json to_json(const AtlasReport& rep, const Json& config = Json::object()) {
    Json j;
    j["version"] = kSchemaVersion;
    j["config"] = config;
    j["n"] = rep.n;
    j["vertex_count"] = rep.vertex_count;
    j["edge_count"] = rep.edge_count;
    j["oriented_edge_count"] = 2 * rep.edge_count;

    Json ranges;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& r = rep.ranges[i];
        ranges[std::string(kSignatureInvariants[i])] = {{"min", r.min}, {"max", r.max}, {"max_abs", r.max_abs}};
    }
    j["jump_ranges"] = std::move(ranges);

    Json spec = Json::array();
    for (const auto& t : rep.spectrum)
        spec.push_back(detail::triple_json(t));
    j["spectrum_signed"] = std::move(spec);
    Json spec_abs = Json::array();
    for (const auto& t : rep.spectrum_abs)
        spec_abs.push_back(detail::triple_json(t));
    j["spectrum_absolute"] = std::move(spec_abs);
    Json comps;
    for (const auto& [name, vals] : rep.component_spectra)
        comps[name] = Json(std::vector<int>(vals.begin(), vals.end()));
    j["component_spectra"] = std::move(comps);

    Json hs, ha;
    for (const auto& h : rep.signed_histograms)
        hs[h.invariant] = detail::histogram_json(h);
    for (const auto& h : rep.absolute_histograms)
        ha[h.invariant] = detail::histogram_json(h);
    j["histograms"] = {{"signed", std::move(hs)}, {"absolute", std::move(ha)}};

    Json ranks;
    ranks["T"] = Json(std::vector<std::size_t>(rep.ranks.counts.begin(), rep.ranks.counts.end()));
    Json tau = Json::array();
    for (int r = 0; r < 4; ++r)
        tau.push_back({{"rational", rep.ranks.tau(r).str()}, {"decimal", rep.ranks.tau(r).decimal()}});
    ranks["tau"] = std::move(tau);
    if (rep.edge_count > 0) {
        ranks["dominant_rank"] = rep.ranks.dominant_rank();
        ranks["dominant_tied"] = rep.ranks.dominant_tied();
    } else {
        ranks["dominant_rank"] = nullptr;
        ranks["dominant_tied"] = false;
    }
    j["rank_table"] = std::move(ranks);

    Json classes;
    for (ActiveSet s : kActiveSetOrder)
        classes[active_set_code(s)] = rep.active_sets[s];
    j["active_set_table"] = std::move(classes);

    j["joint_counts_signed"] = detail::joint_json(rep.joint);
    j["joint_counts_absolute"] = detail::joint_json(rep.joint_abs);

    Json bounds = Json::array();
    for (const auto& b : rep.boundaries)
        bounds.push_back({{"F", b.invariant},
                          {"r", b.threshold},
                          {"B_r", b.count},
                          {"B_r_plus", b.count_plus},
                          {"B_r_minus", b.count_minus}});
    j["boundary_counts"] = std::move(bounds);
    j["heatmap"] = heatmap_json(rep.heat);
    j["large_jumps"] = large_jumps_json(rep.large_jumps);
    j["verification"] = rep.verification ? verification_json(*rep.verification) : Json(nullptr);
    return j;
}

/// Columns: F,r,B_r,B_r_plus,B_r_minus
inline void write_boundary_csv(std::ostream& os, const std::vector<BoundaryRow>& rows,
                               const CsvPreamble& preamble = {}) {
    write_preamble(os, preamble);
    os << "F,r,B_r,B_r_plus,B_r_minus\n";
    for (const auto& b : rows)
        os << b.invariant << ',' << b.threshold << ',' << b.count << ',' << b.count_plus << ',' << b.count_minus
           << '\n';
}

/// Columns: x,y,count,sum,mean (x, y are a/b coordinates, possibly half-integers)
inline void write_heatmap_csv(std::ostream& os, const HeatmapGrid& grid, const CsvPreamble& preamble = {}) {
    write_preamble(os, preamble);
    os << "# metric=" << to_string(grid.metric) << " positioning=" << to_string(grid.positioning) << '\n';
    os << "x,y,count,sum,mean\n";
    for (const auto& [xy, c] : grid.cells)
        os << half_integer(xy.first) << ',' << half_integer(xy.second) << ',' << c.count << ',' << c.sum << ','
           << Rational::of(c.sum, static_cast<std::int64_t>(c.count)).decimal() << '\n';
}

/// Columns: lambda,mu,dd,ddelta,dsigma,activity. The norm is stated above the header.
inline void write_large_jumps_csv(std::ostream& os, const LargeJumpList& l, const CsvPreamble& preamble = {}) {
    write_preamble(os, preamble);
    os << "# norm=" << to_string(l.norm) << " threshold=" << l.threshold << '\n';
    os << "lambda,mu,dd,ddelta,dsigma,activity\n";
    for (const auto& e : l.edges)
        os << '"' << to_string(e.lambda) << "\",\"" << to_string(e.mu) << "\"," << e.jump.dd << ',' << e.jump.ddelta
           << ',' << e.jump.dsigma << ',' << e.activity << '\n';
}

/// Columns: n,T0,T1,T2,T3,tau0..tau3 (rational),dominant_rank,dominant_tied
inline void write_rank_csv(std::ostream& os, int n, const RankTable& t, const CsvPreamble& preamble = {}) {
    write_preamble(os, preamble);
    os << "n,T0,T1,T2,T3,tau0,tau1,tau2,tau3,dominant_rank,dominant_tied\n";
    os << n;
    for (auto c : t.counts)
        os << ',' << c;
    for (int r = 0; r < 4; ++r)
        os << ',' << t.tau(r).str();
    if (t.edges > 0)
        os << ',' << t.dominant_rank() << ',' << (t.dominant_tied() ? "true" : "false") << '\n';
    else
        os << ",,false\n";
}

/// The dataset as a JSON array of row objects, same field names as the CSV.
inline Json dataset_json(const EdgeDataset& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        const auto& l = r.at_lambda;
        const auto& m = r.at_mu;
        Json row;
        row["n"] = r.n;
        row["lambda"] = to_string(r.lambda);
        row["mu"] = to_string(r.mu);
        row["d_l"] = l.d;
        row["d_m"] = m.d;
        row["delta_l"] = l.delta;
        row["delta_m"] = m.delta;
        row["sigma_l"] = l.sigma;
        row["sigma_m"] = m.sigma;
        row["a_l"] = l.a;
        row["b_l"] = l.b;
        row["a_m"] = m.a;
        row["b_m"] = m.b;
        row["adist_l"] = l.adist;
        row["adist_m"] = m.adist;
        row["dd"] = r.jump.dd;
        row["ddelta"] = r.jump.ddelta;
        row["dsigma"] = r.jump.dsigma;
        row["da"] = r.da;
        row["db"] = r.db;
        row["dadist"] = r.dadist;
        row["rank"] = r.transition.rank;
        row["active_set"] = active_set_code(r.transition.active);
        row["sign_pattern"] = r.transition.sign_pattern();
        row["taxonomy"] = r.transition.taxonomy_label();
        row["axial"] = to_string(r.axial);
        row["rho"] = r.rho;
        row["l1"] = r.l1;
        row["linf"] = r.linf;
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace partgraph::atlas
