#pragma once

// Command-line driver for the partition-graph atlas. main() is a thin
// wrapper around run() so the commands can be exercised in-process.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "partgraph/partgraph.hpp"

namespace partgraph::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kVerifyFailed = 3 };

inline constexpr int kDefaultMaxN = 40;

struct NRange {
    int lo = 0;
    int hi = 0;
};

/// "12" or "8..12".
inline NRange parse_n_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
            throw std::invalid_argument("--n: expected <int> or <a>..<b>, got '" + text + "'");
        return std::stoi(s);
    };
    NRange r;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    } else {
        r.lo = r.hi = to_int(text);
    }
    if (r.lo < 1)
        throw std::invalid_argument("--n: n must be >= 1");
    if (r.hi < r.lo)
        throw std::invalid_argument("--n: empty range '" + text + "'");
    return r;
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raw flag values plus their validated forms.
struct RunConfig {
    std::string command;
    std::string n_text;
    std::string out_dir;
    std::string format = "csv";
    std::string metric = "total-activity";
    std::string position = "midpoint";
    std::string norm = "linf";
    int threshold = 2;
    std::string invariant;
    std::string cone = "+++";
    std::string paths;
    bool allow_large = false;
    unsigned seed = 0; // reserved; every computation is deterministic

    NRange n;
    atlas::HeatmapMetric heat_metric = atlas::HeatmapMetric::total_activity;
    atlas::Positioning positioning = atlas::Positioning::midpoint;
    atlas::JumpNorm jump_norm = atlas::JumpNorm::linf;
    Cone parsed_cone;

    void validate() {
        n = parse_n_range(n_text);
        if (n.hi > kDefaultMaxN && !allow_large)
            throw std::invalid_argument("--n " + n_text + " exceeds " + std::to_string(kDefaultMaxN) +
                                        "; pass --allow-large to run it anyway");
        if (format != "csv" && format != "json")
            throw std::invalid_argument("--format must be csv or json");
        heat_metric = atlas::parse_heatmap_metric(metric);
        positioning = atlas::parse_positioning(position);
        jump_norm = atlas::parse_norm(norm);
        if (threshold < 0)
            throw std::invalid_argument("--threshold must be >= 0");
        if (!invariant.empty()) {
            bool known = false;
            for (auto name : kInvariantNames)
                known |= name == invariant;
            if (!known)
                throw std::invalid_argument("--invariant: unknown invariant '" + invariant + "'");
        }
        parsed_cone = parse_cone(cone);
    }

    std::vector<std::pair<std::string, std::string>> entries() const {
        return {
            {"command", command},
            {"n", n_text},
            {"format", format},
            {"metric", metric},
            {"position", position},
            {"norm", norm},
            {"threshold", std::to_string(threshold)},
            {"invariant", invariant},
            {"cone", cone},
            {"paths", paths},
            {"allow_large", allow_large ? "true" : "false"},
            {"seed", std::to_string(seed)},
        };
    }

    atlas::CsvPreamble preamble(int current_n) const {
        std::string line = "config:";
        for (const auto& [k, v] : entries())
            line += " " + k + "=" + v;
        return {std::string("partgraph ") + atlas::kSchemaVersion, line, "n=" + std::to_string(current_n)};
    }

    atlas::Json json() const {
        atlas::Json j = atlas::Json::object();
        for (const auto& [k, v] : entries())
            j[k] = v;
        return j;
    }

    atlas::ReportOptions report_options() const {
        atlas::ReportOptions o;
        o.metric = heat_metric;
        o.positioning = positioning;
        o.norm = jump_norm;
        o.large_jump_threshold = threshold;
        return o;
    }
};

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    body(os);
    os.flush();
    if (!os)
        throw IoError("write failed for " + path.string());
}

inline void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create directory " + dir + ": " + ec.message());
}

/// Sends output to `dir/name` when an output directory is set, else to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& name,
                 const std::function<void(std::ostream&)>& body) {
    if (cfg.out_dir.empty()) {
        body(out);
        return;
    }
    ensure_dir(cfg.out_dir);
    write_file(std::filesystem::path(cfg.out_dir) / name, body);
}

inline std::string path_text(const PartitionGraph& g, std::span<const VertexId> path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i)
            s += ' ';
        s += to_string(g.vertex(path[i]));
    }
    return s;
}

inline std::string triple_text(const JumpSignature& j) {
    return "(" + std::to_string(j.dd) + "," + std::to_string(j.ddelta) + "," + std::to_string(j.dsigma) + ")";
}

} // namespace detail

inline int cmd_build(const RunConfig& cfg, std::ostream& out) {
    const std::string dir = cfg.out_dir.empty() ? std::string(".") : cfg.out_dir;
    detail::ensure_dir(dir);
    const std::filesystem::path base(dir);
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        const auto rows = atlas::build_edge_dataset(g, t);
        auto rep = atlas::build_report_from_dataset(n, rows, cfg.report_options());
        rep.verification = atlas::verify(g, t, rows);
        const auto pre = cfg.preamble(n);
        const std::string suffix = "_n" + std::to_string(n);

        auto report_json = atlas::to_json(rep, cfg.json());
        detail::write_file(base / ("report" + suffix + ".json"),
                           [&](std::ostream& os) { os << report_json.dump(2) << '\n'; });
        if (cfg.format == "csv") {
            detail::write_file(base / ("edges" + suffix + ".csv"),
                               [&](std::ostream& os) { atlas::write_edge_csv(os, rows, pre); });
            detail::write_file(base / ("vertices" + suffix + ".csv"), [&](std::ostream& os) {
                atlas::write_preamble(os, pre);
                write_invariant_csv(os, g, t);
            });
            detail::write_file(base / ("boundary" + suffix + ".csv"),
                               [&](std::ostream& os) { atlas::write_boundary_csv(os, rep.boundaries, pre); });
            detail::write_file(base / ("rank" + suffix + ".csv"),
                               [&](std::ostream& os) { atlas::write_rank_csv(os, n, rep.ranks, pre); });
        } else {
            atlas::Json doc;
            doc["version"] = atlas::kSchemaVersion;
            doc["config"] = cfg.json();
            doc["n"] = n;
            doc["edges"] = atlas::dataset_json(rows);
            detail::write_file(base / ("edges" + suffix + ".json"),
                               [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        }
        out << "n=" << n << ": " << rep.vertex_count << " vertices, " << rep.edge_count << " edges, T=("
            << rep.ranks.counts[0] << "," << rep.ranks.counts[1] << "," << rep.ranks.counts[2] << ","
            << rep.ranks.counts[3] << "), max|dsigma|=" << rep.ranges[2].max_abs << "\n";
    }
    return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    bool all = true;
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        const auto rows = atlas::build_edge_dataset(g, t);
        const auto rep = atlas::verify(g, t, rows);
        out << "n=" << n << " (" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)\n";
        for (const auto& p : rep.properties) {
            out << "  " << (p.passed ? "PASS" : "FAIL") << "  " << p.name << "  [" << p.checked << " checks]";
            if (!p.passed)
                out << "  counterexample: " << p.counterexample;
            out << '\n';
        }
        const auto ranges = atlas::jump_ranges(rows);
        out << "  max|dsigma| = " << ranges[2].max_abs;
        if (ranges[2].max_abs == 2)
            out << " (dsigma = 2 realized)";
        out << '\n';
        all &= rep.all_passed();
    }
    out << (all ? "all properties passed\n" : "PROPERTY FAILURES\n");
    return all ? kOk : kVerifyFailed;
}

inline int cmd_corridors(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (cfg.invariant.empty())
        names = {"d", "delta", "sigma", "adist"};
    else
        names = {cfg.invariant};

    // path file is read once; its partitions are validated per n below
    std::vector<std::pair<std::size_t, std::vector<Partition>>> paths;
    if (!cfg.paths.empty()) {
        std::ifstream is(cfg.paths);
        if (!is) {
            err << "error: cannot read path file " << cfg.paths << '\n';
            return kIoError;
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(is, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream tokens(line);
            std::vector<Partition> path;
            std::string tok;
            try {
                while (tokens >> tok)
                    path.push_back(parse_partition(tok));
            } catch (const std::invalid_argument& e) {
                err << "error: " << cfg.paths << ":" << line_no << ": " << e.what() << '\n';
                return kUsage;
            }
            if (!path.empty())
                paths.emplace_back(line_no, std::move(path));
        }
    }

    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        out << "n=" << n << "\n";
        out << "longest strict monotone paths:\n";
        for (const auto& name : names) {
            const auto& f = t.invariant(name);
            const auto dag = gradient_dag(g, f);
            const auto path = longest_strict_path(dag);
            const auto bound = f.realized_values().size() - 1;
            out << "  " << name << ": length " << path.length << ", bound " << bound
                << (path.length <= bound ? " (ok)" : " (VIOLATED)") << ", witness " << detail::path_text(g, path.vertices)
                << '\n';
        }
        out << "corridor validation (cone " << to_string(cfg.parsed_cone) << "):\n";
        for (const auto& [line_no, parts] : paths) {
            std::vector<VertexId> ids;
            for (const auto& p : parts) {
                auto v = g.find(p);
                if (!v) {
                    err << "error: " << cfg.paths << ":" << line_no << ": " << to_string(p) << " is not a partition of "
                        << n << '\n';
                    return kUsage;
                }
                ids.push_back(*v);
            }
            CorridorCheck check;
            try {
                check = is_corridor(g, t, ids, cfg.parsed_cone);
            } catch (const InvalidPath& e) {
                err << "error: " << cfg.paths << ":" << line_no << ": " << e.what() << '\n';
                return kUsage;
            }
            out << "  line " << line_no << ": " << detail::path_text(g, ids) << " -> ";
            if (check.ok)
                out << "accepted\n";
            else
                out << "rejected at step " << *check.first_violation << " (J="
                    << detail::triple_text(*check.violating_signature) << ")\n";
        }
    }
    return kOk;
}

inline int cmd_heatmap(const RunConfig& cfg, std::ostream& out) {
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto rows = atlas::build_edge_dataset(n);
        const auto grid = atlas::heatmap(rows, cfg.heat_metric, cfg.positioning);
        const std::string suffix = "_n" + std::to_string(n);
        detail::emit(cfg, out, "heatmap" + suffix + ".csv",
                     [&](std::ostream& os) { atlas::write_heatmap_csv(os, grid, cfg.preamble(n)); });
        if (!cfg.out_dir.empty())
            detail::emit(cfg, out, "heatmap" + suffix + ".svg",
                         [&](std::ostream& os) { atlas::write_heatmap_svg(os, grid); });
    }
    return kOk;
}

inline int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> names;
    if (cfg.invariant.empty())
        names = {"d", "delta", "sigma"};
    else
        names = {cfg.invariant};
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto g = build_graph(n);
        const auto t = invariant_table(g);
        std::vector<atlas::BoundaryRow> table;
        for (const auto& name : names) {
            const auto& f = t.invariant(name);
            const auto values = f.realized_values();
            for (int r = values.front(); r <= values.back(); ++r) {
                const auto b = edge_boundary(g, f, r);
                table.push_back({name, r, b.count, b.count_plus, b.count_minus});
            }
        }
        detail::emit(cfg, out, "boundary_n" + std::to_string(n) + ".csv",
                     [&](std::ostream& os) { atlas::write_boundary_csv(os, table, cfg.preamble(n)); });
    }
    return kOk;
}

inline int cmd_large_jumps(const RunConfig& cfg, std::ostream& out) {
    for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        const auto rows = atlas::build_edge_dataset(n);
        const auto list = atlas::large_jump_edges(rows, cfg.jump_norm, cfg.threshold);
        detail::emit(cfg, out, "large_jumps_n" + std::to_string(n) + ".csv",
                     [&](std::ostream& os) { atlas::write_large_jumps_csv(os, list, cfg.preamble(n)); });
    }
    return kOk;
}

/// Parses `args` (without the program name) and runs the chosen subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition graph atlas: edgewise jump invariants of G_n", "partgraph"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n_text, "weight n, or a range a..b")->required();
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_flag("--allow-large", cfg.allow_large, "permit n above 40");
    };

    auto* build = app.add_subcommand("build", "edge dataset and atlas report for each n");
    add_common(build);
    build->add_option("--format", cfg.format, "csv or json");
    build->add_option("--metric", cfg.metric, "heatmap metric");
    build->add_option("--position", cfg.position, "midpoint or min-adist");
    build->add_option("--norm", cfg.norm, "large-jump norm");
    build->add_option("--threshold", cfg.threshold, "large-jump threshold");

    auto* verify = app.add_subcommand("verify", "run the structural property suite");
    add_common(verify);

    auto* corridors = app.add_subcommand("corridors", "longest strict paths and corridor validation");
    add_common(corridors);
    corridors->add_option("--invariant", cfg.invariant, "d, delta, sigma, adist, a, b or alpha");
    corridors->add_option("--cone", cfg.cone, "three symbols from + - 0 * !, optional /strict");
    corridors->add_option("--paths", cfg.paths, "file with one path of partitions per line");

    auto* heat = app.add_subcommand("heatmap", "edge heatmap in the (a,b)-plane");
    add_common(heat);
    heat->add_option("--metric", cfg.metric, "abs-dd, abs-ddelta, abs-dsigma or total-activity");
    heat->add_option("--position", cfg.position, "midpoint or min-adist");

    auto* boundary = app.add_subcommand("boundary", "threshold-layer boundary counts");
    add_common(boundary);
    boundary->add_option("--invariant", cfg.invariant, "invariant (default d, delta, sigma)");

    auto* large = app.add_subcommand("large-jumps", "edges with large jump activity");
    add_common(large);
    large->add_option("--norm", cfg.norm, "l1, linf, abs-d, abs-delta or abs-sigma");
    large->add_option("--threshold", cfg.threshold, "minimum activity");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (cfg.command == "build")
            return cmd_build(cfg, out);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out);
        if (cfg.command == "corridors")
            return cmd_corridors(cfg, out, err);
        if (cfg.command == "heatmap")
            return cmd_heatmap(cfg, out);
        if (cfg.command == "boundary")
            return cmd_boundary(cfg, out);
        if (cfg.command == "large-jumps")
            return cmd_large_jumps(cfg, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}

} // namespace partgraph::cli
