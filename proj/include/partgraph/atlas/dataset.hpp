#pragma once

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/graph.hpp"
#include "partgraph/invariants.hpp"
#include "partgraph/jumps.hpp"
#include "partgraph/layers.hpp"

namespace partgraph::atlas {

/// One oriented edge (λ, μ) with endpoint values, jumps and classification.
struct EdgeDatasetRow {
    int n = 0;
    Partition lambda;
    Partition mu;
    VertexId source = 0;
    VertexId target = 0;
    VertexInvariants at_lambda;
    VertexInvariants at_mu;
    JumpSignature jump;
    int da = 0;
    int db = 0;
    int dadist = 0;
    TransitionClass transition;
    AxialClass axial = AxialClass::neutral;
    int rho = 0;
    int l1 = 0;
    int linf = 0;

    /// The row with source < target represents the unoriented edge.
    bool is_forward() const noexcept { return source < target; }

    int endpoint_value(std::string_view invariant, bool at_target) const {
        return InvariantTable::value(at_target ? at_mu : at_lambda, invariant);
    }
    int jump_of(std::string_view invariant) const {
        return endpoint_value(invariant, true) - endpoint_value(invariant, false);
    }
};

using EdgeDataset = std::vector<EdgeDatasetRow>;

/// Fills every derived field of a row from its endpoint values and rho.
inline void derive_row_fields(EdgeDatasetRow& row) {
    const auto& l = row.at_lambda;
    const auto& m = row.at_mu;
    row.jump = {m.d - l.d, m.delta - l.delta, m.sigma - l.sigma};
    row.da = m.a - l.a;
    row.db = m.b - l.b;
    row.dadist = m.adist - l.adist;
    row.transition = classify(row.jump);
    row.axial = axial_class_of(row.dadist);
    row.l1 = row.jump.l1();
    row.linf = row.jump.linf();
}

inline EdgeDataset build_edge_dataset(const PartitionGraph& g, const InvariantTable& t) {
    EdgeDataset rows;
    rows.reserve(2 * g.edge_count());
    for (const auto& e : oriented_edges(g)) {
        EdgeDatasetRow row;
        row.n = g.n();
        row.lambda = g.vertex(e.source);
        row.mu = g.vertex(e.target);
        row.source = e.source;
        row.target = e.target;
        row.at_lambda = t[e.source];
        row.at_mu = t[e.target];
        row.rho = degree_reorganization(g, e).rho;
        derive_row_fields(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline EdgeDataset build_edge_dataset(int n) {
    const auto g = build_graph(n);
    return build_edge_dataset(g, invariant_table(g));
}

inline constexpr std::string_view kEdgeCsvHeader =
    "n,lambda,mu,d_l,d_m,delta_l,delta_m,sigma_l,sigma_m,a_l,b_l,a_m,b_m,adist_l,adist_m,dd,ddelta,dsigma,da,db,"
    "dadist,rank,active_set,sign_pattern,taxonomy,axial,rho,l1,linf";

/// Metadata lines written above a CSV header, each prefixed with "# ".
using CsvPreamble = std::vector<std::string>;

inline void write_preamble(std::ostream& os, const CsvPreamble& preamble) {
    for (const auto& line : preamble)
        os << "# " << line << '\n';
}

inline void write_edge_csv(std::ostream& os, const EdgeDataset& rows, const CsvPreamble& preamble = {}) {
    write_preamble(os, preamble);
    os << kEdgeCsvHeader << '\n';
    for (const auto& r : rows) {
        const auto& l = r.at_lambda;
        const auto& m = r.at_mu;
        os << r.n << ",\"" << to_string(r.lambda) << "\",\"" << to_string(r.mu) << "\"," << l.d << ',' << m.d << ','
           << l.delta << ',' << m.delta << ',' << l.sigma << ',' << m.sigma << ',' << l.a << ',' << l.b << ',' << m.a
           << ',' << m.b << ',' << l.adist << ',' << m.adist << ',' << r.jump.dd << ',' << r.jump.ddelta << ','
           << r.jump.dsigma << ',' << r.da << ',' << r.db << ',' << r.dadist << ',' << r.transition.rank << ','
           << active_set_code(r.transition.active) << ',' << r.transition.sign_pattern() << ','
           << r.transition.taxonomy_label() << ',' << to_string(r.axial) << ',' << r.rho << ',' << r.l1 << ','
           << r.linf << '\n';
    }
}

namespace detail {

/// Splits one CSV record; double-quoted fields may contain commas.
inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quote in CSV line");
    out.push_back(std::move(field));
    return out;
}

inline int to_int(const std::string& s, std::string_view column) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw std::invalid_argument("column " + std::string(column) + ": not an integer: '" + s + "'");
    return v;
}

inline VertexId canonical_index(const std::vector<Partition>& vertices, const Partition& p) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p, canonical_before);
    if (it == vertices.end() || *it != p)
        throw std::invalid_argument(to_string(p) + " is not a partition of the row's n");
    return static_cast<VertexId>(it - vertices.begin());
}

} // namespace detail

/// Reads a dataset written by write_edge_csv. Derived columns are checked
/// against the values recomputed from the endpoint columns.
inline EdgeDataset read_edge_csv(std::istream& is) {
    EdgeDataset rows;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::map<int, std::vector<Partition>> vertex_sets;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != kEdgeCsvHeader)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": unexpected edge CSV header");
            header_seen = true;
            continue;
        }
        try {
            const auto f = detail::split_csv_line(line);
            if (f.size() != 29)
                throw std::invalid_argument("expected 29 columns, got " + std::to_string(f.size()));
            EdgeDatasetRow r;
            r.n = detail::to_int(f[0], "n");
            r.lambda = parse_partition(f[1]);
            r.mu = parse_partition(f[2]);
            auto& l = r.at_lambda;
            auto& m = r.at_mu;
            l.d = detail::to_int(f[3], "d_l");
            m.d = detail::to_int(f[4], "d_m");
            l.delta = detail::to_int(f[5], "delta_l");
            m.delta = detail::to_int(f[6], "delta_m");
            l.sigma = detail::to_int(f[7], "sigma_l");
            m.sigma = detail::to_int(f[8], "sigma_m");
            l.a = detail::to_int(f[9], "a_l");
            l.b = detail::to_int(f[10], "b_l");
            m.a = detail::to_int(f[11], "a_m");
            m.b = detail::to_int(f[12], "b_m");
            l.adist = detail::to_int(f[13], "adist_l");
            m.adist = detail::to_int(f[14], "adist_m");
            l.alpha = l.a - l.b;
            m.alpha = m.a - m.b;
            r.rho = detail::to_int(f[26], "rho");
            derive_row_fields(r);

            const bool consistent =
                r.jump.dd == detail::to_int(f[15], "dd") && r.jump.ddelta == detail::to_int(f[16], "ddelta") &&
                r.jump.dsigma == detail::to_int(f[17], "dsigma") && r.da == detail::to_int(f[18], "da") &&
                r.db == detail::to_int(f[19], "db") && r.dadist == detail::to_int(f[20], "dadist") &&
                r.transition.rank == detail::to_int(f[21], "rank") &&
                r.transition.active == parse_active_set_code(f[22]) && r.transition.sign_pattern() == f[23] &&
                r.transition.taxonomy_label() == f[24] && to_string(r.axial) == f[25] &&
                r.l1 == detail::to_int(f[27], "l1") && r.linf == detail::to_int(f[28], "linf");
            if (!consistent)
                throw std::invalid_argument("derived columns disagree with endpoint values");

            auto it = vertex_sets.find(r.n);
            if (it == vertex_sets.end())
                it = vertex_sets.emplace(r.n, enumerate_partitions(r.n)).first;
            r.source = detail::canonical_index(it->second, r.lambda);
            r.target = detail::canonical_index(it->second, r.mu);
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header_seen)
        throw std::invalid_argument("edge CSV has no header");
    return rows;
}

} // namespace partgraph::atlas
