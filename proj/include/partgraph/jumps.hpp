#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/graph.hpp"
#include "partgraph/invariants.hpp"

namespace partgraph {

constexpr int sgn(int x) noexcept { return (x > 0) - (x < 0); }

/// Δ_e F = F(target) − F(source).
inline int jump(const OrientedEdge& e, const VertexInvariant& f) { return f(e.target) - f(e.source); }

/// J(e) = (Δd, Δδ, Δσ).
struct JumpSignature {
    int dd = 0;
    int ddelta = 0;
    int dsigma = 0;

    JumpSignature operator-() const noexcept { return {-dd, -ddelta, -dsigma}; }
    JumpSignature absolute() const noexcept { return {std::abs(dd), std::abs(ddelta), std::abs(dsigma)}; }
    std::array<int, 3> components() const noexcept { return {dd, ddelta, dsigma}; }

    int l1() const noexcept { return std::abs(dd) + std::abs(ddelta) + std::abs(dsigma); }
    int linf() const noexcept { return std::max({std::abs(dd), std::abs(ddelta), std::abs(dsigma)}); }

    friend auto operator<=>(const JumpSignature&, const JumpSignature&) = default;
};

inline JumpSignature jump_signature(const InvariantTable& t, const OrientedEdge& e) {
    const auto& s = t[e.source];
    const auto& m = t[e.target];
    return {m.d - s.d, m.delta - s.delta, m.sigma - s.sigma};
}

/// Bit set over {d, δ, σ}: bit 0 = d, bit 1 = δ, bit 2 = σ.
using ActiveSet = std::uint8_t;

inline constexpr ActiveSet kActiveD = 1;
inline constexpr ActiveSet kActiveDelta = 2;
inline constexpr ActiveSet kActiveSigma = 4;

enum class Coherence { not_mixed, sign_coherent, sign_opposed };

inline std::string_view to_string(Coherence c) {
    switch (c) {
    case Coherence::not_mixed:
        return "not-mixed";
    case Coherence::sign_coherent:
        return "sign-coherent";
    case Coherence::sign_opposed:
        return "sign-opposed";
    }
    return "?";
}

/// Indexed by ActiveSet.
inline constexpr std::string_view kTaxonomyLabels[8] = {
    "neutral",     "pure-d",        "pure-delta",        "mixed-d-delta",
    "pure-sigma",  "mixed-d-sigma", "mixed-delta-sigma", "fully-mixed",
};

/// Active-set code over `d`,`x`,`s`, or `-` when empty.
inline std::string active_set_code(ActiveSet s) {
    std::string out;
    if (s & kActiveD)
        out += 'd';
    if (s & kActiveDelta)
        out += 'x';
    if (s & kActiveSigma)
        out += 's';
    return out.empty() ? "-" : out;
}

inline ActiveSet parse_active_set_code(std::string_view code) {
    if (code == "-")
        return 0;
    ActiveSet s = 0;
    const std::string_view order = "dxs";
    std::size_t pos = 0;
    for (char c : code) {
        auto k = order.find(c, pos);
        if (k == std::string_view::npos)
            throw std::invalid_argument("bad active-set code '" + std::string(code) + "'");
        s |= static_cast<ActiveSet>(1u << k);
        pos = k + 1;
    }
    if (code.empty())
        throw std::invalid_argument("empty active-set code");
    return s;
}

struct TransitionClass {
    ActiveSet active = 0;
    int rank = 0;
    std::array<int, 3> signs{};
    Coherence coherence = Coherence::not_mixed;

    std::string_view taxonomy_label() const noexcept { return kTaxonomyLabels[active]; }

    /// Three characters from "+-0".
    std::string sign_pattern() const {
        std::string out;
        for (int s : signs)
            out += s > 0 ? '+' : (s < 0 ? '-' : '0');
        return out;
    }

    friend bool operator==(const TransitionClass&, const TransitionClass&) = default;
};

inline TransitionClass classify(const JumpSignature& j) {
    TransitionClass c;
    const auto comps = j.components();
    bool pos = false;
    bool neg = false;
    for (std::size_t i = 0; i < 3; ++i) {
        c.signs[i] = sgn(comps[i]);
        if (comps[i] != 0) {
            c.active |= static_cast<ActiveSet>(1u << i);
            ++c.rank;
        }
        pos |= comps[i] > 0;
        neg |= comps[i] < 0;
    }
    if (c.rank >= 2)
        c.coherence = (pos && neg) ? Coherence::sign_opposed : Coherence::sign_coherent;
    return c;
}

/// B_d(e) = N(μ) \ N(λ), D_d(e) = N(λ) \ N(μ), ρ_d = |B_d| + |D_d|.
struct DegreeReorganization {
    std::vector<VertexId> births;
    std::vector<VertexId> deaths;
    int rho = 0;
};

inline DegreeReorganization degree_reorganization(const PartitionGraph& g, const OrientedEdge& e) {
    auto from = g.adjacent(e.source);
    auto to = g.adjacent(e.target);
    DegreeReorganization r;
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(r.births));
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(r.deaths));
    r.rho = static_cast<int>(r.births.size() + r.deaths.size());
    return r;
}

/// Δσ of a non-identity legal transfer, from the multiplicities of the
/// affected sizes {p, q, p−1, q+1} alone: sizes that appear minus sizes that
/// disappear.
inline int support_jump_local(const Partition& lambda, Transfer t) {
    if (!is_legal(lambda, t))
        throw PreconditionError("support_jump_local: illegal transfer for " + to_string(lambda));
    const int p = t.donor;
    const int q = t.recipient;
    // identity iff q = p−1 (two rows swap sizes) or p = 1, q = 0
    if (q == p - 1)
        throw PreconditionError("support_jump_local: identity transfer for " + to_string(lambda));

    std::array<int, 4> sizes{p, q, p - 1, q + 1};
    std::sort(sizes.begin(), sizes.end());
    int appear = 0;
    int disappear = 0;
    int prev = 0;
    for (int i : sizes) {
        if (i < 1 || i == prev)
            continue;
        prev = i;
        const int before = lambda.multiplicity(i);
        int after = before;
        after -= (i == p);
        after += (i == p - 1);
        after -= (q >= 1 && i == q);
        after += (i == q + 1);
        appear += (before == 0 && after > 0);
        disappear += (before > 0 && after == 0);
    }
    return appear - disappear;
}

/// Integers r with min(F(λ),F(μ)) < r ≤ max(F(λ),F(μ)), ascending: the
/// thresholds whose layer L_F^{≥r} the edge enters or leaves.
inline std::vector<int> crossed_thresholds(const OrientedEdge& e, const VertexInvariant& f) {
    const int x = f(e.source);
    const int y = f(e.target);
    std::vector<int> out;
    for (int r = std::min(x, y) + 1; r <= std::max(x, y); ++r)
        out.push_back(r);
    return out;
}

} // namespace partgraph
