#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/errors.hpp"

namespace partgraph {

/// An integer partition stored as a weakly decreasing sequence of positive
/// parts. The multiplicity view m_i is built once at construction.
class Partition {
public:
    Partition() = default;

    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("partition must have at least one part");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
        mult_.assign(static_cast<std::size_t>(parts_.front()) + 1, 0);
        for (int p : parts_)
            ++mult_[static_cast<std::size_t>(p)];
    }

    /// Sorts arbitrary positive parts into canonical form first.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }

    /// Largest part a(λ).
    int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Number of parts b(λ) = ℓ(λ).
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// m_i: how many parts equal i. Zero outside 1..a(λ).
    int multiplicity(int i) const noexcept {
        if (i < 1 || static_cast<std::size_t>(i) >= mult_.size())
            return 0;
        return mult_[static_cast<std::size_t>(i)];
    }

    /// Distinct part sizes in increasing order.
    std::vector<int> support() const {
        std::vector<int> out;
        for (std::size_t i = 1; i < mult_.size(); ++i)
            if (mult_[i] > 0)
                out.push_back(static_cast<int>(i));
        return out;
    }

    int support_size() const noexcept {
        return static_cast<int>(std::count_if(mult_.begin(), mult_.end(), [](int m) { return m > 0; }));
    }

    friend bool operator==(const Partition& x, const Partition& y) noexcept { return x.parts_ == y.parts_; }

    /// Lexicographic on the part sequence. The canonical vertex order is the
    /// reverse of this (see canonical_before).
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) noexcept {
        return x.parts_ <=> y.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
    std::vector<int> mult_;
};

/// True if x precedes y in the canonical (descending lexicographic) order.
inline bool canonical_before(const Partition& x, const Partition& y) noexcept { return x > y; }

/// Bracketed text form, e.g. "[3,1]".
inline std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

/// Parses "[3,1]". Whitespace around tokens is tolerated; anything that is
/// not a non-empty, weakly decreasing list of positive integers is rejected.
inline Partition parse_partition(std::string_view text) {
    auto fail = [&](const char* why) {
        return std::invalid_argument("cannot parse partition '" + std::string(text) + "': " + why);
    };
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    std::size_t i = 0;
    skip_ws(i);
    if (i >= text.size() || text[i] != '[')
        throw fail("expected '['");
    ++i;
    std::vector<int> parts;
    while (true) {
        skip_ws(i);
        std::size_t start = i;
        if (i < text.size() && text[i] == '-')
            throw fail("parts must be positive");
        long value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000)
                throw fail("part too large");
            ++i;
        }
        if (i == start)
            throw fail("expected a part");
        if (value < 1)
            throw fail("parts must be positive");
        if (!parts.empty() && value > parts.back())
            throw fail("parts must be weakly decreasing");
        parts.push_back(static_cast<int>(value));
        skip_ws(i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        throw fail("expected ',' or ']'");
    }
    skip_ws(i);
    if (i != text.size())
        throw fail("trailing characters");
    return Partition(std::move(parts));
}

/// All partitions of n in descending lexicographic order: (n) first,
/// (1,...,1) last.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions: n must be >= 1, got " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // rightmost part larger than 1
        int k = static_cast<int>(a.size()) - 1;
        int ones = 0;
        while (k >= 0 && a[static_cast<std::size_t>(k)] == 1) {
            ++ones;
            --k;
        }
        if (k < 0)
            break;
        int v = --a[static_cast<std::size_t>(k)];
        int rest = ones + 1;
        a.resize(static_cast<std::size_t>(k) + 1);
        while (rest > 0) {
            int take = std::min(v, rest);
            a.push_back(take);
            rest -= take;
        }
    }
    return out;
}

/// Moves one unit from a part of size `donor` to a part of size `recipient`;
/// recipient 0 creates a new part of size 1.
struct Transfer {
    int donor = 0;
    int recipient = 0;

    friend auto operator<=>(const Transfer&, const Transfer&) = default;
};

inline bool is_legal(const Partition& lambda, Transfer t) noexcept {
    const int p = t.donor;
    const int q = t.recipient;
    if (p < 1 || q < 0)
        return false;
    if (lambda.multiplicity(p) < 1)
        return false;
    if (q >= 1 && lambda.multiplicity(q) < 1)
        return false;
    if (p == q && lambda.multiplicity(p) < 2)
        return false;
    return true;
}

/// Result of a legal transfer. May equal lambda (identity move).
inline Partition apply_transfer(const Partition& lambda, Transfer t) {
    if (!is_legal(lambda, t))
        throw PreconditionError("illegal transfer (" + std::to_string(t.donor) + "," + std::to_string(t.recipient) +
                                ") for " + to_string(lambda));
    std::vector<int> parts = lambda.parts();
    const auto donor = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), t.donor) - parts.begin());
    if (t.recipient == 0) {
        parts.push_back(1);
    } else {
        // a different copy when donor and recipient have equal size
        auto from = t.recipient == t.donor ? parts.begin() + static_cast<std::ptrdiff_t>(donor) + 1 : parts.begin();
        *std::find(from, parts.end(), t.recipient) += 1;
    }
    parts[donor] -= 1;
    std::erase(parts, 0);
    return Partition::from_unsorted(std::move(parts));
}

/// Legal transfers whose result differs from lambda. Identity moves are
/// detected by applying the transfer and comparing.
inline std::vector<Transfer> legal_transfers(const Partition& lambda) {
    std::vector<Transfer> out;
    const auto sizes = lambda.support();
    for (int p : sizes) {
        std::vector<int> recipients{0};
        recipients.insert(recipients.end(), sizes.begin(), sizes.end());
        for (int q : recipients) {
            Transfer t{p, q};
            if (!is_legal(lambda, t))
                continue;
            if (apply_transfer(lambda, t) != lambda)
                out.push_back(t);
        }
    }
    return out;
}

/// N(λ): distinct partitions reachable by one non-identity transfer, in
/// canonical order.
inline std::vector<Partition> neighbors(const Partition& lambda) {
    std::vector<Partition> out;
    for (Transfer t : legal_transfers(lambda))
        out.push_back(apply_transfer(lambda, t));
    std::sort(out.begin(), out.end(), canonical_before);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<int> support(const Partition& lambda) { return lambda.support(); }
inline int support_size(const Partition& lambda) { return lambda.support_size(); }

} // namespace partgraph
