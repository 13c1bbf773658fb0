#pragma once

// Predicates deciding whether a vertex set is distance-k dominating,
// distance-k resolving, or (s,t)-locating-dominating, plus the code vectors
// and counterexamples that witness each decision.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kloc/graph.hpp"
#include "kloc/metric.hpp"

namespace kloc {

/// Ordered, duplicate-free landmark list. Codes are reported in construction
/// order; equality and containment use set semantics.
class LandmarkSet {
public:
    LandmarkSet() = default;

    LandmarkSet(std::vector<Vertex> members) : members_(std::move(members)), sorted_(members_) {
        std::sort(sorted_.begin(), sorted_.end());
        if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
            throw GraphError("landmark set contains a repeated vertex");
    }

    LandmarkSet(std::initializer_list<Vertex> members) : LandmarkSet(std::vector<Vertex>(members)) {}

    static LandmarkSet from_mask(std::uint64_t mask) {
        std::vector<Vertex> out;
        for (; mask; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        return LandmarkSet(std::move(out));
    }

    /// Every vertex of an n-vertex graph except those listed.
    static LandmarkSet all_except(std::size_t n, std::initializer_list<Vertex> excluded = {}) {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n; ++v)
            if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
        return LandmarkSet(std::move(out));
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Vertex>& members() const noexcept { return members_; }
    const std::vector<Vertex>& sorted() const noexcept { return sorted_; }
    bool contains(Vertex v) const { return std::binary_search(sorted_.begin(), sorted_.end(), v); }

    bool is_subset_of(const LandmarkSet& other) const {
        return std::includes(other.sorted_.begin(), other.sorted_.end(), sorted_.begin(), sorted_.end());
    }

    friend bool operator==(const LandmarkSet& a, const LandmarkSet& b) { return a.sorted_ == b.sorted_; }

private:
    std::vector<Vertex> members_;
    std::vector<Vertex> sorted_;
};

/// code_{S,k}(v): truncated distances from v to each landmark, in landmark order.
struct CodeVector {
    std::vector<std::uint32_t> entries;
    Level k = 1;

    /// The all-(k+1) vector: v is farther than k from every landmark.
    bool is_far_sentinel() const {
        return std::all_of(entries.begin(), entries.end(), [&](auto e) { return e == k + 1; });
    }

    friend bool operator==(const CodeVector&, const CodeVector&) = default;
};

namespace detail {

inline void check_members(const TruncatedMetric& metric, const LandmarkSet& s) {
    if (!s.sorted().empty() && s.sorted().back() >= metric.size())
        throw GraphError("landmark " + std::to_string(s.sorted().back()) + " is not a vertex");
}

/// Code vector packed at bit_width(k+1) bits per entry.
struct PackedCode {
    std::vector<std::uint64_t> words;
    friend bool operator==(const PackedCode&, const PackedCode&) = default;
};

struct PackedCodeHash {
    std::size_t operator()(const PackedCode& c) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : c.words) h = (h ^ w) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

inline PackedCode pack_code(const TruncatedMetric& metric, const LandmarkSet& s, Vertex v) {
    const unsigned bits = std::bit_width(metric.k() + 1);
    PackedCode code;
    std::uint64_t word = 0;
    unsigned used = 0;
    for (Vertex u : s.members()) {
        if (used + bits > 64) {
            code.words.push_back(word);
            word = 0;
            used = 0;
        }
        word |= std::uint64_t{metric(v, u)} << used;
        used += bits;
    }
    code.words.push_back(word);
    return code;
}

}  // namespace detail

inline CodeVector code_vector(const TruncatedMetric& metric, const LandmarkSet& s, Vertex v) {
    detail::check_members(metric, s);
    CodeVector code{{}, metric.k()};
    code.entries.reserve(s.size());
    for (Vertex u : s.members()) code.entries.push_back(metric(v, u));
    return code;
}

/// A vertex outside s with no member within distance k, if any.
inline std::optional<Vertex> first_undominated(const TruncatedMetric& metric, const LandmarkSet& s) {
    detail::check_members(metric, s);
    for (Vertex v = 0; v < metric.size(); ++v) {
        bool covered = std::any_of(s.members().begin(), s.members().end(),
                                   [&](Vertex u) { return metric.within(v, u); });
        if (!covered) return v;
    }
    return std::nullopt;
}

/// Two distinct vertices sharing a code vector, if any. The empty set
/// separates nothing, so it leaves (0,1) unresolved whenever n >= 2.
inline std::optional<std::pair<Vertex, Vertex>> first_unresolved_pair(const TruncatedMetric& metric,
                                                                      const LandmarkSet& s) {
    detail::check_members(metric, s);
    std::unordered_map<detail::PackedCode, Vertex, detail::PackedCodeHash> seen;
    seen.reserve(metric.size());
    for (Vertex v = 0; v < metric.size(); ++v) {
        auto [it, fresh] = seen.emplace(detail::pack_code(metric, s, v), v);
        if (!fresh) return std::pair{it->second, v};
    }
    return std::nullopt;
}

inline bool is_distance_k_dominating(const TruncatedMetric& metric, const LandmarkSet& s) {
    return !first_undominated(metric, s).has_value();
}

inline bool is_distance_k_resolving(const TruncatedMetric& metric, const LandmarkSet& s) {
    return !first_unresolved_pair(metric, s).has_value();
}

/// Distance-s resolving and distance-t dominating.
inline bool is_st_locating_dominating(const TruncatedMetric& metric, const LandmarkSet& set, Level s, Level t) {
    return is_distance_k_resolving(metric.at_level(s), set) && is_distance_k_dominating(metric.at_level(t), set);
}

inline bool is_st_locating_dominating(const Graph& g, const LandmarkSet& set, Level s, Level t) {
    return is_st_locating_dominating(TruncatedMetric(g, s), set, s, t);
}

}  // namespace kloc
