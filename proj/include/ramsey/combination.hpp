#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {

/// Formal rational combination of isomorphism classes. Keys are canonical
/// forms; zero coefficients never stay in the map.
class GraphCombination {
public:
    using Terms = std::map<Graph, Rational>;

    void add(const Graph& g, const Rational& coefficient) { add_canonical(canonical_form(g), coefficient); }

    /// Caller guarantees `g` is already canonical.
    void add_canonical(const Graph& g, const Rational& coefficient)
    {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(g, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Graph& g) const
    {
        auto it = terms_.find(canonical_form(g));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_sum() const
    {
        Rational total = 0;
        for (const auto& [g, c] : terms_) total += c;
        return total;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    GraphCombination& operator+=(const GraphCombination& other)
    {
        for (const auto& [g, c] : other.terms_) add_canonical(g, c);
        return *this;
    }

    GraphCombination& operator*=(const Rational& scale)
    {
        if (scale == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_) c *= scale;
        return *this;
    }

    friend GraphCombination operator+(GraphCombination a, const GraphCombination& b) { return a += b; }
    friend GraphCombination operator*(GraphCombination a, const Rational& s) { return a *= s; }
    friend bool operator==(const GraphCombination&, const GraphCombination&) = default;

private:
    Terms terms_;
};

inline constexpr int kMaxExpansionEdges = 20;

/// Sum over even-size edge subsets F of h, grouped by the isomorphism class of
/// F with isolated vertices dropped. The empty subset is the zero-vertex graph.
inline GraphCombination even_expansion(const Graph& h)
{
    const auto edges = h.edges();
    const int e = static_cast<int>(edges.size());
    if (e > kMaxExpansionEdges)
        throw std::invalid_argument("even_expansion: " + std::to_string(e) + " edges exceeds the cap of 20");

    std::unordered_map<Graph, Graph, GraphHash> canonical_cache;
    std::map<Graph, long> counts;
    for (std::uint32_t subset = 0; subset < (1u << e); ++subset) {
        if (std::popcount(subset) % 2) continue;
        Graph f(h.order());
        for (int i = 0; i < e; ++i)
            if ((subset >> i) & 1u) f.add_edge(edges[i].first, edges[i].second);
        Graph stripped = remove_isolated(f);
        auto it = canonical_cache.find(stripped);
        if (it == canonical_cache.end()) it = canonical_cache.emplace(stripped, canonical_form(stripped)).first;
        ++counts[it->second];
    }
    GraphCombination out;
    for (const auto& [g, c] : counts) out.add_canonical(g, Rational(c));
    return out;
}

}  // namespace ramsey
