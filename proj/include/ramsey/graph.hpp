#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

inline constexpr int kMaxVertices = 16;

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 16 vertices, stored as adjacency-row bitsets.
///
/// The zero-vertex graph is allowed and stands for the empty class of the
/// even-subgraph expansion (its density is 1 in every graphon).
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n)
    {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 16]");
    }

    Graph(int n, std::initializer_list<Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }
    int size() const
    {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
        return twice / 2;
    }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint16_t neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }

    /// Adds edge uv; loops, duplicates and out-of-range endpoints are rejected.
    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        rows_[u] |= static_cast<std::uint16_t>(1u << v);
        rows_[v] |= static_cast<std::uint16_t>(1u << u);
    }

    void remove_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        rows_[u] &= static_cast<std::uint16_t>(~(1u << v));
        rows_[v] &= static_cast<std::uint16_t>(~(1u << u));
    }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    friend auto operator<=>(const Graph&, const Graph&) = default;
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::array<std::uint16_t, kMaxVertices> rows_{};
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(g.order());
        for (int v = 0; v < g.order(); ++v) h = h * 1000003u ^ g.neighbours(v);
        return h;
    }
};

inline Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

/// Relabels so that old vertex `order[i]` becomes new vertex i.
inline Graph relabel(const Graph& g, const std::vector<int>& order)
{
    const int n = g.order();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(position[u], position[v]);
    return out;
}

/// Subgraph induced on `vertices`, renumbered in the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices)
{
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline Graph remove_isolated(const Graph& g)
{
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out;
}

inline int component_count(const Graph& g)
{
    std::uint32_t seen = 0;
    int components = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1u) continue;
        ++components;
        std::uint32_t frontier = 1u << s;
        seen |= frontier;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t fresh = g.neighbours(v) & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
    }
    return components;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

inline bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

/// H^{+a}: adds a pairwise non-adjacent vertices joined to every vertex of h.
inline Graph apex_add(const Graph& h, int a)
{
    if (a < 0) throw std::invalid_argument("apex count must be non-negative");
    if (h.order() + a > kMaxVertices) throw std::invalid_argument("apex_add exceeds the 16-vertex cap");
    Graph out(h.order() + a);
    for (auto [u, v] : h.edges()) out.add_edge(u, v);
    for (int x = h.order(); x < h.order() + a; ++x)
        for (int v = 0; v < h.order(); ++v) out.add_edge(v, x);
    return out;
}

/// T *_u^v H: identifies vertex u of the tree t with vertex v of h.
///
/// Vertices of h keep their labels; the vertices of t other than u follow in
/// increasing order. `pendant_vertex_map` returns where each tree vertex lands.
inline std::vector<int> pendant_vertex_map(const Graph& t, int u, const Graph& h, int v)
{
    std::vector<int> map(t.order());
    int next = h.order();
    for (int x = 0; x < t.order(); ++x) map[x] = (x == u) ? v : next++;
    return map;
}

inline Graph pendant_attach(const Graph& t, int u, const Graph& h, int v)
{
    if (!is_tree(t)) throw std::invalid_argument("pendant_attach: first argument is not a tree");
    if (u < 0 || u >= t.order()) throw std::invalid_argument("pendant_attach: tree vertex out of range");
    if (v < 0 || v >= h.order()) throw std::invalid_argument("pendant_attach: host vertex out of range");
    if (t.order() + h.order() - 1 > kMaxVertices)
        throw std::invalid_argument("pendant_attach exceeds the 16-vertex cap");
    Graph out(t.order() + h.order() - 1);
    for (auto [a, b] : h.edges()) out.add_edge(a, b);
    auto map = pendant_vertex_map(t, u, h, v);
    for (auto [a, b] : t.edges()) out.add_edge(map[a], map[b]);
    return out;
}

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. Subcells are
// ordered by their signature, so the ordered partition is isomorphism-invariant.
inline void refine(const Graph& g, Cells& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint32_t> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells) {
            std::uint32_t m = 0;
            for (int v : cell) m |= 1u << v;
            masks.push_back(m);
        }
        Cells next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> signature(masks.size());
                for (std::size_t c = 0; c < masks.size(); ++c)
                    signature[c] = std::popcount(static_cast<std::uint32_t>(g.neighbours(v)) & masks[c]);
                keyed.emplace_back(std::move(signature), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<int> sub;
                    for (std::size_t j = start; j < i; ++j) sub.push_back(keyed[j].second);
                    next.push_back(std::move(sub));
                    start = i;
                }
            }
        }
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
    }
}

inline bool twins(const Graph& g, int u, int v)
{
    auto strip = [&](int a, int b) { return g.neighbours(a) & static_cast<std::uint16_t>(~(1u << b)); };
    return strip(u, v) == strip(v, u);
}

inline void canonical_search(const Graph& g, Cells cells, Graph& best, bool& found)
{
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        std::vector<int> order;
        order.reserve(g.order());
        for (const auto& c : cells) order.push_back(c.front());
        Graph candidate = relabel(g, order);
        if (!found || candidate < best) {
            best = candidate;
            found = true;
        }
        return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[index]) {
        // Swapping twins in the same cell is an automorphism fixing everything individualised so far.
        if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
        tried.push_back(v);
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c != index) {
                child.push_back(cells[c]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int x : cells[c])
                if (x != v) rest.push_back(x);
            child.push_back(std::move(rest));
        }
        canonical_search(g, std::move(child), best, found);
    }
}

}  // namespace detail

/// Canonical representative of the isomorphism class of g: isomorphic inputs
/// give identical outputs. Individualisation-refinement over degree-refined
/// partitions, with twin pruning.
inline Graph canonical_form(const Graph& g)
{
    if (g.order() <= 1) return g;
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    Graph best;
    bool found = false;
    detail::canonical_search(g, detail::Cells{all}, best, found);
    return best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

/// Text format: first line n, then one "u v" pair per line, 0-indexed.
inline Graph read_graph(std::istream& in)
{
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("graph: missing vertex count");
    Graph g(n);
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("graph: dangling endpoint");
        g.add_edge(u, v);
    }
    if (!in.eof()) throw std::invalid_argument("graph: malformed edge line");
    return g;
}

inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_string(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace ramsey
