#pragma once

#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace ramsey {

using Bag = std::vector<int>;

/// Bags are sorted vertex lists; tree edges are pairs of bag indices.
struct TreeDecomposition {
    std::vector<Bag> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const
    {
        int w = 0;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
        return w - 1;
    }

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct ValidationResult {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline std::uint32_t bag_mask(const Bag& b)
{
    std::uint32_t m = 0;
    for (int v : b) m |= 1u << v;
    return m;
}

inline std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& d)
{
    std::vector<std::vector<int>> adj(d.bags.size());
    for (auto [a, b] : d.tree_edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

// Nodes of the tree reachable from `start` using only bags in `allowed`.
inline std::vector<bool> reach(const std::vector<std::vector<int>>& adj, int start, const std::vector<bool>& allowed)
{
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)] && allowed[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

}  // namespace detail

/// Checks treeness plus the three tree-decomposition conditions: vertex cover,
/// edge cover and running intersection (bags holding a vertex form a subtree).
inline ValidationResult validate(const Graph& h, const TreeDecomposition& d)
{
    auto fail = [](std::string why) { return ValidationResult{false, std::move(why)}; };
    const int m = static_cast<int>(d.bags.size());
    if (m == 0) return h.order() == 0 ? ValidationResult{} : fail("no bags");

    for (int i = 0; i < m; ++i) {
        const auto& bag = d.bags[static_cast<std::size_t>(i)];
        for (int v : bag)
            if (v < 0 || v >= h.order()) return fail("bag " + std::to_string(i) + " holds a non-vertex");
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return fail("bag " + std::to_string(i) + " is not a sorted set");
    }

    if (static_cast<int>(d.tree_edges.size()) != m - 1) return fail("tree: edge count is not bags - 1");
    for (auto [a, b] : d.tree_edges)
        if (a < 0 || b < 0 || a >= m || b >= m || a == b) return fail("tree: bad edge");
    const auto adj = detail::tree_adjacency(d);
    const auto connected = detail::reach(adj, 0, std::vector<bool>(static_cast<std::size_t>(m), true));
    if (std::find(connected.begin(), connected.end(), false) != connected.end()) return fail("tree: not connected");

    std::uint32_t covered = 0;
    for (const auto& bag : d.bags) covered |= detail::bag_mask(bag);
    if (covered != (h.order() == 32 ? ~0u : (1u << h.order()) - 1u)) return fail("condition 1: a vertex is in no bag");

    for (auto [u, v] : h.edges()) {
        const std::uint32_t need = (1u << u) | (1u << v);
        bool found = std::any_of(d.bags.begin(), d.bags.end(),
                                 [&](const Bag& b) { return (detail::bag_mask(b) & need) == need; });
        if (!found)
            return fail("condition 2: edge " + std::to_string(u) + " " + std::to_string(v) + " is in no bag");
    }

    for (int v = 0; v < h.order(); ++v) {
        std::vector<bool> holds(static_cast<std::size_t>(m));
        int first = -1, count = 0;
        for (int i = 0; i < m; ++i) {
            holds[static_cast<std::size_t>(i)] = (detail::bag_mask(d.bags[static_cast<std::size_t>(i)]) >> v) & 1u;
            if (holds[static_cast<std::size_t>(i)]) {
                if (first < 0) first = i;
                ++count;
            }
        }
        auto seen = detail::reach(adj, first, holds);
        if (std::count(seen.begin(), seen.end(), true) != count)
            return fail("condition 3: bags containing vertex " + std::to_string(v) + " are not connected");
    }
    return {};
}

namespace detail {

// Is there an isomorphism H[x] -> H[y] that fixes every vertex of x ∩ y?
inline bool intersection_fixing_isomorphism(const Graph& h, const Bag& x, const Bag& y)
{
    if (x.size() != y.size()) return false;
    Bag only_x, only_y;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
    std::sort(only_y.begin(), only_y.end());
    do {
        auto image = [&](int a) {
            auto it = std::find(only_x.begin(), only_x.end(), a);
            return it == only_x.end() ? a : only_y[static_cast<std::size_t>(it - only_x.begin())];
        };
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i)
            for (std::size_t j = i + 1; j < x.size() && ok; ++j)
                ok = h.adjacent(x[i], x[j]) == h.adjacent(image(x[i]), image(x[j]));
        if (ok) return true;
    } while (std::next_permutation(only_y.begin(), only_y.end()));
    return false;
}

}  // namespace detail

/// True iff every bag induces a copy of j and adjacent bags admit an
/// isomorphism fixing their intersection.
inline bool is_j_decomposition(const Graph& h, const TreeDecomposition& d, const Graph& j)
{
    if (auto check = validate(h, d); !check)
        throw std::invalid_argument("is_j_decomposition: invalid decomposition (" + check.diagnostic + ")");
    const Graph canonical_j = canonical_form(j);
    for (const auto& bag : d.bags)
        if (canonical_form(induced_subgraph(h, bag)) != canonical_j) return false;
    for (auto [a, b] : d.tree_edges)
        if (!detail::intersection_fixing_isomorphism(h, d.bags[static_cast<std::size_t>(a)],
                                                     d.bags[static_cast<std::size_t>(b)]))
            return false;
    return true;
}

inline int phi(const Graph& h) { return h.size() - h.order() + 1; }
inline int kappa(const Graph& h) { return 2 * h.size() - 3 * h.order() + 3; }

/// Tree edges whose bag intersection induces a single edge.
inline int edge_intersection_count(const Graph& h, const TreeDecomposition& d)
{
    int count = 0;
    for (auto [a, b] : d.tree_edges) {
        Bag common;
        const auto& x = d.bags[static_cast<std::size_t>(a)];
        const auto& y = d.bags[static_cast<std::size_t>(b)];
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        if (common.size() == 2 && h.adjacent(common[0], common[1])) ++count;
    }
    return count;
}

struct TriangleTreeReport {
    int phi = 0;
    int kappa = 0;
    std::optional<TreeDecomposition> decomposition;
    int edge_intersection_count = 0;
};

namespace detail {

struct TriangleSearch {
    const Graph& h;
    std::unordered_set<std::uint32_t> dead;

    int degree(int v, std::uint32_t alive) const { return std::popcount(h.neighbours(v) & alive); }

    bool connected(std::uint32_t alive) const
    {
        std::uint32_t start = alive & (~alive + 1u);
        std::uint32_t seen = start, frontier = start;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t fresh = h.neighbours(v) & alive & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen == alive;
    }

    static void attach(TreeDecomposition& d, Bag bag, std::uint32_t anchor)
    {
        std::sort(bag.begin(), bag.end());
        int parent = -1;
        for (std::size_t i = 0; i < d.bags.size(); ++i) {
            if ((bag_mask(d.bags[i]) & anchor) == anchor) {
                parent = static_cast<int>(i);
                break;
            }
        }
        d.bags.push_back(std::move(bag));
        d.tree_edges.emplace_back(parent, static_cast<int>(d.bags.size()) - 1);
    }

    std::optional<TreeDecomposition> run(std::uint32_t alive)
    {
        const int n = std::popcount(alive);
        int twice_e = 0;
        for (std::uint32_t rest = alive; rest; rest &= rest - 1) twice_e += degree(std::countr_zero(rest), alive);
        const int e = twice_e / 2;
        const int f = e - n + 1, k = 2 * e - 3 * n + 3;
        if (f < 1 || k < 0 || k > f - 1 || !connected(alive)) return std::nullopt;
        if (n == 3 && e == 3) {
            Bag bag;
            for (std::uint32_t rest = alive; rest; rest &= rest - 1) bag.push_back(std::countr_zero(rest));
            return TreeDecomposition{{bag}, {}};
        }
        if (dead.count(alive)) return std::nullopt;

        for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
            const int z = std::countr_zero(rest);
            if (degree(z, alive) != 2) continue;
            const std::uint32_t nz = h.neighbours(z) & alive;
            const int x = std::countr_zero(nz);
            const int y = 31 - std::countl_zero(nz);
            if (!h.adjacent(x, y)) continue;
            // Triangle hanging at a single vertex: z and one neighbour are private.
            for (auto [keep, drop] : {std::pair{x, y}, std::pair{y, x}}) {
                if (degree(drop, alive) != 2) continue;
                if (auto sub = run(alive & ~(1u << z) & ~(1u << drop))) {
                    attach(*sub, {x, y, z}, 1u << keep);
                    return sub;
                }
            }
            // Triangle hanging on the edge xy: only z is private.
            if (auto sub = run(alive & ~(1u << z))) {
                attach(*sub, {x, y, z}, (1u << x) | (1u << y));
                return sub;
            }
        }
        dead.insert(alive);
        return std::nullopt;
    }
};

}  // namespace detail

/// Searches for a triangle-decomposition by peeling leaf triangles with
/// backtracking. Disconnected graphs and graphs failing the counting identities
/// are rejected without search.
inline std::optional<TriangleTreeReport> find_triangle_decomposition(const Graph& h)
{
    const int f = phi(h), k = kappa(h);
    if (!is_connected(h) || f < 1 || k < 0 || k > f - 1 || h.size() != 3 * f - k) return std::nullopt;
    detail::TriangleSearch search{h, {}};
    auto d = search.run(h.order() == 32 ? ~0u : (1u << h.order()) - 1u);
    if (!d) return std::nullopt;
    TriangleTreeReport report;
    report.phi = f;
    report.kappa = k;
    report.edge_intersection_count = edge_intersection_count(h, *d);
    report.decomposition = std::move(d);
    return report;
}

/// Extends a decomposition of h to one of T *_u^v H (vertex numbering as in
/// pendant_attach). T is rooted at its smallest leaf; each oriented edge is a
/// bag, adjacent to the bag of its parent edge, and one bag holding u is joined
/// to the first bag of d that holds v.
inline TreeDecomposition extend_with_pendant_tree(const Graph& h, const TreeDecomposition& d, const Graph& t, int u,
                                                  int v)
{
    if (!is_tree(t) || t.size() < 1) throw std::invalid_argument("extend_with_pendant_tree: t must be a tree with an edge");
    if (u < 0 || u >= t.order() || v < 0 || v >= h.order())
        throw std::invalid_argument("extend_with_pendant_tree: vertex out of range");
    if (auto check = validate(h, d); !check)
        throw std::invalid_argument("extend_with_pendant_tree: invalid decomposition (" + check.diagnostic + ")");

    const auto map = pendant_vertex_map(t, u, h, v);
    int root = 0;
    while (t.degree(root) != 1) ++root;

    std::vector<int> parent(static_cast<std::size_t>(t.order()), -1), order{root};
    std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int y = 0; y < t.order(); ++y) {
            if (t.adjacent(order[i], y) && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                parent[static_cast<std::size_t>(y)] = order[i];
                order.push_back(y);
            }
        }
    }

    TreeDecomposition out = d;
    const int offset = static_cast<int>(d.bags.size());
    std::vector<int> bag_of(static_cast<std::size_t>(t.order()), -1);  // bag of the edge entering a vertex
    for (std::size_t i = 1; i < order.size(); ++i) {
        const int c = order[i], p = parent[static_cast<std::size_t>(c)];
        Bag bag{map[static_cast<std::size_t>(p)], map[static_cast<std::size_t>(c)]};
        std::sort(bag.begin(), bag.end());
        bag_of[static_cast<std::size_t>(c)] = static_cast<int>(out.bags.size());
        out.bags.push_back(std::move(bag));
        if (p != root) out.tree_edges.emplace_back(bag_of[static_cast<std::size_t>(p)], bag_of[static_cast<std::size_t>(c)]);
    }

    int edge_bag = -1;
    for (std::size_t i = static_cast<std::size_t>(offset); i < out.bags.size() && edge_bag < 0; ++i)
        if (std::binary_search(out.bags[i].begin(), out.bags[i].end(), v)) edge_bag = static_cast<int>(i);
    int host_bag = -1;
    for (int i = 0; i < offset && host_bag < 0; ++i)
        if (std::binary_search(d.bags[static_cast<std::size_t>(i)].begin(), d.bags[static_cast<std::size_t>(i)].end(), v))
            host_bag = i;
    out.tree_edges.emplace_back(host_bag, edge_bag);
    return out;
}

/// Tree decomposition from a greedy min-degree elimination order. Works for
/// any graph; components are chained through empty intersections.
inline TreeDecomposition elimination_decomposition(const Graph& h)
{
    const int n = h.order();
    TreeDecomposition d;
    if (n == 0) return d;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = h.neighbours(v);
    std::uint32_t alive = (1u << n) - 1u;
    std::vector<int> eliminated_at(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> later(static_cast<std::size_t>(n));
    std::vector<int> order;
    while (alive) {
        int best = -1, best_degree = 1 << 30;
        for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
            if (deg < best_degree) {
                best_degree = deg;
                best = v;
            }
        }
        const std::uint32_t nb = adj[static_cast<std::size_t>(best)] & alive;
        for (std::uint32_t rest = nb; rest; rest &= rest - 1) adj[static_cast<std::size_t>(std::countr_zero(rest))] |= nb & ~(1u << std::countr_zero(rest));
        later[static_cast<std::size_t>(best)] = nb;
        eliminated_at[static_cast<std::size_t>(best)] = static_cast<int>(order.size());
        order.push_back(best);
        alive &= ~(1u << best);
    }
    for (int v : order) {
        Bag bag{v};
        for (std::uint32_t rest = later[static_cast<std::size_t>(v)]; rest; rest &= rest - 1) bag.push_back(std::countr_zero(rest));
        std::sort(bag.begin(), bag.end());
        d.bags.push_back(std::move(bag));
    }
    int previous_root = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::uint32_t nb = later[static_cast<std::size_t>(order[i])];
        if (nb) {
            int next = -1;
            for (std::uint32_t rest = nb; rest; rest &= rest - 1) {
                int u = std::countr_zero(rest);
                if (next < 0 || eliminated_at[static_cast<std::size_t>(u)] < eliminated_at[static_cast<std::size_t>(next)]) next = u;
            }
            d.tree_edges.emplace_back(static_cast<int>(i), eliminated_at[static_cast<std::size_t>(next)]);
        } else {
            if (previous_root >= 0) d.tree_edges.emplace_back(previous_root, static_cast<int>(i));
            previous_root = static_cast<int>(i);
        }
    }
    return d;
}

/// Text format: bag count, one bag per line, then one tree edge per line.
inline TreeDecomposition read_decomposition(std::istream& in)
{
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("decomposition: missing bag count");
    int count = 0;
    {
        std::istringstream head(line);
        if (!(head >> count) || count < 0) throw std::invalid_argument("decomposition: bad bag count");
    }
    TreeDecomposition d;
    for (int i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("decomposition: missing bag line");
        std::istringstream row(line);
        Bag bag;
        int v = 0;
        while (row >> v) bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        d.bags.push_back(std::move(bag));
    }
    int a = 0, b = 0;
    while (in >> a) {
        if (!(in >> b)) throw std::invalid_argument("decomposition: dangling tree edge");
        d.tree_edges.emplace_back(a, b);
    }
    return d;
}

inline void write_decomposition(std::ostream& out, const TreeDecomposition& d)
{
    out << d.bags.size() << '\n';
    for (const auto& bag : d.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << bag[i];
        out << '\n';
    }
    for (auto [a, b] : d.tree_edges) out << a << ' ' << b << '\n';
}

/// A triangle-tree grown by the recursive rule, with its gluing log.
struct TriangleTreeBuild {
    Graph graph;
    int vertex_gluings = 0;
    int edge_gluings = 0;
};

/// Grows a triangle-tree with `bags` triangles, gluing each new triangle at a
/// random vertex or a random edge. Vertex gluing is skipped whenever the
/// remaining steps could then no longer fit under `max_vertices`.
template <typename Rng>
TriangleTreeBuild random_triangle_tree(int bags, Rng& rng, int max_vertices = kMaxVertices)
{
    if (bags < 1) throw std::invalid_argument("random_triangle_tree: need at least one triangle");
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    int n = 3;
    TriangleTreeBuild build;
    std::bernoulli_distribution coin(0.5);
    if (bags + 2 > max_vertices) throw std::invalid_argument("random_triangle_tree: vertex cap too small");
    for (int step = 1; step < bags; ++step) {
        // Each later step needs at least one fresh vertex.
        const int later = bags - 1 - step;
        const bool by_vertex = n + 2 + later <= max_vertices && coin(rng);
        if (by_vertex) {
            int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
            edges.insert(edges.end(), {{x, n}, {x, n + 1}, {n, n + 1}});
            n += 2;
            ++build.vertex_gluings;
        } else {
            auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
            edges.insert(edges.end(), {{x, n}, {y, n}});
            n += 1;
            ++build.edge_gluings;
        }
    }
    // Random relabelling so that recognition does not depend on the growth order.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    build.graph = g;
    return build;
}

}  // namespace ramsey
