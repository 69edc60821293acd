#include "ramsey/catalog.hpp"
#include "ramsey/combination.hpp"
#include "ramsey/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace ramsey;
namespace cat = ramsey::catalog;

namespace {

// Oracle: the smallest edge bitmask over all relabellings of a small graph.
std::uint32_t brute_certificate(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t mask = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) mask |= 1u << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph from_mask(int n, std::uint32_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

Graph random_relabel(const Graph& g, std::mt19937& rng)
{
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return relabel(g, order);
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange)
{
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
    EXPECT_THROW(Graph(17), std::invalid_argument);
    EXPECT_EQ(g.size(), 1);
}

TEST(Graph, TextRoundTrip)
{
    const Graph g = cat::jst();
    EXPECT_EQ(parse_graph(to_string(g)), g);
    EXPECT_EQ(parse_graph("3\n0 1\n1 2\n"), cat::path(3));
    EXPECT_THROW(parse_graph("3\n0 3\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("3\n0\n"), std::invalid_argument);
}

TEST(Canonical, PathRelabelling)
{
    const Graph a(3, {{0, 1}, {1, 2}});
    const Graph b(3, {{2, 0}, {0, 1}});
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_NE(canonical_form(cat::complete(3)), canonical_form(cat::cherry()));
}

TEST(Canonical, FiveVertexClassesAndSelfComplementary)
{
    std::set<Graph> forms;
    std::set<std::uint32_t> oracle;
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        const Graph g = from_mask(5, mask);
        forms.insert(canonical_form(g));
        oracle.insert(brute_certificate(g));
    }
    EXPECT_EQ(forms.size(), 34u);
    EXPECT_EQ(oracle.size(), 34u);
    int self_complementary = 0;
    for (const auto& g : forms) self_complementary += canonical_form(complement(g)) == g;
    EXPECT_EQ(self_complementary, 2);
}

TEST(Canonical, AgreesWithBruteForceOnSixVertices)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 15) - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph a = from_mask(6, mask(rng));
        const Graph b = from_mask(6, mask(rng));
        EXPECT_EQ(canonical_form(a) == canonical_form(b), brute_certificate(a) == brute_certificate(b));
        EXPECT_EQ(canonical_form(random_relabel(a, rng)), canonical_form(a));
    }
}

TEST(Canonical, InvariantAndIdempotentOnLargerGraphs)
{
    std::mt19937 rng(11);
    for (const auto& name : cat::standard_names()) {
        const Graph g = cat::named(name);
        const Graph c = canonical_form(g);
        EXPECT_EQ(canonical_form(c), c) << name;
        EXPECT_TRUE(is_isomorphic(c, g)) << name;
        for (int i = 0; i < 5; ++i) EXPECT_EQ(canonical_form(random_relabel(g, rng)), c) << name;
    }
    // Regular graphs where refinement alone does nothing.
    EXPECT_FALSE(is_isomorphic(cat::cycle(6), disjoint_union(cat::complete(3), cat::complete(3))));
    EXPECT_FALSE(is_isomorphic(complement(cat::cycle(8)), cat::named("k2,2,2,2")));
    EXPECT_TRUE(is_isomorphic(cat::named("k4,4"), relabel(cat::named("k4,4"), {7, 0, 6, 1, 5, 2, 4, 3})));
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement(cat::complete(5)), cat::empty(5));
    EXPECT_TRUE(is_isomorphic(complement(cat::cycle(5)), cat::cycle(5)));
    const Graph d = complement(cat::diamond());
    EXPECT_EQ(d.size(), 1);
    EXPECT_EQ(remove_isolated(d).order(), 2);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Graph g = from_mask(6, std::uniform_int_distribution<std::uint32_t>(0, (1u << 15) - 1)(rng));
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Expansion, Triangle)
{
    const auto e = even_expansion(cat::complete(3));
    EXPECT_EQ(e.size(), 2u);
    EXPECT_EQ(e.coefficient(Graph(0)), 1);
    EXPECT_EQ(e.coefficient(cat::cherry()), 3);
}

TEST(Expansion, FourCycle)
{
    const auto e = even_expansion(cat::cycle(4));
    EXPECT_EQ(e.size(), 4u);
    EXPECT_EQ(e.coefficient(Graph(0)), 1);
    EXPECT_EQ(e.coefficient(cat::matching(2)), 2);
    EXPECT_EQ(e.coefficient(cat::cherry()), 4);
    EXPECT_EQ(e.coefficient(cat::cycle(4)), 1);
}

TEST(Expansion, Diamond)
{
    const auto e = even_expansion(cat::diamond());
    EXPECT_EQ(e.size(), 5u);
    EXPECT_EQ(e.coefficient(Graph(0)), 1);
    EXPECT_EQ(e.coefficient(cat::matching(2)), 2);
    EXPECT_EQ(e.coefficient(cat::cherry()), 8);
    EXPECT_EQ(e.coefficient(cat::triangle_plus()), 4);
    EXPECT_EQ(e.coefficient(cat::cycle(4)), 1);
}

TEST(Expansion, CoefficientSum)
{
    for (const auto& name : cat::standard_names()) {
        const Graph g = cat::named(name);
        if (g.size() > 16) continue;
        EXPECT_EQ(even_expansion(g).coefficient_sum(), pow2<Rational>(g.size() - 1)) << name;
    }
    EXPECT_THROW(even_expansion(cat::complete(7)), std::invalid_argument);
}

TEST(Combination, Arithmetic)
{
    GraphCombination a, b;
    a.add(cat::cherry(), 2);
    b.add(Graph(3, {{1, 0}, {0, 2}}), -2);
    EXPECT_TRUE((a + b).empty());
    a *= Rational(1, 2);
    EXPECT_EQ(a.coefficient(cat::path(3)), 1);
    EXPECT_TRUE((a * 0).empty());
}

TEST(Constructions, Apex)
{
    EXPECT_TRUE(is_isomorphic(apex_add(cat::complete(2), 1), cat::complete(3)));
    const Graph k222 = apex_add(cat::cycle(4), 2);
    EXPECT_EQ(k222.size(), 12);
    EXPECT_TRUE(is_isomorphic(k222, cat::named("k2,2,2")));
    for (int a = 1; a <= 5; ++a)
        EXPECT_TRUE(is_isomorphic(apex_add(cat::complete(2), a), cat::complete_multipartite({1, 1, a})));
    const Graph p = cat::path(5);
    EXPECT_EQ(apex_add(p, 3).size(), p.size() + 3 * p.order());
    EXPECT_THROW(apex_add(cat::complete(10), 7), std::invalid_argument);
}

TEST(Constructions, PendantAttach)
{
    EXPECT_TRUE(is_isomorphic(pendant_attach(cat::complete(2), 0, cat::complete(3), 1), cat::triangle_plus()));
    const Graph h1 = cat::h1();
    EXPECT_EQ(h1.order(), 5);
    EXPECT_EQ(h1.size(), 6);
    // Pendant vertex hangs off a degree-2 vertex of the diamond (degree 3 after attaching).
    std::multiset<int> deg1, deg2;
    for (int v = 0; v < 5; ++v) deg1.insert(h1.degree(v));
    EXPECT_EQ(deg1, (std::multiset<int>{1, 2, 3, 3, 3}));
    const Graph h2 = cat::h2();
    for (int v = 0; v < 5; ++v) deg2.insert(h2.degree(v));
    EXPECT_EQ(deg2, (std::multiset<int>{1, 2, 2, 3, 4}));
    EXPECT_FALSE(is_isomorphic(h1, h2));
    const Graph longer = pendant_attach(cat::path(3), 0, cat::diamond(), 0);
    EXPECT_EQ(longer.size(), 7);
    EXPECT_EQ(longer.order(), 6);
    EXPECT_THROW(pendant_attach(cat::cycle(3), 0, cat::diamond(), 0), std::invalid_argument);
}

TEST(Catalog, CountsAndIdentities)
{
    EXPECT_TRUE(is_isomorphic(cat::beachball(2), cat::named("k2,2,2")));
    EXPECT_TRUE(is_isomorphic(cat::d_graph(1), cat::diamond()));
    EXPECT_TRUE(is_isomorphic(cat::d_graph(2), cat::wheel(4)));
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(cat::d_graph(k).size(), 3 * k + 2);
        EXPECT_EQ(cat::d_graph(k).order(), k + 3);
    }
    EXPECT_EQ(cat::beachball(3).size(), 18);
    EXPECT_EQ(cat::jst().order(), 7);
    EXPECT_EQ(cat::jst().size(), 9);
    EXPECT_EQ(cat::h3().size(), 6);
    EXPECT_EQ(cat::h4().size(), 7);
    const auto bip = cat::small_bipartite();
    ASSERT_EQ(bip.size(), 10u);
    for (std::size_t i = 0; i < bip.size(); ++i) {
        EXPECT_TRUE(is_connected(bip[i]));
        EXPECT_LE(bip[i].order(), 5);
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(is_isomorphic(bip[i], bip[j]));
    }
    EXPECT_THROW(cat::named("nonsense"), std::invalid_argument);
    EXPECT_THROW(cat::named("bip11"), std::invalid_argument);
    EXPECT_TRUE(is_isomorphic(cat::named("apex:2:c4"), cat::named("k2,2,2")));
}

TEST(Catalog, SmallBipartiteIsExhaustive)
{
    // Oracle: every connected bipartite graph on 2..5 vertices is one of the ten.
    std::set<Graph> found;
    for (int n = 2; n <= 5; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
            const Graph g = from_mask(n, mask);
            if (!is_connected(g)) continue;
            bool bipartite = false;
            for (std::uint32_t side = 0; side < (1u << n) && !bipartite; ++side) {
                bool ok = true;
                for (auto [u, v] : g.edges()) ok = ok && (((side >> u) ^ (side >> v)) & 1u);
                bipartite = ok;
            }
            if (bipartite) found.insert(canonical_form(g));
        }
    }
    std::set<Graph> listed;
    for (const auto& g : cat::small_bipartite()) listed.insert(canonical_form(g));
    EXPECT_EQ(found, listed);
}
