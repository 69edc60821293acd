#include "ramsey/catalog.hpp"
#include "ramsey/search.hpp"
#include "ramsey/suite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ramsey;
namespace cat = ramsey::catalog;

namespace {

double central_difference(const Graph& h, const StepGraphon<double>& w, int i, int j, double step)
{
    const int k = w.parts();
    auto shifted = [&](double delta) {
        std::vector<double> values(w.values());
        values[static_cast<std::size_t>(i * k + j)] += delta;
        if (i != j) values[static_cast<std::size_t>(j * k + i)] += delta;
        return m(h, StepGraphon<double>(w.weights(), values));
    };
    return (shifted(step) - shifted(-step)) / (2 * step);
}

// m_{K3+} on the 2-part equal-weight graphon [[a, b], [b, c]], summed over
// all 16 assignments by hand.
double k3plus_two_part(double a, double b, double c)
{
    const double v[2][2] = {{a, b}, {b, c}};
    double red = 0, blue = 0;
    for (int x = 0; x < 16; ++x) {
        const int p0 = x & 1, p1 = (x >> 1) & 1, p2 = (x >> 2) & 1, p3 = (x >> 3) & 1;
        red += v[p0][p1] * v[p1][p2] * v[p0][p2] * v[p0][p3];
        blue += (1 - v[p0][p1]) * (1 - v[p1][p2]) * (1 - v[p0][p2]) * (1 - v[p0][p3]);
    }
    return (red + blue) / 16;
}

// Triangle count over every labelled colouring of K_n; no isomorph rejection.
long brute_triangle_multiplicity(int n)
{
    std::vector<std::array<int, 3>> triangles;
    auto bit = [n](int u, int v) {
        int b = 0;
        for (int a = 0; a < u; ++a) b += n - 1 - a;
        return b + (v - u - 1);
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) triangles.push_back({bit(a, b), bit(a, c), bit(b, c)});
    const int edges = n * (n - 1) / 2;
    long best = 1L << 40;
    for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
        long mono = 0;
        for (const auto& t : triangles) {
            const unsigned s = ((mask >> t[0]) & 1u) + ((mask >> t[1]) & 1u) + ((mask >> t[2]) & 1u);
            mono += s == 0 || s == 3;
        }
        best = std::min(best, mono);
    }
    return 6 * best;
}

}  // namespace

TEST(Gradient, Examples)
{
    for (double p : {0.2, 0.5, 0.9}) EXPECT_NEAR(gradient_m(cat::complete(2), constant_graphon(p))[0], 0.0, 1e-15);
    for (double g : gradient_m(cat::complete(3), uniform_parts<double>(3, std::vector<double>(9, 0.5))))
        EXPECT_NEAR(g, 0.0, 1e-15);
}

TEST(Gradient, MatchesFiniteDifferences)
{
    const auto names = cat::standard_names();
    std::mt19937_64 rng(21);
    int pairs = 0;
    while (pairs < 50) {
        const Graph h = cat::named(names[rng() % names.size()]);
        if (h.order() > 8) continue;
        const auto w = random_graphon(2 + static_cast<int>(rng() % 3), rng);
        const auto grad = gradient_m(h, w);
        const int k = w.parts();
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                const double x = w.value(i, j);
                if (x < 1e-4 || x > 1 - 1e-4) continue;
                EXPECT_NEAR(grad[static_cast<std::size_t>(i * k + j)], central_difference(h, w, i, j, 1e-5), 1e-6);
                EXPECT_EQ(grad[static_cast<std::size_t>(i * k + j)], grad[static_cast<std::size_t>(j * k + i)]);
            }
        ++pairs;
    }
}

TEST(Gradient, WeightsMatchFiniteDifferences)
{
    std::mt19937_64 rng(4);
    const Graph h = cat::diamond();
    for (int trial = 0; trial < 10; ++trial) {
        const auto w = random_graphon(3, rng);
        const auto grad = weight_gradient_m(h, w);
        for (int i = 0; i < 3; ++i) {
            // Free weights: t_H is a polynomial in them, so perturb without renormalising.
            auto eval = [&](double delta) {
                double total = 0;
                for (auto flipped : {false, true}) {
                    const auto base = flipped ? one_minus(w) : w;
                    std::vector<double> weights(base.weights());
                    weights[static_cast<std::size_t>(i)] += delta;
                    // Homogeneous of degree v in the weights; evaluate by scaling.
                    double s = 0;
                    for (double x : weights) s += x;
                    for (double& x : weights) x /= s;
                    total += t_hom(h, StepGraphon<double>(weights, base.values())) * std::pow(s, h.order());
                }
                return total;
            };
            EXPECT_NEAR(grad[static_cast<std::size_t>(i)], (eval(1e-5) - eval(-1e-5)) / 2e-5, 1e-6);
        }
    }
}

TEST(Minimize, TriangleAndFourCycle)
{
    MinimizeConfig cfg;
    cfg.parts = 3;
    cfg.restarts = 32;
    const auto k3 = minimize_m(cat::complete(3), cfg);
    EXPECT_NEAR(k3.value, 0.25, 1e-5);
    EXPECT_EQ(k3.verdict, Verdict::AtTarget);
    const auto c4 = minimize_m(cat::cycle(4), cfg);
    EXPECT_NEAR(c4.value, 0.125, 1e-5);
    EXPECT_EQ(c4.verdict, Verdict::AtTarget);
    EXPECT_LE(c4.value, c4.target + 1e-12);
}

TEST(Minimize, TrianglePlusIsUncommon)
{
    // Oracle first: the 2-part grid dips below 1/8.
    double grid = 1;
    for (int a = 0; a <= 64; ++a)
        for (int b = 0; b <= 64; ++b)
            for (int c = a; c <= 64; ++c) grid = std::min(grid, k3plus_two_part(a / 64.0, b / 64.0, c / 64.0));
    ASSERT_LT(grid, 0.125);
    EXPECT_NEAR(k3plus_two_part(1 / 16.0, 1, 1 / 16.0), 0.12149, 1e-5);

    const Graph h = cat::triangle_plus();
    EXPECT_NEAR(m(h, uniform_parts<double>(2, {1 / 16.0, 1, 1, 1 / 16.0})), k3plus_two_part(1 / 16.0, 1, 1 / 16.0), 1e-15);
    MinimizeConfig cfg;
    cfg.parts = 2;
    cfg.restarts = 16;
    const auto r = minimize_m(h, cfg);
    EXPECT_LT(r.value, 0.125);
    EXPECT_LE(r.value, grid + 1e-9);
    EXPECT_EQ(r.verdict, Verdict::BelowTarget);
}

TEST(Minimize, CommonGraphsStayAtTarget)
{
    MinimizeConfig cfg;
    cfg.parts = 3;
    cfg.restarts = 8;
    for (const char* name : {"diamond", "jst", "h3", "k1,1,3"}) {
        const auto r = minimize_m(cat::named(name), cfg);
        EXPECT_EQ(r.verdict, Verdict::AtTarget) << name << " " << r.value;
    }
}

TEST(Minimize, DeterministicAcrossThreads)
{
    MinimizeConfig cfg;
    cfg.parts = 2;
    cfg.restarts = 6;
    cfg.optimize_weights = true;
    const auto one = minimize_m(cat::triangle_plus(), cfg);
    cfg.threads = 3;
    const auto three = minimize_m(cat::triangle_plus(), cfg);
    EXPECT_EQ(one.value, three.value);
    EXPECT_EQ(one.best_restart, three.best_restart);
    EXPECT_EQ(one.best, three.best);
    cfg.restarts = 0;
    EXPECT_THROW(minimize_m(cat::complete(3), cfg), std::invalid_argument);
}

TEST(Ramsey, GraphCounts)
{
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

TEST(Ramsey, Multiplicity)
{
    EXPECT_EQ(exact_ramsey_multiplicity(cat::complete(3), 5), 0);
    EXPECT_EQ(exact_ramsey_multiplicity(cat::complete(3), 6), 12);
    EXPECT_EQ(brute_triangle_multiplicity(6), 12);
    EXPECT_EQ(exact_ramsey_multiplicity(cat::complete(3), 7), brute_triangle_multiplicity(7));
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(exact_ramsey_multiplicity(cat::complete(2), n), n * (n - 1));
    EXPECT_EQ(exact_ramsey_multiplicity(cat::complete(3), 6, 2), 12);
    EXPECT_EQ(estimate_ramsey_constant(cat::complete(3), 6), Rational(1, 10));
    EXPECT_EQ(estimate_ramsey_constant(cat::complete(2), 5), 1);
    EXPECT_THROW(exact_ramsey_multiplicity(cat::complete(3), 9), std::invalid_argument);
}

TEST(Ramsey, BlockGraphonsMatchColouringCounts)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) g.add_edge(u, v);
        for (const char* name : {"k3", "c4", "cherry", "k3plus"}) {
            const Graph h = cat::named(name);
            const Rational scaled = m(h, block_graphon<Rational>(g)) * power(Rational(n), h.order());
            EXPECT_EQ(scaled, monochromatic_hom_count(h, g)) << name;
        }
    }
}
