#include "ramsey/catalog.hpp"
#include "ramsey/inequalities.hpp"
#include "ramsey/suite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace ramsey;
namespace cat = ramsey::catalog;

namespace {

const std::vector<StepGraphon<double>>& suite()
{
    static const auto s = standard_suite(200, 31);
    return s;
}

const double kGolden = (3.0 - std::sqrt(5.0)) / 4.0;

}  // namespace

TEST(Goodman, Examples)
{
    auto half = check_goodman(half_graphon<double>());
    EXPECT_TRUE(half.holds());
    EXPECT_DOUBLE_EQ(half.lhs, 0.25);
    EXPECT_DOUBLE_EQ(half.rhs, 0.25);
    auto block = check_goodman(uniform_parts<double>(2, {1.0, 0.0, 0.0, 1.0}));
    EXPECT_DOUBLE_EQ(block.lhs, 0.25);
    EXPECT_DOUBLE_EQ(block.rhs, 0.25);
    for (const auto& w : suite()) EXPECT_LE(std::abs(check_goodman(w).slack), 1e-12);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(check_goodman(random_rational_graphon(3, rng)).slack, 0.0);
}

TEST(Holder, Examples)
{
    const Graph k222 = cat::named("k2,2,2"), k122 = cat::named("k1,2,2"), c4 = cat::cycle(4);
    const Graph d = cat::diamond(), k3 = cat::complete(3), k2 = cat::complete(2);
    for (const auto& w : suite()) {
        auto octahedron = check_holder(k222, k122, c4, 2, 2, w);
        EXPECT_FALSE(octahedron.violated());
        auto diamond = check_holder(d, k3, k2, 2, 2, w);
        EXPECT_FALSE(diamond.violated());
        if (t_hom(k2, w) > 0 && t_hom(k2, one_minus(w)) > 0) {
            EXPECT_TRUE(diamond.holds());
            EXPECT_NEAR(diamond.rhs, std::pow(m(k3, w), 2), 1e-12);
        }
        auto trivial = check_holder(k2, k2, k2, 1, 1, w);
        EXPECT_TRUE(trivial.holds());
        EXPECT_NEAR(trivial.slack, 0.0, 1e-15);
    }
    EXPECT_THROW(check_holder(d, k3, k2, 3, 2, half_graphon<double>()), std::invalid_argument);
}

TEST(Holder, FailedHypothesisIsNotApplicable)
{
    // t_K3 >= t_K2^3 fails on a bipartite block graphon.
    const auto w = block_graphon<double>(cat::complete(2));
    auto r = check_holder(cat::complete(3), cat::complete(2), cat::complete(2), 1, 3, w);
    EXPECT_EQ(r.outcome, Outcome::NotApplicable);
    EXPECT_NE(r.reason.find("hypothesis"), std::string::npos);
}

TEST(JTree, BookAndTriangleTrees)
{
    const Graph book = cat::named("k1,1,4");
    const TreeDecomposition star{{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}}, {{0, 1}, {0, 2}, {0, 3}}};
    for (const auto& w : suite()) {
        auto r = check_jtree_bound(book, star, cat::complete(3), w);
        EXPECT_FALSE(r.violated());
        if (r.holds())
            EXPECT_NEAR(r.rhs, std::pow(t_hom(cat::complete(3), w), 4) / std::pow(t_hom(cat::complete(2), w), 3), 1e-12);
        auto single = check_jtree_bound(cat::complete(3), {{{0, 1, 2}}, {}}, cat::complete(3), w);
        EXPECT_NEAR(single.slack, 0.0, 1e-15);
    }
    EXPECT_EQ(check_jtree_bound(book, star, cat::complete(3), constant_graphon(0.0)).outcome, Outcome::NotApplicable);

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto build = random_triangle_tree(1 + trial % 6, rng);
        for (std::size_t i = 0; i < 40; ++i) {
            const auto& w = suite()[i];
            EXPECT_FALSE(check_tritree_bound(build.graph, w).violated());
            for (const auto& r : check_tritree_chain(build.graph, w)) EXPECT_TRUE(r.holds()) << r.name;
        }
    }
}

TEST(AddTree, Examples)
{
    const Graph k2 = cat::complete(2);
    for (const auto& w : suite()) {
        for (int host : {2, 0}) {
            auto reports = check_addtree_bound(k2, 0, cat::diamond(), host, w);
            ASSERT_EQ(reports.size(), 2u);
            EXPECT_FALSE(reports[0].violated());
            EXPECT_TRUE(reports[1].holds());
        }
    }
    auto na = check_addtree_bound(k2, 0, cat::complete(3), 0, half_graphon<double>());
    EXPECT_EQ(na[0].outcome, Outcome::NotApplicable);
    auto half = check_addtree_bound(k2, 0, cat::diamond(), 2, half_graphon<double>());
    EXPECT_NEAR(half[1].slack, 0.0, 1e-15);
}

TEST(Diamond, Examples)
{
    for (double c : {0.0, 1.0 / 7.0, kGolden}) {
        auto half = check_diamond_lemma(half_graphon<double>(), c);
        EXPECT_NEAR(half.slack, 0.0, 1e-15);
        for (const auto& w : suite()) EXPECT_TRUE(check_diamond_lemma(w, c).holds()) << c;
    }
    EXPECT_THROW(check_diamond_lemma(half_graphon<double>(), 0.2), std::invalid_argument);
    EXPECT_THROW(check_diamond_lemma(half_graphon<double>(), -0.01), std::invalid_argument);
    EXPECT_TRUE(diamond_constant_in_range(Rational(19, 100)));
    EXPECT_TRUE(diamond_constant_in_range(Rational(1, 7)));
    EXPECT_FALSE(diamond_constant_in_range(Rational(191, 1000)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i)
        EXPECT_TRUE(check_diamond_lemma(random_rational_graphon(2, rng), Rational(1, 7)).holds());
}

TEST(K3PlusCauchySchwarz, Examples)
{
    auto zero = check_k3plus_cs(to_signed(half_graphon<double>()));
    EXPECT_EQ(zero.lhs, 0.0);
    EXPECT_TRUE(zero.holds());
    auto one = check_k3plus_cs(to_signed(constant_graphon(1.0)));
    EXPECT_DOUBLE_EQ(one.lhs, 1.0);
    EXPECT_DOUBLE_EQ(one.rhs, 1.0);
    for (const auto& w : suite()) EXPECT_TRUE(check_k3plus_cs(to_signed(w)).holds());
}

TEST(Beachball, ClosedForms)
{
    const Rational c(1, 7), quarter(1, 4);
    EXPECT_EQ(beachball_h(2, c, quarter), Rational(1, 2048));
    EXPECT_EQ(beachball_h(3, c, quarter), pow2<Rational>(1 - cat::beachball(3).size()));
    double previous = 0;
    for (int i = 0; i <= 175; ++i) {
        const double x = 0.25 + 0.01 * i;
        const double value = beachball_h(2, 1.0 / 7.0, x);
        EXPECT_GE(value, previous);
        previous = value;
    }
    EXPECT_THROW(beachball_h(2, 1.0 / 7.0, 0.2), std::invalid_argument);
    EXPECT_THROW(beachball_h(2, -0.1, 0.25), std::invalid_argument);
}

TEST(Beachball, Polynomial)
{
    EXPECT_EQ(beachball_p(2, Rational(1, 4)), Rational(1, 4));
    EXPECT_EQ(beachball_p_shifted(2, Rational(1, 4)), Rational(1, 4));
    for (int k = 2; k <= 10; ++k) {
        EXPECT_EQ(beachball_p_coefficients(k), beachball_p_shifted_coefficients(k)) << k;
        for (int i = 0; i <= 240; ++i) {
            const Rational x = Rational(1, 4) + Rational(i, 64);
            EXPECT_GT(beachball_p(k, x), 0);
            EXPECT_EQ(beachball_p(k, x), beachball_p_shifted(k, x));
        }
    }
}

TEST(Beachball, BoundOnSuite)
{
    for (std::size_t i = 0; i < 60; ++i) {
        EXPECT_TRUE(check_beachball_bound(2, suite()[i]).holds());
        EXPECT_TRUE(check_beachball_bound(3, suite()[i]).holds());
    }
}

TEST(Apex, Lemma)
{
    auto k2 = check_apex_lemma(cat::complete(2), half_graphon<double>());
    EXPECT_DOUBLE_EQ(k2.lhs, 0.25);
    EXPECT_DOUBLE_EQ(k2.rhs, 0.25);
    auto c4 = check_apex_lemma(cat::cycle(4), half_graphon<double>());
    EXPECT_DOUBLE_EQ(c4.lhs, std::pow(2.0, -7));
    EXPECT_DOUBLE_EQ(c4.rhs, std::pow(2.0, -7));
    for (const auto& h : cat::small_bipartite())
        for (std::size_t i = 0; i < 50; ++i) EXPECT_TRUE(check_apex_lemma(h, suite()[i]).holds()) << to_string(h);
    EXPECT_THROW(check_apex_lemma(cat::complete(3), half_graphon<double>()), std::invalid_argument);
}

TEST(Apex, Chain)
{
    auto tight = check_apex_chain(cat::cycle(4), 2, half_graphon<double>());
    EXPECT_DOUBLE_EQ(tight[1].lhs, std::pow(2.0, -11));
    EXPECT_DOUBLE_EQ(tight[1].rhs, std::pow(2.0, -11));
    for (std::size_t i = 0; i < 40; ++i) {
        const auto& w = suite()[i];
        for (const auto& r : check_apex_chain(cat::named("k2,3"), 1, w)) EXPECT_TRUE(r.holds());
        for (const auto& r : check_apex_chain(cat::complete(2), 3, w)) EXPECT_TRUE(r.holds());
        for (const auto& r : check_apex_chain(cat::cycle(4), 2, w)) EXPECT_TRUE(r.holds());
    }
}

TEST(Report, Format)
{
    std::ostringstream out;
    write_report(out, check_goodman(half_graphon<double>()));
    EXPECT_EQ(out.str(), "goodman\tholds\t0\t0.25\t0.25\n");
}
