#include "ramsey/catalog.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/suite.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace ramsey;
namespace cat = ramsey::catalog;

namespace {

const Certificate& cert()
{
    static const Certificate c = load_certificate(std::string(RAMSEY_DATA_DIR) + "/appendix.cert");
    return c;
}

// Oracle: classes by brute force over all relabellings of all 1024 colourings,
// with colour swap, no canonical forms involved.
std::vector<std::set<std::uint32_t>> orbits()
{
    std::vector<std::array<int, 10>> perms;
    std::array<int, 5> p{0, 1, 2, 3, 4};
    auto bit = [](int u, int v) {
        if (u > v) std::swap(u, v);
        int b = 0;
        for (int a = 0; a < u; ++a) b += 4 - a;
        return b + (v - u - 1);
    };
    do {
        std::array<int, 10> image{};
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) image[static_cast<std::size_t>(bit(u, v))] = bit(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        perms.push_back(image);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> seen(1024, 0);
    std::vector<std::set<std::uint32_t>> out;
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        if (seen[mask]) continue;
        std::set<std::uint32_t> orbit;
        for (std::uint32_t start : {mask, 1023u ^ mask})
            for (const auto& image : perms) {
                std::uint32_t m2 = 0;
                for (int b = 0; b < 10; ++b)
                    if ((start >> b) & 1u) m2 |= 1u << image[static_cast<std::size_t>(b)];
                orbit.insert(m2);
            }
        for (auto x : orbit) seen[x] = 1;
        out.push_back(orbit);
    }
    return out;
}

}  // namespace

TEST(PartitionClasses, CountsAgreeWithOrbitOracle)
{
    const auto& classes = enumerate_partition_classes();
    ASSERT_EQ(classes.size(), 18u);
    const auto oracle = orbits();
    EXPECT_EQ(oracle.size(), 18u);

    int total = 0, self = 0;
    std::multiset<int> sizes, oracle_sizes;
    for (const auto& c : classes) {
        total += c.labelled_count;
        self += c.self_complementary;
        sizes.insert(c.labelled_count);
    }
    for (const auto& o : oracle) oracle_sizes.insert(static_cast<int>(o.size()));
    EXPECT_EQ(total, 1024);
    EXPECT_EQ(sizes, oracle_sizes);
    EXPECT_EQ(self, 2);  // C5 and the bull
    EXPECT_TRUE(classes[16].self_complementary);
    EXPECT_TRUE(classes.back().self_complementary);
    EXPECT_TRUE(is_isomorphic(classes.back().black, cat::cycle(5)));
    EXPECT_EQ(classes.front().black.size(), 0);

    // Every orbit maps to a single class.
    for (const auto& o : oracle) {
        std::set<int> hit;
        for (auto mask : o) hit.insert(partition_class_of(detail::graph_from_mask(5, mask)));
        EXPECT_EQ(hit.size(), 1u);
    }
}

TEST(Certificate, ParsesAndRejects)
{
    EXPECT_EQ(cert().M.size(), 18u);
    EXPECT_EQ(cert().xA.size(), 15u);
    std::istringstream missing("[M]\n1 2\n");
    EXPECT_THROW(read_certificate(missing), std::invalid_argument);
    std::istringstream junk("[M]\nfoo\n");
    EXPECT_THROW(read_certificate(junk), std::invalid_argument);
}

TEST(Certificate, LinearAlgebra)
{
    const auto report = verify_linear_algebra(cert());
    for (const auto& l : report.lines) EXPECT_TRUE(l.pass) << l.name << ": " << l.detail;
    EXPECT_EQ(rank(matrix_a(cert())), 15u);
    EXPECT_EQ(rank(matrix_b(cert())), 15u);
    EXPECT_EQ(multiply(matrix_a(cert()), cert().xA).front(), 465);
    EXPECT_EQ(*std::min_element(cert().xB.begin(), cert().xB.end()), Rational(780, 13601));
}

TEST(Certificate, RankOracle)
{
    EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(rank({{0, 1}, {1, 0}, {1, 1}}), 2u);
    EXPECT_EQ(rank({{Rational(1, 2), Rational(1, 3)}, {3, 2}}), 1u);
    EXPECT_EQ(rank({{0, 0}}), 0u);
}

TEST(Certificate, ListedOrderOfSolutionFails)
{
    // Positions 4,5 and 6,7 swapped, as in the printed listing.
    Certificate swapped = cert();
    std::swap(swapped.xA[3], swapped.xA[5]);
    std::swap(swapped.xA[4], swapped.xA[6]);
    const auto report = verify_linear_algebra(swapped);
    EXPECT_FALSE(report.find("solve-A")->pass);
    EXPECT_NE(report.find("solve-A")->detail.find("row"), std::string::npos);
    EXPECT_TRUE(report.find("solve-B")->pass);
}

TEST(Certificate, CorruptedEntryIsReported)
{
    Certificate bad = cert();
    bad.M[6][2] += 1;
    const auto report = verify_linear_algebra(bad);
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(report.find("checksum")->pass);
    EXPECT_NE(report.find("checksum")->detail.find("7"), std::string::npos);
}

TEST(Columns, DerivedEqualStored)
{
    for (int idx = 1; idx <= kColumnCount; ++idx) EXPECT_EQ(derive_column(idx), column(cert(), idx)) << idx;
    EXPECT_EQ(derive_commonality_column(cat::h3(), 480, Rational(1, 32)), cert().vA);
    EXPECT_EQ(derive_commonality_column(cat::h4(), 960, Rational(1, 64)), cert().vB);
}

TEST(Columns, PrefactorFourSixtyFiveFails)
{
    // Only the factor 480 = 15 * 32 matches the stored first columns.
    EXPECT_NE(derive_commonality_column(cat::h1(), 465, Rational(1, 32)), column(cert(), 1));
    EXPECT_NE(derive_commonality_column(cat::h2(), 465, Rational(1, 32)), column(cert(), 2));
    EXPECT_EQ(derive_commonality_column(cat::h1(), 480, Rational(1, 32)), column(cert(), 1));
}

TEST(Columns, NumericCrossValidation)
{
    const auto report = cross_validate_columns(cert(), 40, 7);
    for (const auto& l : report.lines) EXPECT_TRUE(l.pass) << l.name << ": " << l.detail;
}

TEST(Columns, ExactAgainstBasis)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 3; ++t) {
        const auto w = random_rational_graphon(2, rng, 4);
        const auto b = basis_densities(w);
        EXPECT_EQ(std::accumulate(b.begin(), b.end(), Rational(0)), 1);
        for (int idx = 1; idx <= kColumnCount; ++idx)
            EXPECT_EQ(evaluate_expression(idx, w), pair_with_basis(column(cert(), idx), b)) << idx;
        EXPECT_EQ(h3_slack(w), pair_with_basis(cert().vA, b));
    }
}

TEST(Expressions, Examples)
{
    const auto half = half_graphon<Rational>();
    EXPECT_EQ(m(cat::h3(), half), Rational(1, 32));
    EXPECT_EQ(m(cat::h4(), half), Rational(1, 64));
    EXPECT_EQ(evaluate_expression(3, half), 0);
    EXPECT_EQ(evaluate_expression(1, half), 0);
    EXPECT_EQ(evaluate_expression(6, constant_graphon(Rational(1))), 0);
    for (const auto& w : standard_suite(100, 3))
        for (int idx = 4; idx <= kColumnCount; ++idx) EXPECT_GE(evaluate_expression(idx, w), -1e-12) << idx;
    EXPECT_THROW(evaluate_expression(17, half), std::invalid_argument);
}

TEST(Conclusion, HoldsOnSuite)
{
    const auto report = conclude_commonality(cert(), true, standard_suite(60, 5), 3);
    for (const auto& l : report.lines) EXPECT_TRUE(l.pass) << l.name << ": " << l.detail;
    const auto blocked = conclude_commonality(cert(), false, standard_suite(2, 5), 1);
    EXPECT_FALSE(blocked.find("conclusion-H3")->pass);
}
