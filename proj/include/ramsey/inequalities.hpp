#pragma once

#include "ramsey/catalog.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/density.hpp"
#include "ramsey/graphon.hpp"
#include "ramsey/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr double kInequalityTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-12;

enum class Outcome { Holds, Violated, NotApplicable };

inline const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Violated: return "violated";
    case Outcome::NotApplicable: return "n/a";
    }
    return "?";
}

/// lhs >= rhs is the claim; slack = lhs - rhs.
struct InequalityReport {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    Outcome outcome = Outcome::NotApplicable;
    std::string witness;
    std::string reason;

    bool holds() const { return outcome == Outcome::Holds; }
    bool violated() const { return outcome == Outcome::Violated; }
};

/// One TSV row: name, outcome, slack, lhs, rhs.
inline void write_report(std::ostream& out, const InequalityReport& r)
{
    out << r.name << '\t' << to_string(r.outcome) << '\t' << format_value(r.slack) << '\t' << format_value(r.lhs)
        << '\t' << format_value(r.rhs);
    if (!r.reason.empty()) out << '\t' << r.reason;
    out << '\n';
}

namespace detail {

template <typename T>
std::string describe(const StepGraphon<T>& w)
{
    std::ostringstream out;
    write_graphon(out, w);
    return out.str();
}

template <typename T>
InequalityReport make_report(std::string name, const T& lhs, const T& rhs, double tolerance, std::string witness)
{
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = to_double(lhs);
    r.rhs = to_double(rhs);
    const T slack = lhs - rhs;
    r.slack = to_double(slack);
    if constexpr (is_exact_v<T>)
        r.outcome = slack >= 0 ? Outcome::Holds : Outcome::Violated;
    else
        r.outcome = slack >= -tolerance ? Outcome::Holds : Outcome::Violated;
    r.witness = std::move(witness);
    return r;
}

// Two-sided check used for identities.
template <typename T>
InequalityReport make_identity(std::string name, const T& lhs, const T& rhs, std::string witness)
{
    auto r = make_report(std::move(name), lhs, rhs, kIdentityTolerance, std::move(witness));
    if constexpr (is_exact_v<T>)
        r.outcome = lhs == rhs ? Outcome::Holds : Outcome::Violated;
    else
        r.outcome = std::abs(r.slack) <= kIdentityTolerance ? Outcome::Holds : Outcome::Violated;
    return r;
}

inline InequalityReport not_applicable(std::string name, std::string reason)
{
    InequalityReport r;
    r.name = std::move(name);
    r.outcome = Outcome::NotApplicable;
    r.reason = std::move(reason);
    return r;
}

}  // namespace detail

/// m_K3 = (3/2) m_K12 - 1/2 (an identity).
template <typename T>
InequalityReport check_goodman(const StepGraphon<T>& w)
{
    const T lhs = m(catalog::complete(3), w);
    const T rhs = make_fraction<T>(3, 2) * m(catalog::cherry(), w) - make_fraction<T>(1, 2);
    return detail::make_identity("goodman", lhs, rhs, detail::describe(w));
}

/// m_h >= 2^(k-l) m_j^l / m_f^(k-1), provided t_h >= t_j^l / t_f^(k-1) holds for
/// both W and 1 - W. Failed hypotheses give NotApplicable.
template <typename T>
InequalityReport check_holder(const Graph& h, const Graph& j, const Graph& f, int k, int l, const StepGraphon<T>& w)
{
    const std::string name = "holder";
    if (k < 1 || l < k) throw std::invalid_argument("check_holder: need l >= k >= 1");
    const auto hypothesis = [&](const StepGraphon<T>& x, const char* which) -> std::string {
        const T tf = t_hom(f, x);
        if (k > 1 && tf == T(0)) return std::string("t_f(") + which + ") = 0";
        const T lhs = t_hom(h, x);
        const T rhs = power(t_hom(j, x), static_cast<unsigned>(l)) / power(tf, static_cast<unsigned>(k - 1));
        auto r = detail::make_report(name, lhs, rhs, kInequalityTolerance, "");
        return r.holds() ? "" : std::string("hypothesis fails for ") + which;
    };
    const auto complement_w = one_minus(w);
    if (auto why = hypothesis(w, "W"); !why.empty()) return detail::not_applicable(name, why);
    if (auto why = hypothesis(complement_w, "1-W"); !why.empty()) return detail::not_applicable(name, why);

    const T mf = m(f, w);
    if (k > 1 && mf == T(0)) return detail::not_applicable(name, "m_f = 0");
    const T lhs = m(h, w);
    const T rhs = pow2<T>(k - l) * power(m(j, w), static_cast<unsigned>(l)) / power(mf, static_cast<unsigned>(k - 1));
    return detail::make_report(name, lhs, rhs, kInequalityTolerance, detail::describe(w));
}

/// t_h >= t_j^|bags| / prod over tree edges XY of t_{H[X cap Y]}.
template <typename T>
InequalityReport check_jtree_bound(const Graph& h, const TreeDecomposition& d, const Graph& j, const StepGraphon<T>& w)
{
    const std::string name = "jtree";
    if (!is_j_decomposition(h, d, j)) throw std::invalid_argument("check_jtree_bound: not a J-decomposition");
    if (t_hom(catalog::complete(2), w) == T(0)) return detail::not_applicable(name, "zero graphon");
    T denominator(1);
    for (auto [a, b] : d.tree_edges) {
        Bag common;
        const auto& x = d.bags[static_cast<std::size_t>(a)];
        const auto& y = d.bags[static_cast<std::size_t>(b)];
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        denominator *= t_hom(induced_subgraph(h, common), w);
    }
    if (denominator == T(0)) return detail::not_applicable(name, "vanishing intersection density");
    const T lhs = t_hom(h, w);
    const T rhs = power(t_hom(j, w), static_cast<unsigned>(d.bags.size())) / denominator;
    return detail::make_report(name, lhs, rhs, kInequalityTolerance, detail::describe(w));
}

/// t_h >= t_K3^phi / t_K2^kappa for a triangle-tree h.
template <typename T>
InequalityReport check_tritree_bound(const Graph& h, const StepGraphon<T>& w)
{
    const std::string name = "tritree";
    auto report = find_triangle_decomposition(h);
    if (!report) return detail::not_applicable(name, "not a triangle-tree");
    const T t2 = t_hom(catalog::complete(2), w);
    if (t2 == T(0)) return detail::not_applicable(name, "zero graphon");
    const T lhs = t_hom(h, w);
    const T rhs = power(t_hom(catalog::complete(3), w), static_cast<unsigned>(report->phi)) /
                  power(t2, static_cast<unsigned>(report->kappa));
    return detail::make_report(name, lhs, rhs, kInequalityTolerance, detail::describe(w));
}

/// m_h >= 2^(kappa+1-phi) m_K3^phi >= 2^(1-e) for a triangle-tree h.
template <typename T>
std::vector<InequalityReport> check_tritree_chain(const Graph& h, const StepGraphon<T>& w)
{
    auto report = find_triangle_decomposition(h);
    if (!report) return {detail::not_applicable("tritree-chain", "not a triangle-tree"),
                         detail::not_applicable("tritree-common", "not a triangle-tree")};
    const T middle = pow2<T>(report->kappa + 1 - report->phi) *
                     power(m(catalog::complete(3), w), static_cast<unsigned>(report->phi));
    const auto witness = detail::describe(w);
    return {detail::make_report("tritree-chain", m(h, w), middle, kInequalityTolerance, witness),
            detail::make_report("tritree-common", middle, pow2<T>(1 - h.size()), kInequalityTolerance, witness)};
}

/// For T *_u^v H with H a triangle-tree and e(T) <= kappa(H): the density bound
/// t >= t_K3^phi / t_K2^(kappa - e(T)), then m >= 2^(1-e).
template <typename T>
std::vector<InequalityReport> check_addtree_bound(const Graph& t, int u, const Graph& h, int v, const StepGraphon<T>& w)
{
    auto report = find_triangle_decomposition(h);
    if (!report) return {detail::not_applicable("addtree", "host is not a triangle-tree"),
                         detail::not_applicable("addtree-common", "host is not a triangle-tree")};
    if (t.size() > report->kappa)
        return {detail::not_applicable("addtree", "e(T) > kappa(H)"),
                detail::not_applicable("addtree-common", "e(T) > kappa(H)")};
    const Graph g = pendant_attach(t, u, h, v);
    const auto witness = detail::describe(w);
    auto common = detail::make_report("addtree-common", m(g, w), pow2<T>(1 - g.size()), kInequalityTolerance, witness);
    const T t2 = t_hom(catalog::complete(2), w);
    if (t2 == T(0)) return {detail::not_applicable("addtree", "zero graphon"), common};
    const T rhs = power(t_hom(catalog::complete(3), w), static_cast<unsigned>(report->phi)) /
                  power(t2, static_cast<unsigned>(report->kappa - t.size()));
    return {detail::make_report("addtree", t_hom(g, w), rhs, kInequalityTolerance, witness), common};
}

/// Whether 0 <= c <= (3 - sqrt 5)/4. Exact for rationals: 3 - 4c >= sqrt 5.
template <typename T>
bool diamond_constant_in_range(const T& c)
{
    if (c < T(0)) return false;
    if constexpr (is_exact_v<T>) {
        const Rational s = Rational(3) - 4 * c;
        return s >= 0 && s * s >= 5;
    } else {
        return c <= (3.0 - std::sqrt(5.0)) / 4.0 + 1e-15;
    }
}

/// m_D - 1/16 >= c (m_C4 - 1/8).
template <typename T>
InequalityReport check_diamond_lemma(const StepGraphon<T>& w, const T& c)
{
    if (!diamond_constant_in_range(c)) throw std::invalid_argument("check_diamond_lemma: c outside [0, (3 - sqrt 5)/4]");
    const T lhs = m(catalog::diamond(), w) - make_fraction<T>(1, 16);
    const T rhs = c * (m(catalog::cycle(4), w) - make_fraction<T>(1, 8));
    return detail::make_report("diamond", lhs, rhs, kInequalityTolerance, detail::describe(w));
}

/// sqrt(t_K12(U) t_C4(U)) >= |t_K3+(U)|; both radicand factors go to `reason`.
template <typename T>
InequalityReport check_k3plus_cs(const SignedStepGraphon<T>& u)
{
    const double cherry = to_double(t_signed(catalog::cherry(), u));
    const double c4 = to_double(t_signed(catalog::cycle(4), u));
    const double k3plus = to_double(t_signed(catalog::triangle_plus(), u));
    const double radicand = std::max(0.0, cherry * c4);
    auto r = detail::make_report("k3plus-cs", std::sqrt(radicand), std::abs(k3plus), kInequalityTolerance, "");
    r.reason = "t_K12=" + format_value(cherry) + " t_C4=" + format_value(c4);
    if (cherry < -kInequalityTolerance || c4 < -kInequalityTolerance) r.outcome = Outcome::Violated;
    return r;
}

/// h_{k,c}(x) = 16 3^(2k-2) c x^(4k) / ((2x+1)^(2k-2) (16x^2 - 1 + 2c)) for x >= 1/4.
template <typename T>
T beachball_h(int k, const T& c, const T& x)
{
    if (k < 2) throw std::invalid_argument("beachball_h: k >= 2");
    if (x < make_fraction<T>(1, 4)) throw std::invalid_argument("beachball_h: x < 1/4");
    const T pole = T(16) * x * x - T(1) + T(2) * c;
    if (pole <= T(0)) throw std::invalid_argument("beachball_h: pole");
    const unsigned e = static_cast<unsigned>(2 * k - 2);
    return T(16) * power(T(3), e) * c * power(x, static_cast<unsigned>(4 * k)) /
           (power(T(2) * x + T(1), e) * pole);
}

/// p_k(x) = 112k x^3 + (112k - 56) x^2 - (5k + 5) x - 5k.
template <typename T>
T beachball_p(int k, const T& x)
{
    const T kk(k);
    return T(112) * kk * x * x * x + (T(112) * kk - T(56)) * x * x - (T(5) * kk + T(5)) * x - T(5) * kk;
}

/// The same polynomial written around x = 1/4.
template <typename T>
T beachball_p_shifted(int k, const T& x)
{
    const T kk(k);
    const T y = x - make_fraction<T>(1, 4);
    return T(112) * kk * y * y * y + (T(196) * kk - T(56)) * y * y + (T(72) * kk - T(33)) * y +
           (T(10) * kk - T(19)) / T(4);
}

/// Coefficients (constant term first) of p_k in raw form.
inline std::vector<Rational> beachball_p_coefficients(int k)
{
    return {Rational(-5 * k), Rational(-(5 * k + 5)), Rational(112 * k - 56), Rational(112 * k)};
}

/// Coefficients of the shifted form after expanding the powers of (x - 1/4).
inline std::vector<Rational> beachball_p_shifted_coefficients(int k)
{
    const Rational a(1, 4);
    const std::vector<Rational> shifted{Rational(10 * k - 19, 4), Rational(72 * k - 33), Rational(196 * k - 56),
                                        Rational(112 * k)};
    std::vector<Rational> out(4, Rational(0));
    // (x - a)^n = sum_i C(n,i) x^i (-a)^(n-i)
    const int binomial[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    for (int n = 0; n < 4; ++n)
        for (int i = 0; i <= n; ++i)
            out[static_cast<std::size_t>(i)] +=
                shifted[static_cast<std::size_t>(n)] * binomial[n][i] * power(Rational(-a), static_cast<unsigned>(n - i));
    return out;
}

/// m(B_2k, W) >= h_{k,c}(sqrt m_D(W)).
inline InequalityReport check_beachball_bound(int k, const StepGraphon<double>& w, double c = 1.0 / 7.0)
{
    const double md = m(catalog::diamond(), w);
    const double x = std::max(0.25, std::sqrt(md));
    return detail::make_report("beachball", m(catalog::beachball(k), w), beachball_h<double>(k, c, x),
                               kInequalityTolerance, detail::describe(w));
}

/// Index of h among the ten connected bipartite graphs on at most five vertices, or -1.
inline int small_bipartite_index(const Graph& h)
{
    const auto list = catalog::small_bipartite();
    for (std::size_t i = 0; i < list.size(); ++i)
        if (is_isomorphic(h, list[i])) return static_cast<int>(i);
    return -1;
}

/// m_{h+1} >= 2^(-v) m_h.
template <typename T>
InequalityReport check_apex_lemma(const Graph& h, const StepGraphon<T>& w)
{
    if (small_bipartite_index(h) < 0)
        throw std::invalid_argument("check_apex_lemma: not one of the ten small connected bipartite graphs");
    return detail::make_report("apex", m(apex_add(h, 1), w), pow2<T>(-h.order()) * m(h, w), kInequalityTolerance,
                               detail::describe(w));
}

/// m_{h+a} >= m_{h+1}^a / m_h^(a-1), and m_{h+a} >= 2^(1 - e - a v).
template <typename T>
std::vector<InequalityReport> check_apex_chain(const Graph& h, int a, const StepGraphon<T>& w)
{
    if (small_bipartite_index(h) < 0)
        throw std::invalid_argument("check_apex_chain: not one of the ten small connected bipartite graphs");
    if (a < 1) throw std::invalid_argument("check_apex_chain: a >= 1");
    const T mh = m(h, w);
    const T top = m(apex_add(h, a), w);
    const auto witness = detail::describe(w);
    auto final_bound = detail::make_report("apex-chain-common", top, pow2<T>(1 - h.size() - a * h.order()),
                                           kInequalityTolerance, witness);
    if (mh == T(0)) return {detail::not_applicable("apex-chain", "m_h = 0"), final_bound};
    const T rhs = power(m(apex_add(h, 1), w), static_cast<unsigned>(a)) / power(mh, static_cast<unsigned>(a - 1));
    return {detail::make_report("apex-chain", top, rhs, kInequalityTolerance, witness), final_bound};
}

}  // namespace ramsey
