#pragma once

#include "ramsey/density.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graphon.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace ramsey {

enum class Verdict { AtTarget, AboveTarget, BelowTarget };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::AtTarget: return "at-target";
    case Verdict::AboveTarget: return "above-target";
    default: return "below-target";
    }
}

struct MinimizeConfig {
    int parts = 3;
    int restarts = 32;
    int max_iterations = 3000;
    double initial_step = 0.5;  // grows x2 after an accepted step, halves on rejection
    double min_step = 1e-14;
    double stop_improvement = 1e-16;
    double target_tolerance = 1e-5;
    std::uint64_t seed = kSuiteSeed;
    bool optimize_weights = false;
    int threads = 1;
};

struct MinimizeResult {
    StepGraphon<double> best;
    double value = 0;
    double target = 0;  // 2^(1 - e)
    Verdict verdict = Verdict::AtTarget;
    int trace_length = 0;  // accepted steps of the winning restart
    int best_restart = 0;
};

/// Partial derivatives of m_H in the matrix entries; entry (i, j) = (j, i) is
/// the derivative in the single variable shared by both positions.
template <typename T>
std::vector<T> gradient_m(const Graph& h, const StepGraphon<T>& w)
{
    const int k = w.parts();
    std::vector<T> grad(static_cast<std::size_t>(k * k), T(0));
    const auto flipped = one_minus(w);
    for (auto [u, v] : h.edges()) {
        const auto a = pinned_edge_table(h, w, u, v);
        const auto b = pinned_edge_table(h, flipped, u, v);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                const auto idx = static_cast<std::size_t>(i + k * j);
                const T d = a[idx] - b[idx];
                grad[static_cast<std::size_t>(i * k + j)] += d;
                if (i != j) grad[static_cast<std::size_t>(j * k + i)] += d;
            }
    }
    return grad;
}

/// Partial derivatives of m_H in the part weights (weights treated as free).
template <typename T>
std::vector<T> weight_gradient_m(const Graph& h, const StepGraphon<T>& w)
{
    const int k = w.parts();
    std::vector<T> grad(static_cast<std::size_t>(k), T(0));
    const auto flipped = one_minus(w);
    for (int v = 0; v < h.order(); ++v) {
        const auto a = pinned_vertex_table(h, w, v);
        const auto b = pinned_vertex_table(h, flipped, v);
        for (int i = 0; i < k; ++i) grad[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    }
    return grad;
}

namespace detail {

// Euclidean projection onto the probability simplex.
inline std::vector<double> project_simplex(std::vector<double> x)
{
    std::vector<double> s(x);
    std::sort(s.begin(), s.end(), std::greater<>());
    double cumulative = 0, theta = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        cumulative += s[i];
        const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (s[i] - t > 0) theta = t;
    }
    for (double& v : x) v = std::max(0.0, v - theta);
    double rest = 1.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > x[last]) last = i;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i != last) rest -= x[i];
    x[last] = std::max(0.0, rest);
    return x;
}

inline StepGraphon<double> starting_point(int restart, int k, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(static_cast<std::size_t>(k * k), 0.5);
    auto set = [&](int i, int j, double x) {
        values[static_cast<std::size_t>(i * k + j)] = values[static_cast<std::size_t>(j * k + i)] = x;
    };
    if (restart > 0) {
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                switch (restart % 4) {
                case 1: set(i, j, std::clamp(0.5 + 0.25 * (unit(rng) - 0.5), 0.0, 1.0)); break;
                case 2: set(i, j, unit(rng) < 0.5 ? 0.0 : 1.0); break;
                default: set(i, j, unit(rng)); break;
                }
            }
    }
    return uniform_parts<double>(k, std::move(values));
}

struct RestartOutcome {
    StepGraphon<double> w;
    double value = std::numeric_limits<double>::infinity();
    int steps = 0;
};

inline RestartOutcome descend(const Graph& h, StepGraphon<double> w, const MinimizeConfig& cfg)
{
    const int k = w.parts();
    double value = m(h, w);
    double step = cfg.initial_step;
    int steps = 0;
    for (int it = 0; it < cfg.max_iterations; ++it) {
        const auto grad = gradient_m(h, w);
        const auto wgrad = cfg.optimize_weights ? weight_gradient_m(h, w) : std::vector<double>{};
        bool accepted = false;
        while (step >= cfg.min_step) {
            std::vector<double> values(w.values());
            for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::clamp(values[i] - step * grad[i], 0.0, 1.0);
            // Keep exact symmetry after rounding.
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) values[static_cast<std::size_t>(j * k + i)] = values[static_cast<std::size_t>(i * k + j)];
            std::vector<double> weights(w.weights());
            if (cfg.optimize_weights) {
                for (std::size_t i = 0; i < weights.size(); ++i) weights[i] -= step * wgrad[i];
                weights = project_simplex(std::move(weights));
            }
            // Armijo condition along the projected direction; each symmetric
            // pair is one variable.
            double decrease = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j) {
                    const auto idx = static_cast<std::size_t>(i * k + j);
                    decrease += grad[idx] * (w.values()[idx] - values[idx]);
                }
            if (cfg.optimize_weights)
                for (std::size_t i = 0; i < weights.size(); ++i) decrease += wgrad[i] * (w.weights()[i] - weights[i]);
            if (decrease <= 0) break;
            StepGraphon<double> next(std::move(weights), std::move(values));
            const double next_value = m(h, next);
            if (next_value <= value - 1e-4 * decrease) {
                const double improvement = value - next_value;
                w = std::move(next);
                value = next_value;
                step = std::min(step * 2, 64.0);
                ++steps;
                accepted = improvement > cfg.stop_improvement;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
    }
    return {std::move(w), value, steps};
}

}  // namespace detail

/// Multistart projected gradient descent for min m_H over k-part step graphons.
/// Restart 0 starts at the constant 1/2, so the result never exceeds 2^(1-e).
inline MinimizeResult minimize_m(const Graph& h, const MinimizeConfig& cfg)
{
    if (cfg.parts < 1) throw std::invalid_argument("minimize: parts must be at least 1");
    if (cfg.restarts < 1) throw std::invalid_argument("minimize: restarts must be at least 1");
    std::vector<detail::RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next++; r < cfg.restarts; r = next++) {
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            outcomes[static_cast<std::size_t>(r)] = detail::descend(h, detail::starting_point(r, cfg.parts, rng), cfg);
        }
    };
    const int threads = std::clamp(cfg.threads, 1, cfg.restarts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r)
        if (outcomes[r].value < outcomes[best].value) best = r;
    MinimizeResult out;
    out.best = outcomes[best].w;
    out.value = outcomes[best].value;
    out.target = std::ldexp(1.0, 1 - h.size());
    out.trace_length = outcomes[best].steps;
    out.best_restart = static_cast<int>(best);
    if (out.value < out.target - cfg.target_tolerance)
        out.verdict = Verdict::BelowTarget;
    else if (out.value > out.target + cfg.target_tolerance)
        out.verdict = Verdict::AboveTarget;
    else
        out.verdict = Verdict::AtTarget;
    return out;
}

// ---------------------------------------------------------------------------
// Finite Ramsey multiplicity

inline constexpr int kMaxRamseyOrder = 8;

/// Number of injective maps V(h) -> V(g) sending edges to edges.
inline long count_injective_copies(const Graph& h, const Graph& g)
{
    const int v = h.order(), n = g.order();
    if (v > n) return 0;
    std::vector<int> image(static_cast<std::size_t>(v), -1);
    long total = 0;
    std::uint32_t used = 0;
    auto extend = [&](auto&& self, int x) -> void {
        if (x == v) {
            ++total;
            return;
        }
        for (int y = 0; y < n; ++y) {
            if ((used >> y) & 1u) continue;
            bool fits = true;
            for (int z = 0; z < x && fits; ++z)
                if (h.adjacent(x, z) && !g.adjacent(y, image[static_cast<std::size_t>(z)])) fits = false;
            if (!fits) continue;
            image[static_cast<std::size_t>(x)] = y;
            used |= 1u << y;
            self(self, x + 1);
            used &= ~(1u << y);
        }
    };
    extend(extend, 0);
    return total;
}

/// Graphs on n vertices up to isomorphism, grown one vertex at a time.
inline std::vector<Graph> graphs_up_to_isomorphism(int n)
{
    std::vector<Graph> level{Graph(0)};
    for (int order = 1; order <= n; ++order) {
        std::unordered_set<Graph, GraphHash> seen;
        std::vector<Graph> next;
        for (const auto& g : level) {
            for (std::uint32_t nb = 0; nb < (1u << (order - 1)); ++nb) {
                Graph bigger(order);
                for (auto [a, b] : g.edges()) bigger.add_edge(a, b);
                for (int u = 0; u < order - 1; ++u)
                    if ((nb >> u) & 1u) bigger.add_edge(u, order - 1);
                Graph c = canonical_form(bigger);
                if (seen.insert(c).second) next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    return level;
}

/// M(H; n): least number of monochromatic labelled (injective) copies of h over
/// all 2-edge-colourings of K_n. Colourings are enumerated up to isomorphism of
/// the red graph.
inline long exact_ramsey_multiplicity(const Graph& h, int n, int threads = 1)
{
    if (n < 0 || n > kMaxRamseyOrder) throw std::invalid_argument("ramsey: n must be at most " + std::to_string(kMaxRamseyOrder));
    const auto graphs = graphs_up_to_isomorphism(n);
    std::vector<long> best(static_cast<std::size_t>(std::max(threads, 1)), std::numeric_limits<long>::max());
    std::atomic<std::size_t> next{0};
    auto worker = [&](std::size_t slot) {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            const long count = count_injective_copies(h, graphs[i]) + count_injective_copies(h, complement(graphs[i]));
            best[slot] = std::min(best[slot], count);
        }
    };
    if (best.size() == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < best.size(); ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }
    return *std::min_element(best.begin(), best.end());
}

/// M(H; n) / (n (n-1) ... (n-v+1)); a finite-n proxy for C(H), not its limit.
inline Rational estimate_ramsey_constant(const Graph& h, int n, int threads = 1)
{
    const long count = exact_ramsey_multiplicity(h, n, threads);
    Integer falling = 1;
    for (int i = 0; i < h.order(); ++i) falling *= n - i;
    if (falling == 0) throw std::invalid_argument("ramsey: n is smaller than the graph");
    return Rational(Integer(count), falling);
}

/// Homomorphisms into the colouring with red graph g: h into g plus h into the
/// blue graph with a loop at every vertex (maps may merge vertices).
inline long monochromatic_hom_count(const Graph& h, const Graph& g)
{
    const int v = h.order(), n = g.order();
    long total = 0;
    for (int colour = 0; colour < 2; ++colour) {
        std::vector<int> image(static_cast<std::size_t>(v), 0);
        auto extend = [&](auto&& self, int x) -> void {
            if (x == v) {
                ++total;
                return;
            }
            for (int y = 0; y < n; ++y) {
                bool fits = true;
                for (int z = 0; z < x && fits; ++z) {
                    if (!h.adjacent(x, z)) continue;
                    const int t = image[static_cast<std::size_t>(z)];
                    fits = colour == 0 ? g.adjacent(y, t) : (y == t || !g.adjacent(y, t));
                }
                if (!fits) continue;
                image[static_cast<std::size_t>(x)] = y;
                self(self, x + 1);
            }
        };
        extend(extend, 0);
    }
    return total;
}

}  // namespace ramsey
