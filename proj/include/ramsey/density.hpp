#pragma once

#include "ramsey/combination.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graphon.hpp"
#include "ramsey/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ramsey {

/// Largest factor table the elimination evaluator will allocate.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

namespace detail {

inline std::size_t table_size(int k, std::size_t arity)
{
    std::size_t size = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (size > kMaxTableSize / static_cast<std::size_t>(k))
            throw std::invalid_argument("density: factor table exceeds the size cap");
        size *= static_cast<std::size_t>(k);
    }
    return size;
}

// Table over `scope`; scope[0] is the least significant digit in base k.
template <typename T>
struct Factor {
    std::vector<int> scope;
    std::vector<T> table;
};

// Multiplies `factors` on the sorted `target` scope. If `eliminate` >= 0 it must
// belong to `target`; it is summed out against `weights` (or with unit weight
// when `weights` is null).
template <typename T>
Factor<T> combine(const std::vector<const Factor<T>*>& factors, const std::vector<int>& target, int eliminate,
                  const std::vector<T>* weights, int k)
{
    const std::size_t arity = target.size();
    const std::size_t count = table_size(k, arity);

    std::vector<std::vector<std::size_t>> strides;
    for (const auto* f : factors) {
        std::vector<std::size_t> s(arity, 0);
        std::size_t step = 1;
        for (int v : f->scope) {
            auto pos = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), v) - target.begin());
            s[pos] = step;
            step *= static_cast<std::size_t>(k);
        }
        strides.push_back(std::move(s));
    }

    Factor<T> out;
    std::size_t elim_pos = arity;
    for (std::size_t p = 0; p < arity; ++p) {
        if (target[p] == eliminate)
            elim_pos = p;
        else
            out.scope.push_back(target[p]);
    }
    std::vector<std::size_t> out_stride(arity, 0);
    {
        std::size_t step = 1;
        for (std::size_t p = 0; p < arity; ++p) {
            if (p == elim_pos) continue;
            out_stride[p] = step;
            step *= static_cast<std::size_t>(k);
        }
    }
    out.table.assign(table_size(k, out.scope.size()), T(0));

    std::vector<int> digit(arity, 0);
    std::vector<std::size_t> index(factors.size(), 0);
    std::size_t out_index = 0;
    for (std::size_t n = 0; n < count; ++n) {
        T product(1);
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const T& x = factors[f]->table[index[f]];
            if (x == T(0)) {
                product = T(0);
                break;
            }
            product *= x;
        }
        if (product != T(0)) {
            if (elim_pos < arity && weights) product *= (*weights)[static_cast<std::size_t>(digit[elim_pos])];
            out.table[out_index] += product;
        }
        // Odometer step, keeping all indices in sync.
        for (std::size_t p = 0; p < arity; ++p) {
            if (++digit[p] < k) {
                for (std::size_t f = 0; f < factors.size(); ++f) index[f] += strides[f][p];
                out_index += out_stride[p];
                break;
            }
            digit[p] = 0;
            for (std::size_t f = 0; f < factors.size(); ++f) index[f] -= strides[f][p] * static_cast<std::size_t>(k - 1);
            out_index -= out_stride[p] * static_cast<std::size_t>(k - 1);
        }
    }
    return out;
}

// Sum over assignments of every vertex outside `keep`, by variable elimination
// in min-degree order. The result is a table over `keep` (sorted). The edge
// {skip_u, skip_v} and the weights of vertices in `skip_weight` are left out.
template <typename T, bool S>
std::vector<T> contract(const Graph& h, const BasicStepGraphon<T, S>& w, const std::vector<int>& keep, int skip_u = -1,
                        int skip_v = -1, std::uint32_t skip_weight = 0)
{
    const int n = h.order();
    const int k = w.parts();
    std::vector<Factor<T>> store;
    store.reserve(static_cast<std::size_t>(3 * n + h.size() + 1));
    std::vector<std::size_t> live;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : h.edges()) {
        if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
        Factor<T> f{{u, v}, {}};
        f.table.resize(static_cast<std::size_t>(k * k));
        for (int b = 0; b < k; ++b)
            for (int a = 0; a < k; ++a) f.table[static_cast<std::size_t>(a + k * b)] = w.value(a, b);
        store.push_back(std::move(f));
        live.push_back(store.size() - 1);
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }

    std::uint32_t kept = 0;
    for (int v : keep) kept |= 1u << v;
    for (int v : keep)
        if (!((skip_weight >> v) & 1u)) {
            store.push_back(Factor<T>{{v}, w.weights()});
            live.push_back(store.size() - 1);
        }

    std::uint32_t alive = n ? ((1u << n) - 1u) & ~kept : 0u;
    while (alive) {
        int best = -1, best_degree = 1 << 30;
        for (std::uint32_t rest = alive; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(adj[static_cast<std::size_t>(v)]);
            if (d < best_degree) {
                best_degree = d;
                best = v;
            }
        }
        std::vector<const Factor<T>*> touching;
        std::vector<std::size_t> remaining;
        for (std::size_t idx : live) {
            const auto& scope = store[idx].scope;
            if (std::find(scope.begin(), scope.end(), best) != scope.end())
                touching.push_back(&store[idx]);
            else
                remaining.push_back(idx);
        }
        std::vector<int> target;
        for (std::uint32_t rest = adj[static_cast<std::size_t>(best)] | (1u << best); rest; rest &= rest - 1)
            target.push_back(std::countr_zero(rest));
        const bool weighted = !((skip_weight >> best) & 1u);
        Factor<T> next = combine<T>(touching, target, best, weighted ? &w.weights() : nullptr, k);

        const std::uint32_t nb = adj[static_cast<std::size_t>(best)];
        for (std::uint32_t rest = nb; rest; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            adj[static_cast<std::size_t>(u)] |= nb & ~(1u << u);
            adj[static_cast<std::size_t>(u)] &= ~(1u << best);
        }
        adj[static_cast<std::size_t>(best)] = 0;
        alive &= ~(1u << best);

        store.push_back(std::move(next));
        remaining.push_back(store.size() - 1);
        live = std::move(remaining);
    }

    std::vector<const Factor<T>*> rest;
    for (std::size_t idx : live) rest.push_back(&store[idx]);
    std::vector<int> target(keep);
    std::sort(target.begin(), target.end());
    return combine<T>(rest, target, -1, nullptr, k).table;
}

// Lexicographic sum over all k^n assignments; pattern(u, v) for u < v is
// 0 (no factor), 1 (W) or 2 (1 - W).
template <typename T, bool S, typename Pattern>
T brute_force(int n, const BasicStepGraphon<T, S>& w, Pattern pattern)
{
    if (n == 0) return T(1);
    const int k = w.parts();
    table_size(k, static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, int>>> earlier(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (int p = pattern(u, v)) earlier[static_cast<std::size_t>(v)].emplace_back(u, p);

    std::vector<int> x(static_cast<std::size_t>(n), 0);
    std::vector<T> partial(static_cast<std::size_t>(n + 1), T(1));
    T total(0);
    int depth = 0;
    x[0] = -1;
    while (depth >= 0) {
        auto d = static_cast<std::size_t>(depth);
        if (++x[d] == k) {
            --depth;
            continue;
        }
        T value = partial[d] * w.weight(x[d]);
        for (auto [u, p] : earlier[d]) {
            const T& entry = w.value(x[static_cast<std::size_t>(u)], x[d]);
            value *= p == 1 ? entry : T(1) - entry;
            if (value == T(0)) break;
        }
        if (value == T(0)) continue;
        if (depth + 1 == n) {
            total += value;
        } else {
            partial[d + 1] = value;
            ++depth;
            x[static_cast<std::size_t>(depth)] = -1;
        }
    }
    return total;
}

}  // namespace detail

/// Homomorphism density by direct summation over all k^v(h) assignments.
template <typename T, bool S>
T t_hom_brute(const Graph& h, const BasicStepGraphon<T, S>& w)
{
    return detail::brute_force(h.order(), w, [&](int u, int v) { return h.adjacent(u, v) ? 1 : 0; });
}

/// Homomorphism density by dynamic programming along an elimination tree
/// decomposition; cost k^(width+1) per bag.
template <typename T, bool S>
T t_hom_dp(const Graph& h, const BasicStepGraphon<T, S>& w)
{
    return detail::contract(h, w, {}).front();
}

/// Exact t_H(W). Uses the decomposition evaluator when the elimination width is
/// at most 3 or when it is cheaper than brute force.
template <typename T, bool S>
T t_hom(const Graph& h, const BasicStepGraphon<T, S>& w)
{
    if (h.order() <= 2) return t_hom_brute(h, w);
    const int width = elimination_decomposition(h).width();
    if (width <= 3 || width + 2 < h.order()) return t_hom_dp(h, w);
    return t_hom_brute(h, w);
}

/// t_F(U) for a signed graphon; the zero-vertex graph gives 1.
template <typename T>
T t_signed(const Graph& f, const SignedStepGraphon<T>& u)
{
    return t_hom(f, u);
}

/// Induced density: W on edges and 1 - W on non-edges of the labelled pattern.
template <typename T>
T t_induced(const Graph& h, const StepGraphon<T>& w)
{
    return detail::brute_force(h.order(), w, [&](int u, int v) { return h.adjacent(u, v) ? 1 : 2; });
}

/// m_H(W) = t_H(W) + t_H(1 - W).
template <typename T>
T m(const Graph& h, const StepGraphon<T>& w)
{
    return t_hom(h, w) + t_hom(h, one_minus(w));
}

/// 2^(1 - e) * sum over even edge subsets F of t_F(2W - 1).
template <typename T>
T expansion_value(const Graph& h, const StepGraphon<T>& w)
{
    const auto expansion = even_expansion(h);
    const auto u = to_signed(w);
    T total(0);
    for (const auto& [f, c] : expansion.terms()) total += from_rational<T>(c) * t_signed(f, u);
    return pow2<T>(1 - h.size()) * total;
}

template <typename T>
T symmetrized_induced(const Graph& h, const StepGraphon<T>& w)
{
    return t_induced(h, w) + t_induced(complement(h), w);
}

/// Partial sum with x_u = i, x_v = j pinned and the edge uv left out, as a
/// k x k table indexed [i + k j]. Part weights of u and v are included.
template <typename T, bool S>
std::vector<T> pinned_edge_table(const Graph& h, const BasicStepGraphon<T, S>& w, int u, int v)
{
    auto table = detail::contract(h, w, {u, v}, u, v);
    if (u < v) return table;
    // contract orders the table by vertex index; transpose to put u first.
    const int k = w.parts();
    std::vector<T> out(table.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(i + k * j)] = table[static_cast<std::size_t>(j + k * i)];
    return out;
}

/// Partial sum with x_v = i pinned and the weight of v left out.
template <typename T, bool S>
std::vector<T> pinned_vertex_table(const Graph& h, const BasicStepGraphon<T, S>& w, int v)
{
    return detail::contract(h, w, {v}, -1, -1, 1u << v);
}

}  // namespace ramsey
