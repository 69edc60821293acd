#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

/// Symmetric step function on [0,1]^2: part i has mass weights[i], and the
/// value on part i x part j is value(i, j). Entries lie in [0,1], or in
/// [-1,1] for the signed variant.
template <typename T, bool Signed = false>
class BasicStepGraphon {
public:
    using scalar_type = T;
    static constexpr bool is_signed = Signed;

    BasicStepGraphon() = default;

    /// `values` is row-major k x k.
    BasicStepGraphon(std::vector<T> weights, std::vector<T> values)
        : k_(static_cast<int>(weights.size())), weights_(std::move(weights)), values_(std::move(values))
    {
        validate();
    }

    int parts() const { return k_; }
    const T& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    const T& value(int i, int j) const { return values_[static_cast<std::size_t>(i * k_ + j)]; }
    const std::vector<T>& weights() const { return weights_; }
    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const BasicStepGraphon&, const BasicStepGraphon&) = default;

private:
    void validate() const
    {
        if (k_ < 1) throw std::invalid_argument("step graphon needs at least one part");
        if (values_.size() != static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_))
            throw std::invalid_argument("step graphon value matrix must be k x k");
        T total(0);
        for (const T& w : weights_) {
            if (w < T(0)) throw std::invalid_argument("negative part weight");
            total += w;
        }
        if constexpr (is_exact_v<T>) {
            if (total != T(1)) throw std::invalid_argument("part weights must sum to 1");
        } else {
            if (abs_value(total - T(1)) > 1e-12) throw std::invalid_argument("part weights must sum to 1");
        }
        const T low = Signed ? T(-1) : T(0);
        for (int i = 0; i < k_; ++i) {
            for (int j = 0; j < k_; ++j) {
                if (value(i, j) != value(j, i)) throw std::invalid_argument("step graphon matrix is not symmetric");
                if (value(i, j) < low || value(i, j) > T(1))
                    throw std::invalid_argument(Signed ? "signed graphon entry outside [-1,1]"
                                                       : "graphon entry outside [0,1]");
            }
        }
    }

    int k_ = 0;
    std::vector<T> weights_;
    std::vector<T> values_;
};

template <typename T>
using StepGraphon = BasicStepGraphon<T, false>;

template <typename T>
using SignedStepGraphon = BasicStepGraphon<T, true>;

template <typename T>
StepGraphon<T> constant_graphon(const T& p)
{
    return StepGraphon<T>({T(1)}, {p});
}

template <typename T>
StepGraphon<T> half_graphon()
{
    return constant_graphon<T>(make_fraction<T>(1, 2));
}

/// k equal parts with the given row-major values.
template <typename T>
StepGraphon<T> uniform_parts(int k, std::vector<T> values)
{
    std::vector<T> weights(static_cast<std::size_t>(k), T(1) / T(k));
    if constexpr (!is_exact_v<T>) {
        // Keep the exact-sum invariant when 1/k is not representable.
        T rest(1);
        for (int i = 0; i + 1 < k; ++i) rest -= weights[static_cast<std::size_t>(i)];
        weights.back() = rest;
    }
    return StepGraphon<T>(std::move(weights), std::move(values));
}

/// W_G: the block 0-1 graphon of g with equal parts.
template <typename T>
StepGraphon<T> block_graphon(const Graph& g)
{
    const int n = g.order();
    std::vector<T> values(static_cast<std::size_t>(n * n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) values[static_cast<std::size_t>(u * n + v)] = g.adjacent(u, v) ? T(1) : T(0);
    return uniform_parts<T>(n, std::move(values));
}

template <typename T>
StepGraphon<T> one_minus(const StepGraphon<T>& w)
{
    std::vector<T> values(w.values());
    for (T& x : values) x = T(1) - x;
    return StepGraphon<T>(w.weights(), std::move(values));
}

/// U = 2W - 1.
template <typename T>
SignedStepGraphon<T> to_signed(const StepGraphon<T>& w)
{
    std::vector<T> values(w.values());
    for (T& x : values) x = T(2) * x - T(1);
    return SignedStepGraphon<T>(w.weights(), std::move(values));
}

template <typename To, typename From, bool Signed>
BasicStepGraphon<To, Signed> convert(const BasicStepGraphon<From, Signed>& w)
{
    auto cast = [](const From& x) {
        if constexpr (std::is_same_v<To, From>) {
            return x;
        } else if constexpr (is_exact_v<From>) {
            return static_cast<To>(to_double(x));
        } else {
            return To(x);
        }
    };
    std::vector<To> weights, values;
    for (const auto& x : w.weights()) weights.push_back(cast(x));
    for (const auto& x : w.values()) values.push_back(cast(x));
    if constexpr (!is_exact_v<To>) {
        To rest(1);
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) rest -= weights[i];
        weights.back() = rest;
    }
    return BasicStepGraphon<To, Signed>(std::move(weights), std::move(values));
}

/// Random graphon with k parts: entries i.i.d. uniform in [0,1]; when
/// `random_weights` is set the part masses are normalised uniforms.
template <typename Rng>
StepGraphon<double> random_graphon(int k, Rng& rng, bool random_weights = true)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> weights(static_cast<std::size_t>(k), 1.0 / k);
    if (random_weights) {
        double total = 0;
        for (double& w : weights) total += (w = 0.05 + unit(rng));
        for (double& w : weights) w /= total;
    }
    double rest = 1.0;
    for (int i = 0; i + 1 < k; ++i) rest -= weights[static_cast<std::size_t>(i)];
    weights.back() = rest;
    std::vector<double> values(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            values[static_cast<std::size_t>(i * k + j)] = values[static_cast<std::size_t>(j * k + i)] = unit(rng);
    return StepGraphon<double>(std::move(weights), std::move(values));
}

/// Random graphon with rational entries p/denominator (exact-mode tests).
template <typename Rng>
StepGraphon<Rational> random_rational_graphon(int k, Rng& rng, int denominator = 16)
{
    std::uniform_int_distribution<int> entry(0, denominator);
    std::uniform_int_distribution<int> mass(1, denominator);
    std::vector<Rational> weights(static_cast<std::size_t>(k));
    Rational total = 0;
    for (auto& w : weights) total += (w = mass(rng));
    for (auto& w : weights) w /= total;
    std::vector<Rational> values(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            values[static_cast<std::size_t>(i * k + j)] = values[static_cast<std::size_t>(j * k + i)] =
                Rational(entry(rng), denominator);
    return StepGraphon<Rational>(std::move(weights), std::move(values));
}

template <typename T>
T parse_scalar(const std::string& token)
{
    if constexpr (is_exact_v<T>) {
        return parse_rational(token);
    } else {
        if (token.find('/') != std::string::npos) return to_double(parse_rational(token));
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number: '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("not a number: '" + token + "'");
        return x;
    }
}

/// Text format: k, then k weights, then k rows of k entries. Decimals and
/// "p/q" fractions are both accepted.
template <typename T, bool Signed = false>
BasicStepGraphon<T, Signed> read_graphon(std::istream& in)
{
    int k = 0;
    if (!(in >> k) || k < 1) throw std::invalid_argument("graphon: missing or invalid part count");
    auto next = [&] {
        std::string token;
        if (!(in >> token)) throw std::invalid_argument("graphon: truncated input");
        return parse_scalar<T>(token);
    };
    std::vector<T> weights, values;
    for (int i = 0; i < k; ++i) weights.push_back(next());
    for (int i = 0; i < k * k; ++i) values.push_back(next());
    std::string extra;
    if (in >> extra) throw std::invalid_argument("graphon: trailing data '" + extra + "'");
    return BasicStepGraphon<T, Signed>(std::move(weights), std::move(values));
}

template <typename T, bool Signed = false>
BasicStepGraphon<T, Signed> parse_graphon(const std::string& text)
{
    std::istringstream in(text);
    return read_graphon<T, Signed>(in);
}

template <typename T, bool Signed>
void write_graphon(std::ostream& out, const BasicStepGraphon<T, Signed>& w)
{
    const int k = w.parts();
    out << k << '\n';
    for (int i = 0; i < k; ++i) out << (i ? " " : "") << format_value(w.weight(i));
    out << '\n';
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out << (j ? " " : "") << format_value(w.value(i, j));
        out << '\n';
    }
}

}  // namespace ramsey
