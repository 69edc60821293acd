#pragma once

#include "ramsey/catalog.hpp"
#include "ramsey/graphon.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ramsey {

inline constexpr std::uint64_t kSuiteSeed = 20200717;

/// Corner cases: all-0, all-1, constant 1/2, and the two 2-part block 0-1 graphons.
inline std::vector<StepGraphon<double>> corner_graphons()
{
    return {constant_graphon(0.0), constant_graphon(1.0), half_graphon<double>(),
            block_graphon<double>(catalog::complete(2)), uniform_parts<double>(2, {1.0, 0.0, 0.0, 1.0})};
}

/// `count` random step graphons with k drawn from {2, 3, 4}.
inline std::vector<StepGraphon<double>> random_graphons(std::size_t count, std::uint64_t seed = kSuiteSeed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> parts(2, 4);
    std::vector<StepGraphon<double>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_graphon(parts(rng), rng));
    return out;
}

/// The standard suite: 1000 random graphons followed by the corners.
inline std::vector<StepGraphon<double>> standard_suite(std::size_t count = 1000, std::uint64_t seed = kSuiteSeed)
{
    auto out = random_graphons(count, seed);
    for (auto& w : corner_graphons()) out.push_back(std::move(w));
    return out;
}

}  // namespace ramsey
