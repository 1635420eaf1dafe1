#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fxx/contracts.hpp"

namespace fxx {

struct McConfig {
    std::uint64_t n_paths = 100000;
    int n_steps = 252;
    std::uint64_t seed = 42;
    bool bridge_correction = true;
    int threads = 0;  // 0 lets OpenMP decide; results never depend on this
};

void validate(const McConfig& cfg);

struct McEstimate {
    double price = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n_paths)
};

/// Simulates exact log-normal steps under the risk-neutral drift rd - rf and
/// monitors every barrier of the contract. With bridge_correction, a step
/// that stays on the safe side of a barrier still counts as a touch with
/// probability exp(-2 ln(S_i/B) ln(S_{i+1}/B) / (sigma^2 dt)), decided by a
/// uniform draw shared by all barriers on the same side.
///
/// Paths are generated from a counter-based generator keyed by
/// (seed, path, step), and statistics are accumulated in fixed blocks of
/// paths merged in order, so the estimate is bit-identical for any thread
/// count.
McEstimate mc_price(const MarketEnvironment& env, const Contract& contract, const McConfig& cfg);

/// Several contracts on one shared set of paths.
std::vector<McEstimate> mc_price_many(const MarketEnvironment& env,
                                      std::span<const Contract> contracts, const McConfig& cfg);

/// Single-threaded reference for mc_price_many (same kernel, same blocks).
std::vector<McEstimate> mc_price_many_serial(const MarketEnvironment& env,
                                             std::span<const Contract> contracts,
                                             const McConfig& cfg);

/// Estimate of sum_i weights[i] * payoff_i evaluated path by path.
McEstimate mc_price_combination(const MarketEnvironment& env, std::span<const Contract> contracts,
                                std::span<const double> weights, const McConfig& cfg);

/// Estimate of e^{-(rd - rf) T} S_T / S_0, which is 1 for an unbiased
/// simulator.
McEstimate mc_forward_ratio(const MarketEnvironment& env, const McConfig& cfg);

/// Discounted payoffs of paths [first_path, first_path + count), row-major
/// with one row per path and one column per contract.
std::vector<double> mc_path_payoffs(const MarketEnvironment& env,
                                    std::span<const Contract> contracts, const McConfig& cfg,
                                    std::uint64_t first_path, std::uint64_t count);

namespace detail {

/// Counter-based generator: a SplitMix64 finalizer applied to
/// key + counter * golden_gamma. Exposed for tests.
std::uint64_t mc_hash(std::uint64_t key, std::uint64_t counter);

/// Uniform in (0, 1) from the top 52 bits, offset by half a step so it
/// never returns 0 or 1.
double mc_uniform(std::uint64_t bits);

}  // namespace detail

}  // namespace fxx
