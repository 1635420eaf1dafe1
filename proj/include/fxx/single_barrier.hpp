#pragma once

#include <array>
#include <span>
#include <vector>

#include "fxx/contracts.hpp"

namespace fxx {

// Values of the four building blocks of the single-barrier closed forms.
struct AbcdValues {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double alpha = 0.0;  // (rd - rf - sigma^2/2) / sigma^2
    double x1 = 0.0;
    double x2 = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
};

/// Raw kernel: no barrier-breach check, so B = S is allowed. Requires a
/// valid environment and K, B > 0. Throws OverflowError when a (B/S) power
/// makes a value non-finite.
AbcdValues abcd(const MarketEnvironment& env, OptionDirection direction, BarrierSide side,
                double strike, double barrier);

/// Delta/Vega/Vanna/Volga of A, B, C and D (in that order); value fields
/// carry the parameter values.
std::array<GreekSet, 4> greeks_abcd(const MarketEnvironment& env, OptionDirection direction,
                                    BarrierSide side, double strike, double barrier);

/// Applies a row recipe to the parameter values.
double apply_recipe(const Recipe& recipe, const AbcdValues& v);

/// Price of any of the sixteen single-barrier variants. Results within
/// 1e-10 below zero are clamped to 0; anything lower throws NumericalError.
double price_single_barrier(const MarketEnvironment& env, const SingleBarrierSpec& spec);

/// Greeks as the row recipe applied to greeks_abcd. Rejects K = B
/// (classification boundary) with DomainError.
GreekSet greeks_single_barrier(const MarketEnvironment& env, const SingleBarrierSpec& spec);

struct SingleBarrierJob {
    MarketEnvironment env;
    SingleBarrierSpec spec;
};

/// Prices independent jobs in parallel with OpenMP. If any job throws, the
/// exception of the lowest failing index is rethrown after the loop.
std::vector<double> price_single_barrier_batch(std::span<const SingleBarrierJob> jobs);

/// Serial reference for price_single_barrier_batch; identical results.
std::vector<double> price_single_barrier_batch_serial(std::span<const SingleBarrierJob> jobs);

}  // namespace fxx
