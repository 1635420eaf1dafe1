#pragma once

#include <array>
#include <span>
#include <vector>

#include "fxx/contracts.hpp"
#include "fxx/double_barrier.hpp"

namespace fxx {

enum class QuoteConvention { SmileStrangle };

// ATM volatility plus 25-delta risk reversal and butterfly. The smile vols
// at the 25-delta strikes are sigma_atm + bf25 +- rr25/2 (call +, put -).
struct PivotQuotes {
    double sigma_atm = 0.0;
    double rr25 = 0.0;
    double bf25 = 0.0;
    QuoteConvention convention = QuoteConvention::SmileStrangle;

    double sigma_call25() const { return sigma_atm + bf25 + 0.5 * rr25; }
    double sigma_put25() const { return sigma_atm + bf25 - 0.5 * rr25; }
};

void validate(const PivotQuotes& quotes);

/// Delta-neutral straddle strike S exp((rd - rf + sigma^2/2) T), using
/// env.sigma as the ATM volatility.
double atm_strike(const MarketEnvironment& env);

/// Strike whose unadjusted spot delta under env.sigma equals target_delta.
/// Requires 0 < |target_delta| < e^{-rf T} with the sign of the direction.
double solve_delta_strike(const MarketEnvironment& env, double target_delta, OptionDirection direction);

struct Pivot {
    double strike = 0.0;
    double bs_vol = 0.0;
    double market_vol = 0.0;
    OptionDirection direction = OptionDirection::Call;
};

// Pivots in increasing strike order: 25-delta put strike, ATM, 25-delta call
// strike. Each is represented by the call at that strike; vega, vanna and
// volga of a put equal those of the call with the same strike.
struct PivotSet {
    std::array<Pivot, 3> pivots;
};

/// Pivots for the environment (whose sigma is replaced by quotes.sigma_atm).
PivotSet make_pivot_set(const MarketEnvironment& env, const PivotQuotes& quotes);

enum class PivotBasis {
    Strikes,    // the three calls at K_p, K_ATM, K_c
    Structures  // ATM (half straddle), 25-delta risk reversal, 25-delta butterfly
};

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;  // row-major

struct PivotSystem {
    PivotBasis basis = PivotBasis::Strikes;
    Mat3 V{};                // rows vega, vanna, volga; one column per instrument
    Vec3 market_minus_bs{};  // market price minus BS price of each instrument
    double condition = 0.0;  // ||V||_1 ||V^-1||_1
    Mat3 lu{};               // packed LU factors with partial pivoting
    std::array<int, 3> perm{};
};

/// Builds V at sigma_atm and factorizes it. Throws IllConditionedError when
/// V is singular or its condition estimate exceeds 1e12.
PivotSystem build_pivot_system(const MarketEnvironment& env, const PivotSet& pivots,
                               PivotBasis basis = PivotBasis::Strikes);

/// Solves V x = (vega, vanna, volga) of the target, with one step of
/// iterative refinement.
Vec3 vv_weights(const GreekSet& target, const PivotSystem& system);

struct VvResult {
    double bs_price = 0.0;
    Vec3 weights{};           // x1, x2, x3 on the ATM, RR, BF structures
    double adjustment = 0.0;  // x2 (RR_mkt - RR_bs) + x3 (BF_mkt - BF_bs)
    double vv_price = 0.0;
    double condition = 0.0;
    double rr_gap = 0.0;
    double bf_gap = 0.0;
    Vec3 strike_weights{};          // weights on the three pivot calls
    double three_term_adjustment = 0.0;  // sum_i y_i (C_i_mkt - C_i_bs)
    PivotSet pivots;
};

struct Position {
    double quantity = 1.0;
    Contract contract;
};

/// Vanna-Volga price. The contract is priced and its Greeks are taken at
/// quotes.sigma_atm, whatever env.sigma says.
VvResult vv_price(const MarketEnvironment& env, const Contract& contract, const PivotQuotes& quotes,
                  const SeriesConfig& cfg = {});

/// Vanna-Volga price of a static portfolio (Greeks and BS prices summed).
VvResult vv_price_portfolio(const MarketEnvironment& env, std::span<const Position> portfolio,
                            const PivotQuotes& quotes, const SeriesConfig& cfg = {});

}  // namespace fxx
