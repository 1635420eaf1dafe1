#pragma once

#include <string>

#include "fxx/contracts.hpp"

namespace fxx {

struct SeriesConfig {
    int n_max = 5;           // terms n = -n_max..n_max
    double tail_tol = 1e-12; // warn when an |n| = n_max term reaches this size
};

void validate(const SeriesConfig& cfg);

struct SeriesQuote {
    double price = 0.0;
    double tail = 0.0;              // largest |term| at n = +-n_max
    bool truncation_warning = false; // tail >= tail_tol
};

/// Double knock-out via the flat-boundary Ikeda-Kunitomo series. Requires
/// knock = Out and L < K < U with L < S < U.
SeriesQuote koko_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                       const SeriesConfig& cfg = {});
double koko_price(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                  const SeriesConfig& cfg = {});

/// Double knock-in as vanilla minus the matching double knock-out.
SeriesQuote kiki_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                       const SeriesConfig& cfg = {});
double kiki_price(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                  const SeriesConfig& cfg = {});

/// Dispatches on spec.knock.
SeriesQuote double_barrier_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                                 const SeriesConfig& cfg = {});

/// Survival-weighted payoff over any corridor L < S < U without the
/// L < K < U restriction: the strike may sit outside the corridor, in which
/// case the payoff is integrated over the part of (L, U) where it is positive.
SeriesQuote koko_quote_any_strike(const MarketEnvironment& env, OptionDirection direction,
                                  double strike, double lower, double upper,
                                  const SeriesConfig& cfg = {});

struct KikoQuote {
    double price = 0.0;
    int row = 0;              // 1..12, row of the KIKO replication table
    std::string inequality;   // e.g. "B_I < K <= B_O"
    std::string replication;  // portfolio actually priced
    bool truncation_warning = false;
};

/// KIKO price by static replication. The table row is found from the
/// direction and the ordering of K, B_I, B_O; the portfolio priced follows
/// from the barrier layout:
///   opposite sides              KO(B_O) - KOKO(lower, upper)
///   same side, B_I nearer spot  KI(B_I) - KI(B_O)
///   same side, B_O nearer spot  0
/// Throws ClassificationError when a declared side contradicts the spot.
KikoQuote kiko_quote(const MarketEnvironment& env, const KikoSpec& spec,
                     const SeriesConfig& cfg = {});
double kiko_price(const MarketEnvironment& env, const KikoSpec& spec,
                  const SeriesConfig& cfg = {});

/// Greeks by central finite differences of the series prices. Spot bumps
/// are shrunk to stay inside the corridor (ProximityError if that needs a
/// bump below 1e-3 of the requested one).
GreekSet koko_greeks(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                     const SeriesConfig& cfg = {});
GreekSet kiki_greeks(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                     const SeriesConfig& cfg = {});
GreekSet kiko_greeks(const MarketEnvironment& env, const KikoSpec& spec,
                     const SeriesConfig& cfg = {});

}  // namespace fxx
