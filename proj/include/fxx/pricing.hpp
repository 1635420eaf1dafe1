#pragma once

#include <string>

#include "fxx/contracts.hpp"
#include "fxx/double_barrier.hpp"

namespace fxx {

struct PriceReport {
    double price = 0.0;
    std::string rule;         // table row used; empty for vanillas
    double d1 = 0.0;          // vanillas only
    double d2 = 0.0;          // vanillas only
    std::string replication;  // KIKO portfolio priced
    double series_tail = 0.0; // double-barrier and KIKO series only
    bool truncation_warning = false;
};

/// Closed-form price of any supported contract.
PriceReport price_contract(const MarketEnvironment& env, const Contract& contract,
                           const SeriesConfig& cfg = {});
double contract_price(const MarketEnvironment& env, const Contract& contract,
                      const SeriesConfig& cfg = {});

enum class GreekMethod { Analytic, FiniteDifference };

struct GreeksReport {
    GreekSet greeks;
    GreekMethod method = GreekMethod::Analytic;  // engine actually used
    std::string notice;                          // set when the request was overridden
};

/// Analytic Greeks for vanillas and single barriers; finite differences for
/// double barriers and KIKOs (with a notice if analytic was requested) or
/// whenever FiniteDifference is requested.
GreeksReport contract_greeks(const MarketEnvironment& env, const Contract& contract,
                             GreekMethod method = GreekMethod::Analytic,
                             const SeriesConfig& cfg = {});

std::string_view contract_kind(const Contract& contract);

}  // namespace fxx
