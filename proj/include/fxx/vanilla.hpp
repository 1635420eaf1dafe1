#pragma once

#include "fxx/contracts.hpp"

namespace fxx {

struct VanillaQuote {
    double price = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Garman-Kohlhagen price phi*(S e^{-rf T} N(phi d1) - K e^{-rd T} N(phi d2)).
/// When sigma*sqrt(T) < 1e-12 the discounted intrinsic value of the forward
/// is returned and d1, d2 are reported as +-infinity (or 0 at the money).
VanillaQuote gk_quote(const MarketEnvironment& env, OptionDirection direction, double strike);

double gk_price(const MarketEnvironment& env, OptionDirection direction, double strike);

/// Value, spot Delta, Vega, Vanna and Volga. Vega/Vanna/Volga are per unit
/// of volatility (not per vol point).
GreekSet gk_greeks(const MarketEnvironment& env, OptionDirection direction, double strike);

}  // namespace fxx
