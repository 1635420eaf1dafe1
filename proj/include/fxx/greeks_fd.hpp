#pragma once

#include <functional>
#include <initializer_list>

#include "fxx/contracts.hpp"

namespace fxx {

struct FdBumps {
    double dS_rel = 1e-4;     // spot bump as a fraction of spot
    double dSigma_abs = 1e-4; // absolute volatility bump
};

template <class R>
struct FdGreeks {
    R delta{}, vega{}, vanna{}, volga{};
};

/// Central differences on the 3x3 (S, sigma) stencil for a pricer taking
/// (S, sigma) in any arithmetic type R:
///   delta = (P(S+h) - P(S-h)) / 2h
///   vega  = (P(s+k) - P(s-k)) / 2k
///   volga = (P(s+k) - 2 P(s) + P(s-k)) / k^2
///   vanna = (P(S+h,s+k) - P(S+h,s-k) - P(S-h,s+k) + P(S-h,s-k)) / 4hk
template <class R, class Pricer>
FdGreeks<R> central_differences(Pricer&& price, const R& S, const R& sigma, const R& h, const R& k) {
    const R p0 = price(S, sigma);
    const R s_up = price(S, sigma + k);
    const R s_dn = price(S, sigma - k);
    FdGreeks<R> g;
    g.delta = (price(S + h, sigma) - price(S - h, sigma)) / (R(2) * h);
    g.vega = (s_up - s_dn) / (R(2) * k);
    g.volga = (s_up - R(2) * p0 + s_dn) / (k * k);
    g.vanna = (price(S + h, sigma + k) - price(S + h, sigma - k) - price(S - h, sigma + k) +
               price(S - h, sigma - k)) /
              (R(4) * h * k);
    return g;
}

using EnvPricer = std::function<double(const MarketEnvironment&)>;

/// Finite-difference GreekSet of any pricer; value = pricer(env). The spot
/// and volatility steps are rounded so that S + h and sigma + k are exact.
/// A pricer failure is rethrown with the stencil point in the message,
/// keeping the error category.
GreekSet fd_greeks(const EnvPricer& pricer, const MarketEnvironment& env, FdBumps bumps = {});

/// Largest spot bump <= requested that keeps S +- h strictly inside the open
/// interval between the nearest barriers, leaving at least h between S +- h
/// and each barrier. Throws ProximityError if the result would fall below
/// 1e-3 of the requested bump.
double fit_spot_bump(double spot, double requested, std::initializer_list<double> barriers);

}  // namespace fxx
