#include "fxx/vanilla.hpp"

#include <cmath>
#include <limits>

#include "fxx/detail/abcd_formulas.hpp"
#include "fxx/num_core.hpp"

namespace fxx {
namespace {

constexpr double kDegenerateVol = 1e-12;

double discounted_forward(const MarketEnvironment& env) { return env.spot * std::exp(-env.rf * env.T); }

double discounted_strike(const MarketEnvironment& env, double strike) {
    return strike * std::exp(-env.rd * env.T);
}

}  // namespace

VanillaQuote gk_quote(const MarketEnvironment& env, OptionDirection direction, double strike) {
    validate(VanillaSpec{direction, strike}, env);
    const double phi_ = phi(direction);
    const double fwd = discounted_forward(env);
    const double dk = discounted_strike(env, strike);
    const double s = env.vol_sqrt_t();
    if (s < kDegenerateVol) {
        const double moneyness = fwd - dk;
        const double inf = std::numeric_limits<double>::infinity();
        const double d = moneyness > 0 ? inf : (moneyness < 0 ? -inf : 0.0);
        return {std::max(phi_ * moneyness, 0.0), d, d};
    }
    const double d1 = (std::log(env.spot / strike) + (env.drift() + 0.5 * env.sigma * env.sigma) * env.T) / s;
    const double d2 = d1 - s;
    const double price = phi_ * (fwd * std_normal_cdf(phi_ * d1) - dk * std_normal_cdf(phi_ * d2));
    return {std::max(price, 0.0), d1, d2};
}

double gk_price(const MarketEnvironment& env, OptionDirection direction, double strike) {
    return gk_quote(env, direction, strike).price;
}

GreekSet gk_greeks(const MarketEnvironment& env, OptionDirection direction, double strike) {
    const VanillaQuote q = gk_quote(env, direction, strike);
    if (env.vol_sqrt_t() < kDegenerateVol) {
        const double itm = phi(direction) * q.d1 > 0 ? 1.0 : 0.0;
        return {q.price, phi(direction) * std::exp(-env.rf * env.T) * itm, 0.0, 0.0, 0.0};
    }
    const detail::AbcdInputs<double> in{env.spot, strike, strike, env.rd, env.rf,
                                        env.sigma, env.T, phi(direction), +1};
    const auto g = detail::vanilla_like_greeks(in, true, q.price);
    return {q.price, g.delta, g.vega, g.vanna, g.volga};
}

}  // namespace fxx
