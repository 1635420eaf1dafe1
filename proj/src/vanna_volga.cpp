#include "fxx/vanna_volga.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fxx/error.hpp"
#include "fxx/num_core.hpp"
#include "fxx/pricing.hpp"
#include "fxx/vanilla.hpp"

namespace fxx {
namespace {

constexpr double kMaxCondition = 1e12;

MarketEnvironment at_vol(MarketEnvironment env, double sigma) {
    env.sigma = sigma;
    return env;
}

double norm1(const Mat3& a) {
    double best = 0.0;
    for (int j = 0; j < 3; ++j) {
        double col = 0.0;
        for (int i = 0; i < 3; ++i) {
            col += std::fabs(a[i][j]);
        }
        best = std::max(best, col);
    }
    return best;
}

Vec3 lu_solve(const PivotSystem& sys, const Vec3& b) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i) {
        double v = b[sys.perm[i]];
        for (int j = 0; j < i; ++j) {
            v -= sys.lu[i][j] * y[j];
        }
        y[i] = v;
    }
    Vec3 x{};
    for (int i = 2; i >= 0; --i) {
        double v = y[i];
        for (int j = i + 1; j < 3; ++j) {
            v -= sys.lu[i][j] * x[j];
        }
        x[i] = v / sys.lu[i][i];
    }
    return x;
}

void factorize(PivotSystem& sys) {
    sys.lu = sys.V;
    sys.perm = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int p = k;
        for (int i = k + 1; i < 3; ++i) {
            if (std::fabs(sys.lu[i][k]) > std::fabs(sys.lu[p][k])) {
                p = i;
            }
        }
        if (sys.lu[p][k] == 0.0) {
            throw IllConditionedError("pivot system is singular (pivot strikes too close?)");
        }
        std::swap(sys.lu[k], sys.lu[p]);
        std::swap(sys.perm[k], sys.perm[p]);
        for (int i = k + 1; i < 3; ++i) {
            sys.lu[i][k] /= sys.lu[k][k];
            for (int j = k + 1; j < 3; ++j) {
                sys.lu[i][j] -= sys.lu[i][k] * sys.lu[k][j];
            }
        }
    }
    Mat3 inv{};
    for (int j = 0; j < 3; ++j) {
        Vec3 e{};
        e[j] = 1.0;
        const Vec3 col = lu_solve(sys, e);
        for (int i = 0; i < 3; ++i) {
            inv[i][j] = col[i];
        }
    }
    sys.condition = norm1(sys.V) * norm1(inv);
    if (!std::isfinite(sys.condition) || sys.condition > kMaxCondition) {
        throw IllConditionedError("pivot system is ill-conditioned (condition estimate " +
                                  std::to_string(sys.condition) + " > 1e12)");
    }
}

Vec3 sensitivities(const GreekSet& g) { return {g.vega, g.vanna, g.volga}; }

}  // namespace

void validate(const PivotQuotes& q) {
    if (!(std::isfinite(q.sigma_atm) && q.sigma_atm > 0.0)) {
        throw DomainError("sigma_atm must be finite and > 0");
    }
    if (!std::isfinite(q.rr25) || !std::isfinite(q.bf25)) {
        throw DomainError("rr25 and bf25 must be finite");
    }
    if (!(q.sigma_call25() > 0.0)) {
        throw DomainError("25-delta call vol sigma_atm + bf25 + rr25/2 must be > 0");
    }
    if (!(q.sigma_put25() > 0.0)) {
        throw DomainError("25-delta put vol sigma_atm + bf25 - rr25/2 must be > 0");
    }
}

double atm_strike(const MarketEnvironment& env) {
    validate(env);
    return env.spot * std::exp((env.drift() + 0.5 * env.sigma * env.sigma) * env.T);
}

double solve_delta_strike(const MarketEnvironment& env, double target_delta, OptionDirection direction) {
    validate(env);
    const double phi_ = phi(direction);
    const double p = phi_ * target_delta * std::exp(env.rf * env.T);
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("target delta must satisfy 0 < phi*delta < e^{-rf T}");
    }
    const double s = env.vol_sqrt_t();
    return env.spot * std::exp(-phi_ * s * inv_std_normal_cdf(p) +
                               (env.drift() + 0.5 * env.sigma * env.sigma) * env.T);
}

PivotSet make_pivot_set(const MarketEnvironment& env, const PivotQuotes& quotes) {
    validate(quotes);
    const MarketEnvironment atm_env = at_vol(env, quotes.sigma_atm);
    PivotSet set;
    set.pivots[0] = {solve_delta_strike(atm_env, -0.25, OptionDirection::Put), quotes.sigma_atm,
                     quotes.sigma_put25(), OptionDirection::Call};
    set.pivots[1] = {atm_strike(atm_env), quotes.sigma_atm, quotes.sigma_atm, OptionDirection::Call};
    set.pivots[2] = {solve_delta_strike(atm_env, 0.25, OptionDirection::Call), quotes.sigma_atm,
                     quotes.sigma_call25(), OptionDirection::Call};
    return set;
}

PivotSystem build_pivot_system(const MarketEnvironment& env, const PivotSet& pivots, PivotBasis basis) {
    std::array<Vec3, 3> g{};   // vega, vanna, volga of each pivot call
    Vec3 gap{};
    for (int i = 0; i < 3; ++i) {
        const Pivot& p = pivots.pivots[i];
        if (!(p.strike > 0.0) || !(p.bs_vol > 0.0) || !(p.market_vol > 0.0)) {
            throw DomainError("pivot strikes and vols must be > 0");
        }
        const MarketEnvironment bs_env = at_vol(env, p.bs_vol);
        g[i] = sensitivities(gk_greeks(bs_env, p.direction, p.strike));
        gap[i] = gk_price(at_vol(env, p.market_vol), p.direction, p.strike) -
                 gk_price(bs_env, p.direction, p.strike);
    }
    PivotSystem sys;
    sys.basis = basis;
    for (int r = 0; r < 3; ++r) {
        if (basis == PivotBasis::Strikes) {
            sys.V[r] = {g[0][r], g[1][r], g[2][r]};
        } else {
            sys.V[r] = {g[1][r], g[2][r] - g[0][r], 0.5 * (g[2][r] + g[0][r]) - g[1][r]};
        }
    }
    sys.market_minus_bs = basis == PivotBasis::Strikes
                              ? gap
                              : Vec3{gap[1], gap[2] - gap[0], 0.5 * (gap[2] + gap[0]) - gap[1]};
    factorize(sys);
    return sys;
}

Vec3 vv_weights(const GreekSet& target, const PivotSystem& system) {
    const Vec3 b = sensitivities(target);
    Vec3 x = lu_solve(system, b);
    Vec3 r{};
    for (int i = 0; i < 3; ++i) {
        r[i] = b[i] - (system.V[i][0] * x[0] + system.V[i][1] * x[1] + system.V[i][2] * x[2]);
    }
    const Vec3 dx = lu_solve(system, r);
    for (int i = 0; i < 3; ++i) {
        x[i] += dx[i];
    }
    return x;
}

VvResult vv_price_portfolio(const MarketEnvironment& env, std::span<const Position> portfolio,
                            const PivotQuotes& quotes, const SeriesConfig& cfg) {
    validate(env);
    validate(quotes);
    const MarketEnvironment atm_env = at_vol(env, quotes.sigma_atm);
    VvResult out;
    GreekSet target;
    for (const Position& pos : portfolio) {
        target += pos.quantity * contract_greeks(atm_env, pos.contract, GreekMethod::Analytic, cfg).greeks;
    }
    out.bs_price = target.value;
    out.pivots = make_pivot_set(env, quotes);
    const PivotSystem structures = build_pivot_system(atm_env, out.pivots, PivotBasis::Structures);
    const PivotSystem strikes = build_pivot_system(atm_env, out.pivots, PivotBasis::Strikes);
    out.weights = vv_weights(target, structures);
    out.strike_weights = vv_weights(target, strikes);
    out.condition = structures.condition;
    out.rr_gap = structures.market_minus_bs[1];
    out.bf_gap = structures.market_minus_bs[2];
    out.adjustment = out.weights[1] * out.rr_gap + out.weights[2] * out.bf_gap;
    out.three_term_adjustment = 0.0;
    for (int i = 0; i < 3; ++i) {
        out.three_term_adjustment += out.strike_weights[i] * strikes.market_minus_bs[i];
    }
    out.vv_price = out.bs_price + out.adjustment;
    return out;
}

VvResult vv_price(const MarketEnvironment& env, const Contract& contract, const PivotQuotes& quotes,
                  const SeriesConfig& cfg) {
    const Position pos{1.0, contract};
    return vv_price_portfolio(env, std::span<const Position>(&pos, 1), quotes, cfg);
}

}  // namespace fxx
