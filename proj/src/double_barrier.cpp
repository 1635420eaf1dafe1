#include "fxx/double_barrier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fxx/detail/abcd_formulas.hpp"
#include "fxx/error.hpp"
#include "fxx/greeks_fd.hpp"
#include "fxx/num_core.hpp"
#include "fxx/single_barrier.hpp"
#include "fxx/vanilla.hpp"

namespace fxx {
namespace {

using detail::log_norm_cdf;

// log(N(a) - N(b)) for a > b, accurate in both tails.
double log_cdf_diff(double a, double b) {
    if (b >= 0.0) {
        return log_cdf_diff(-b, -a);
    }
    if (a <= 0.0) {
        const double la = log_norm_cdf(a);
        const double lb = log_norm_cdf(b);
        return la + std::log1p(-std::exp(lb - la));
    }
    return std::log(0.5 * (std::erf(a / kSqrt2) - std::erf(b / kSqrt2)));
}

// exp(log_coef) * (N(a) - N(b)); zero when the interval is empty.
double weighted_cdf_diff(double log_coef, double a, double b) {
    if (!(a > b)) {
        return 0.0;
    }
    return std::exp(log_coef + log_cdf_diff(a, b));
}

// E[e^{-rd T} phi (S_T - K) 1{lo < S_T < hi} 1{L < S_t < U for all t}] as the
// flat-boundary image series; the payoff sign is fixed by phi.
SeriesQuote corridor_series(const MarketEnvironment& env, int phi_, double strike, double lo,
                            double hi, double L, double U, const SeriesConfig& cfg) {
    SeriesQuote q;
    if (!(lo < hi)) {
        return q;
    }
    const double s = env.vol_sqrt_t();
    const double b = env.drift();
    const double alpha = 2.0 * b / (env.sigma * env.sigma) + 1.0;
    const double mu_t = (b + 0.5 * env.sigma * env.sigma) * env.T;
    const double log_ul = std::log(U / L);
    const double log_ls = std::log(L / env.spot);
    const double log_fwd = std::log(env.spot) - env.rf * env.T;
    const double log_dk = std::log(strike) - env.rd * env.T;

    auto e1 = [&](int n, double x) { return (std::log(env.spot / x) + 2.0 * n * log_ul + mu_t) / s; };
    auto e3 = [&](int n, double x) {
        return (std::log(L * L / (x * env.spot)) - 2.0 * n * log_ul + mu_t) / s;
    };

    double total = 0.0;
    for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
        const double direct = n * log_ul;          // log (U/L)^n
        const double image = log_ls - n * log_ul;  // log L^{n+1} / (U^n S)
        const double d1 = e1(n, lo), d2 = e1(n, hi);
        const double d3 = e3(n, lo), d4 = e3(n, hi);
        const double spot_leg =
            weighted_cdf_diff(log_fwd + alpha * direct, d1, d2) -
            weighted_cdf_diff(log_fwd + alpha * image, d3, d4);
        const double strike_leg =
            weighted_cdf_diff(log_dk + (alpha - 2.0) * direct, d1 - s, d2 - s) -
            weighted_cdf_diff(log_dk + (alpha - 2.0) * image, d3 - s, d4 - s);
        const double term = phi_ * (spot_leg - strike_leg);
        if (!std::isfinite(term)) {
            throw OverflowError("double barrier series: non-finite term at n=" + std::to_string(n) +
                                " (extreme (U/L) power)");
        }
        if (n == -cfg.n_max || n == cfg.n_max) {
            q.tail = std::max(q.tail, std::fabs(term));
        }
        total += term;
    }
    q.price = total;
    q.truncation_warning = q.tail >= cfg.tail_tol;
    return q;
}

void require_double_barrier_domain(const MarketEnvironment& env, const DoubleBarrierSpec& spec) {
    validate(spec, env);
    if (!(spec.lower < spec.strike && spec.strike < spec.upper)) {
        throw DomainError("double barrier series requires lower < strike < upper");
    }
}

SeriesQuote clamp_to_vanilla(SeriesQuote q, double vanilla) {
    q.price = std::clamp(q.price, 0.0, vanilla);
    return q;
}

void require_consistent_side(double spot, double barrier, BarrierSide side, const char* name) {
    const bool below = barrier < spot;
    const bool above = barrier > spot;
    if ((side == BarrierSide::Lower && !below) || (side == BarrierSide::Upper && !above)) {
        throw ClassificationError(std::string(name) + " declared " + std::string(to_string(side)) +
                                  " but lies on the other side of spot (or at spot)");
    }
}

struct KikoRow {
    int row;
    const char* inequality;
};

KikoRow kiko_row(OptionDirection direction, double K, double bi, double bo) {
    if (direction == OptionDirection::Call) {
        if (bi < K && K <= bo) return {1, "B_I < K <= B_O"};
        if (K <= bi && bi < bo) return {2, "K <= B_I < B_O"};
        if (K <= bo && bo < bi) return {3, "K <= B_O < B_I"};
        if (bi < bo && bo < K) return {4, "B_I < B_O < K"};
        if (bo < bi && bi < K) return {5, "B_O < B_I < K"};
        return {6, "B_O < K <= B_I"};
    }
    if (bi <= K && K < bo) return {7, "B_I <= K < B_O"};
    if (K < bi && bi < bo) return {8, "K < B_I < B_O"};
    if (K <= bo && bo < bi) return {9, "K <= B_O < B_I"};
    if (bi < bo && bo <= K) return {10, "B_I < B_O <= K"};
    if (bo < bi && bi <= K) return {11, "B_O < B_I <= K"};
    return {12, "B_O <= K < B_I"};
}

std::string single_label(OptionDirection d, double K, double B, BarrierSide side, KnockType knock) {
    const SingleBarrierSpec s{d, K, B, side, knock};
    return std::string(classify_single_barrier(s).rule) + "(" + std::to_string(B) + ")";
}

}  // namespace

void validate(const SeriesConfig& cfg) {
    if (cfg.n_max < 1) {
        throw DomainError("series n_max must be >= 1");
    }
    if (!(cfg.tail_tol > 0.0)) {
        throw DomainError("series tail_tol must be > 0");
    }
}

SeriesQuote koko_quote_any_strike(const MarketEnvironment& env, OptionDirection direction,
                                  double strike, double lower, double upper,
                                  const SeriesConfig& cfg) {
    validate(cfg);
    validate(DoubleBarrierSpec{direction, strike, lower, upper, KnockType::Out}, env);
    const double lo = direction == OptionDirection::Call ? std::max(strike, lower) : lower;
    const double hi = direction == OptionDirection::Call ? upper : std::min(strike, upper);
    const SeriesQuote q = corridor_series(env, phi(direction), strike, lo, hi, lower, upper, cfg);
    return clamp_to_vanilla(q, gk_price(env, direction, strike));
}

SeriesQuote koko_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                       const SeriesConfig& cfg) {
    if (spec.knock != KnockType::Out) {
        throw DomainError("koko_price requires knock = out");
    }
    require_double_barrier_domain(env, spec);
    return koko_quote_any_strike(env, spec.direction, spec.strike, spec.lower, spec.upper, cfg);
}

double koko_price(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                  const SeriesConfig& cfg) {
    return koko_quote(env, spec, cfg).price;
}

SeriesQuote kiki_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                       const SeriesConfig& cfg) {
    if (spec.knock != KnockType::In) {
        throw DomainError("kiki_price requires knock = in");
    }
    DoubleBarrierSpec out = spec;
    out.knock = KnockType::Out;
    SeriesQuote q = koko_quote(env, out, cfg);
    q.price = gk_price(env, spec.direction, spec.strike) - q.price;
    return q;
}

double kiki_price(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                  const SeriesConfig& cfg) {
    return kiki_quote(env, spec, cfg).price;
}

SeriesQuote double_barrier_quote(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                                 const SeriesConfig& cfg) {
    return spec.knock == KnockType::Out ? koko_quote(env, spec, cfg) : kiki_quote(env, spec, cfg);
}

KikoQuote kiko_quote(const MarketEnvironment& env, const KikoSpec& spec, const SeriesConfig& cfg) {
    validate(env);
    validate(cfg);
    require_consistent_side(env.spot, spec.barrier_in, spec.side_in, "barrier_in");
    require_consistent_side(env.spot, spec.barrier_out, spec.side_out, "barrier_out");
    validate(spec, env);

    const double K = spec.strike, bi = spec.barrier_in, bo = spec.barrier_out;
    const KikoRow row = kiko_row(spec.direction, K, bi, bo);
    KikoQuote q;
    q.row = row.row;
    q.inequality = row.inequality;

    if (spec.side_in != spec.side_out) {
        const double lower = spec.side_in == BarrierSide::Lower ? bi : bo;
        const double upper = spec.side_in == BarrierSide::Lower ? bo : bi;
        const SingleBarrierSpec ko{spec.direction, K, bo, spec.side_out, KnockType::Out};
        const SeriesQuote koko = koko_quote_any_strike(env, spec.direction, K, lower, upper, cfg);
        q.price = std::max(price_single_barrier(env, ko) - koko.price, 0.0);
        q.truncation_warning = koko.truncation_warning;
        q.replication = single_label(spec.direction, K, bo, spec.side_out, KnockType::Out) +
                        " - KOKO-" + std::string(to_string(spec.direction)) + "(" +
                        std::to_string(lower) + "," + std::to_string(upper) + ")";
        return q;
    }
    const bool in_nearer = std::fabs(std::log(bi / env.spot)) < std::fabs(std::log(bo / env.spot));
    if (!in_nearer) {
        q.price = 0.0;
        q.replication = "0";
        return q;
    }
    const SingleBarrierSpec ki_in{spec.direction, K, bi, spec.side_in, KnockType::In};
    const SingleBarrierSpec ki_out{spec.direction, K, bo, spec.side_out, KnockType::In};
    q.price = std::max(price_single_barrier(env, ki_in) - price_single_barrier(env, ki_out), 0.0);
    q.replication = single_label(spec.direction, K, bi, spec.side_in, KnockType::In) + " - " +
                    single_label(spec.direction, K, bo, spec.side_out, KnockType::In);
    return q;
}

double kiko_price(const MarketEnvironment& env, const KikoSpec& spec, const SeriesConfig& cfg) {
    return kiko_quote(env, spec, cfg).price;
}

GreekSet koko_greeks(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                     const SeriesConfig& cfg) {
    koko_quote(env, spec, cfg);
    const FdBumps defaults;
    const double h = fit_spot_bump(env.spot, defaults.dS_rel * env.spot, {spec.lower, spec.upper});
    return fd_greeks([&](const MarketEnvironment& e) { return koko_price(e, spec, cfg); }, env,
                     {h / env.spot, defaults.dSigma_abs});
}

GreekSet kiki_greeks(const MarketEnvironment& env, const DoubleBarrierSpec& spec,
                     const SeriesConfig& cfg) {
    if (spec.knock != KnockType::In) {
        throw DomainError("kiki_greeks requires knock = in");
    }
    DoubleBarrierSpec out = spec;
    out.knock = KnockType::Out;
    return gk_greeks(env, spec.direction, spec.strike) - koko_greeks(env, out, cfg);
}

GreekSet kiko_greeks(const MarketEnvironment& env, const KikoSpec& spec, const SeriesConfig& cfg) {
    kiko_quote(env, spec, cfg);
    const FdBumps defaults;
    const double h =
        fit_spot_bump(env.spot, defaults.dS_rel * env.spot, {spec.barrier_in, spec.barrier_out});
    return fd_greeks([&](const MarketEnvironment& e) { return kiko_price(e, spec, cfg); }, env,
                     {h / env.spot, defaults.dSigma_abs});
}

}  // namespace fxx
