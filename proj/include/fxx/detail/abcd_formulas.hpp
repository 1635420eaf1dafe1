#pragma once

// The four building blocks A, B, C, D of the single-barrier closed forms and
// their Delta/Vega/Vanna/Volga, templated on the scalar type so the same
// code can be instantiated in extended precision by the test oracles.
//
// Real must provide exp, log, sqrt, erfc and isfinite through either
// the std namespace or argument-dependent lookup.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace fxx::detail {

template <class Real>
struct AbcdInputs {
    Real S, K, B, rd, rf, sigma, T;
    int phi;  // +1 call, -1 put
    int eta;  // +1 lower barrier, -1 upper barrier
};

template <class Real>
struct ParamGreeks {
    Real value{}, delta{}, vega{}, vanna{}, volga{};
};

template <class Real>
Real sqrt2() {
    using std::sqrt;
    return sqrt(Real(2));
}

template <class Real>
Real pi() {
    using std::acos;
    return acos(Real(-1));
}

template <class Real>
Real norm_cdf(const Real& x) {
    using std::erfc;
    return Real(0.5) * erfc(-x / sqrt2<Real>());
}

// log N(x) without underflow in the far left tail.
template <class Real>
Real log_norm_cdf(const Real& x) {
    using std::erfc;
    using std::log;
    if (x > Real(-30)) {
        return log(Real(0.5) * erfc(-x / sqrt2<Real>()));
    }
    const Real r = Real(1) / (x * x);
    const Real series =
        Real(1) - r * (Real(1) - r * (Real(3) - r * (Real(15) - r * (Real(105) - r * Real(945)))));
    return -Real(0.5) * x * x - log(-x) - Real(0.5) * log(Real(2) * pi<Real>()) + log(series);
}

// c * x^a * N(z) evaluated as exp(log c + a log x + log N(z)) so that an
// enormous power multiplying a vanishing probability stays finite.
template <class Real>
Real scaled_cdf_term(const Real& log_coef, const Real& z) {
    using std::exp;
    return exp(log_coef + log_norm_cdf(z));
}

template <class Real>
struct AbcdValues {
    Real a, b, c, d, alpha;
    Real x1, x2, y1, y2;
};

template <class Real>
AbcdValues<Real> abcd_values(const AbcdInputs<Real>& in) {
    using std::log;
    using std::sqrt;
    const Real s = in.sigma * sqrt(in.T);
    const Real alpha = (in.rd - in.rf - in.sigma * in.sigma / Real(2)) / (in.sigma * in.sigma);
    const Real shift = (Real(1) + alpha) * s;
    const Real x1 = log(in.S / in.K) / s + shift;
    const Real x2 = log(in.S / in.B) / s + shift;
    const Real y1 = log(in.B * in.B / (in.S * in.K)) / s + shift;
    const Real y2 = log(in.B / in.S) / s + shift;

    const Real phi = Real(in.phi);
    const Real eta = Real(in.eta);
    const Real log_fwd = log(in.S) - in.rf * in.T;  // log(S e^{-rf T})
    const Real log_disc_k = log(in.K) - in.rd * in.T;  // log(K e^{-rd T})
    const Real lbs = log(in.B / in.S);

    auto vanilla_like = [&](const Real& x) {
        return phi * (scaled_cdf_term(log_fwd, phi * x) -
                      scaled_cdf_term(log_disc_k, phi * (x - s)));
    };
    auto reflected = [&](const Real& y) {
        return phi * (scaled_cdf_term(log_fwd + Real(2) * (alpha + Real(1)) * lbs, eta * y) -
                      scaled_cdf_term(log_disc_k + Real(2) * alpha * lbs, eta * (y - s)));
    };

    return {vanilla_like(x1), vanilla_like(x2), reflected(y1), reflected(y2), alpha,
            x1, x2, y1, y2};
}

// Sensitivities of A and B. Both share the shape of a vanilla price in which
// the first normal argument is built from log(S/X); X = K gives A, X = B gives
// B. The strike K always stays the payoff multiplier.
template <class Real>
ParamGreeks<Real> vanilla_like_greeks(const AbcdInputs<Real>& in, bool is_a, const Real& value) {
    using std::exp;
    using std::log;
    using std::sqrt;
    const Real S = in.S, K = in.K, T = in.T, sg = in.sigma, rd = in.rd, rf = in.rf;
    const Real m = rd - rf;
    const Real phi = Real(in.phi);
    const Real sq = sqrt(T);
    const Real s2 = sg * sg;
    const Real rt2pi = sqrt(Real(2) * pi<Real>());
    const Real L = log(S / (is_a ? K : in.B));
    const Real P = Real(2) * L + T * (Real(2) * m - s2);  // 2 sigma sqrt(T) d2
    const Real Q = Real(2) * L + T * (Real(2) * m + s2);  // 2 sigma sqrt(T) d1
    const Real Em = exp(-(P * P) / (Real(8) * s2 * T) - rd * T);
    const Real Ep = exp(-(Q * Q) / (Real(8) * s2 * T) - rf * T);

    ParamGreeks<Real> g;
    g.value = value;
    const Real n_term = Real(0.5) * exp(-rf * T) * erfc(-phi * Q / (Real(2) * sqrt2<Real>() * sg * sq));
    if (is_a) {
        g.delta = phi * n_term;
        const Real L2 = L * L;
        const Real quad = T * T * (Real(4) * rd * rd + rd * (Real(4) * s2 - Real(8) * rf) +
                                   (Real(2) * rf + s2) * (Real(2) * rf + s2));
        const Real gauss = exp(-(Real(4) * L2 + quad) / (Real(8) * s2 * T));
        g.vega = K * sq / rt2pi * exp((-m / s2 + Real(0.5)) * L) * gauss;
        g.vanna = exp((-m / s2 - Real(0.5)) * L) / (Real(2) * rt2pi * s2 * sq) *
                  (T * (-Real(2) * m + s2) - Real(2) * L) * gauss;
    } else {
        g.delta = phi * (n_term - K * phi * Em / (rt2pi * sg * S * sq) +
                         phi * Ep / (rt2pi * sg * sq));
        g.vega = (K * Q * Em + S * (T * (-Real(2) * m + s2) - Real(2) * L) * Ep) /
                 (Real(2) * rt2pi * s2 * sq);
        const Real R = Real(8) * T * m * L + Real(4) * L * L + T * T * (Real(4) * m * m - s2 * s2);
        g.vanna = (-K * R * Em + Real(4) * K * s2 * T * Em + S * R * Ep -
                   Real(4) * s2 * S * T * Ep +
                   Real(2) * s2 * S * T * (T * (-Real(2) * m + s2) - Real(2) * L) * Ep) /
                  (Real(4) * rt2pi * s2 * s2 * S * T * sq);
    }
    g.volga = (-Real(16) * K * s2 * T * (L + T * m) * Em +
               Real(16) * s2 * S * T * (L + T * m) * Ep + K * P * Q * Q * Em -
               S * P * P * Q * Ep) /
              (Real(8) * rt2pi * s2 * s2 * sg * T * sq);
    return g;
}

// Sensitivities of C and D. Both carry the reflection factor (B/S)^{2 alpha}
// and differ only in the log-moneyness inside the normal argument:
// log(B^2/(K S)) for C and log(B/S) for D.
template <class Real>
ParamGreeks<Real> reflected_greeks(const AbcdInputs<Real>& in, const Real& Ly, const Real& value) {
    using std::erfc;
    using std::exp;
    using std::log;
    using std::sqrt;
    const Real S = in.S, K = in.K, B = in.B, T = in.T, sg = in.sigma, rd = in.rd, rf = in.rf;
    const Real m = rd - rf;
    const Real phi = Real(in.phi);
    const Real eta = Real(in.eta);
    const Real sq = sqrt(T);
    const Real T32 = T * sq;
    const Real s2 = sg * sg;
    const Real s3 = s2 * sg;
    const Real s4 = s2 * s2;
    const Real spi = sqrt(pi<Real>());
    const Real r2 = sqrt2<Real>();
    const Real r2pi = sqrt(Real(2) / pi<Real>());
    const Real lbs = log(B / S);
    const Real ex = Real(2) * m / s2;
    const Real pw0 = exp(ex * lbs);
    const Real pw1 = exp((ex - Real(1)) * lbs);
    const Real B2 = B * B;
    const Real drf = exp(-rf * T);
    const Real drd = exp(-rd * T);

    const Real P1 = T * (s2 - Real(2) * m) - Real(2) * Ly;  // -2 sigma sqrt(T) (y - sigma sqrt(T))
    const Real Q1 = T * (s2 + Real(2) * m) + Real(2) * Ly;  // 2 sigma sqrt(T) y
    const Real arg_scale = Real(2) * r2 * sq * sg;
    // erf(x) + 1 written as erfc(-x) to keep relative accuracy in the tail.
    const Real erfP = erfc(-eta * Q1 / arg_scale);
    const Real erfC = erfc(eta * P1 / arg_scale);
    const Real Em = exp(-(P1 * P1) / (Real(8) * T * s2) - rd * T);
    const Real Ep = exp(-(Q1 * Q1) / (Real(8) * T * s2) - rf * T);

    ParamGreeks<Real> g;
    g.value = value;

    // The printed grouping 2B^2 sqrt(T)(rf - rd) e^{-rf T} ((erfP - 1) + 1) is
    // collapsed so no cancellation happens when erfP is tiny.
    g.delta = phi / (Real(2) * s2 * S * S * sq) * pw1 *
              (Real(2) * B2 * sq * (rf - rd) * drf * erfP +
               K * S * sq * drd * (Real(2) * m - s2) * erfC - r2pi * B2 * eta * sg * Ep +
               r2pi * eta * K * sg * S * Em);

    g.vega = phi / (Real(4) * B * s3) * pw0 *
             (Real(8) * B2 * (rf - rd) * drf * lbs * erfP +
              Real(8) * K * S * m * drd * lbs * erfC +
              r2pi * B2 * eta * sg * P1 * Ep / sq +
              r2pi * eta * K * sg * S * Q1 * Em / sq);

    const Real R = (s4 - Real(4) * m * m) * T * T + Real(8) * (rf - rd) * Ly * T - Real(4) * Ly * Ly;
    g.vanna = pw1 * phi / (Real(8) * spi * S * S * T32 * s4 * sg) *
              (-Real(8) * drd * K * spi * S * s4 * erfC * T32 -
               Real(16) * drd * K * spi * m * S * (-s2 + Real(2) * m) * erfC * lbs * T32 +
               Real(16) * B2 * drf * m * s2 * erfP * spi * T32 +
               Real(8) * drd * K * S * s2 * (s2 - Real(2) * m) * erfC * spi * T32 +
               Real(16) * B2 * drf * (-m) * s2 * erfP * lbs * spi * T32 +
               Real(16) * B2 * drf * m * (s2 + Real(2) * m) * erfP * lbs * spi * T32 -
               Real(4) * r2 * Em * K * S * eta * s3 * T -
               Real(16) * r2 * Em * K * m * S * eta * sg * lbs * T -
               Real(2) * r2 * B2 * Ep * eta * sg * (s2 + Real(2) * m) * P1 * T +
               Real(4) * B2 * Ep * eta * s3 * r2 * T +
               Real(16) * B2 * Ep * m * eta * sg * lbs * r2 * T +
               Real(2) * Em * K * S * eta * sg * (s2 - Real(2) * m) * Q1 * r2 * T +
               Real(2) * B2 * Ep * eta * s3 * P1 * r2 * T -
               r2 * Em * K * S * eta * sg * R +
               B2 * Ep * eta * sg * R * r2);

    g.volga = pw0 * phi / (Real(16) * B * spi * T32 * s4 * s2) *
              (-Real(128) * drd * K * spi * m * m * S * erfC * lbs * lbs * T32 -
               Real(96) * drd * K * spi * m * S * s2 * erfC * lbs * T32 +
               Real(128) * B2 * drf * m * m * erfP * lbs * lbs * spi * T32 +
               Real(96) * B2 * drf * m * s2 * erfP * lbs * spi * T32 -
               Real(16) * r2 * Em * K * S * eta * s3 * (m * T + Ly) * T -
               Real(32) * r2 * Em * K * m * S * eta * sg * lbs * Q1 * T +
               Real(16) * B2 * Ep * eta * s3 * (m * T + Ly) * r2 * T +
               Real(32) * B2 * Ep * (-m) * eta * sg * lbs * P1 * r2 * T -
               r2 * Em * K * S * eta * sg * P1 * Q1 * Q1 -
               r2 * B2 * Ep * eta * sg * P1 * P1 * Q1);
    return g;
}

template <class Real>
std::array<ParamGreeks<Real>, 4> abcd_greeks(const AbcdInputs<Real>& in) {
    using std::log;
    const AbcdValues<Real> v = abcd_values(in);
    return {vanilla_like_greeks(in, true, v.a), vanilla_like_greeks(in, false, v.b),
            reflected_greeks(in, log(in.B * in.B / (in.K * in.S)), v.c),
            reflected_greeks(in, log(in.B / in.S), v.d)};
}

}  // namespace fxx::detail
