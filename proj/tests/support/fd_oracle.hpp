#pragma once

// Extended-precision finite differences of the A, B, C, D parameter prices
// and of single-barrier row prices. The same templated kernel as the
// library is instantiated on Quad, so the stencil can use bumps small enough
// that truncation error is far below the tolerances being checked.

#include <array>
#include <vector>

#include "fxx/contracts.hpp"
#include "fxx/detail/abcd_formulas.hpp"
#include "fxx/greeks_fd.hpp"
#include "support/quad.hpp"

namespace fxx::test {

inline constexpr double kQuadSpotBump = 1e-7;  // relative to spot
inline constexpr double kQuadVolBump = 1e-7;   // absolute

inline std::array<Quad, 4> abcd_quad(const MarketEnvironment& env, Quad S, Quad sigma, int phi_,
                                     int eta_, double K, double B) {
    const detail::AbcdInputs<Quad> in{S, K, B, env.rd, env.rf, sigma, env.T, phi_, eta_};
    const auto v = detail::abcd_values(in);
    return {v.a, v.b, v.c, v.d};
}

inline GreekSet to_greek_set(double value, const FdGreeks<Quad>& g) {
    return {value, static_cast<double>(g.delta), static_cast<double>(g.vega),
            static_cast<double>(g.vanna), static_cast<double>(g.volga)};
}

/// FD Greeks of each of A, B, C, D, in that order. The nine stencil points
/// are evaluated once and shared by the four parameters.
inline std::array<GreekSet, 4> abcd_fd_quad(const MarketEnvironment& env, OptionDirection d,
                                            BarrierSide side, double K, double B) {
    struct Point {
        Quad s, v;
        std::array<Quad, 4> p;
    };
    std::vector<Point> cache;
    auto all = [&](Quad s, Quad v) -> const std::array<Quad, 4>& {
        for (const Point& pt : cache) {
            if (pt.s == s && pt.v == v) {
                return pt.p;
            }
        }
        cache.push_back({s, v, abcd_quad(env, s, v, phi(d), eta(side), K, B)});
        return cache.back().p;
    };
    cache.reserve(9);
    std::array<GreekSet, 4> out;
    const Quad S = env.spot, sg = env.sigma;
    const Quad h = Quad(kQuadSpotBump) * S, k = kQuadVolBump;
    for (int i = 0; i < 4; ++i) {
        auto price = [&](Quad s, Quad v) { return all(s, v)[i]; };
        out[i] = to_greek_set(static_cast<double>(price(S, sg)),
                              central_differences<Quad>(price, S, sg, h, k));
    }
    return out;
}

/// FD Greeks of a single-barrier row price (its recipe applied to the
/// extended-precision parameters, without the breach check, which the
/// stencil never needs when spot is not on the barrier).
inline GreekSet row_fd_quad(const MarketEnvironment& env, const SingleBarrierSpec& spec) {
    const Recipe recipe = classify_single_barrier(spec).recipe;
    auto price = [&](Quad s, Quad v) {
        const auto p = abcd_quad(env, s, v, phi(spec.direction), eta(spec.side), spec.strike,
                                 spec.barrier);
        Quad sum = 0;
        for (int i = 0; i < 4; ++i) {
            sum += Quad(recipe.coeff[i]) * p[i];
        }
        return sum;
    };
    const Quad S = env.spot, sg = env.sigma;
    return to_greek_set(static_cast<double>(price(S, sg)),
                        central_differences<Quad>(price, S, sg, Quad(kQuadSpotBump) * S,
                                                  Quad(kQuadVolBump)));
}

}  // namespace fxx::test
