#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "fxx/error.hpp"
#include "fxx/greeks_fd.hpp"
#include "fxx/single_barrier.hpp"
#include "fxx/vanilla.hpp"
#include "support/fd_oracle.hpp"
#include "support/grid.hpp"

namespace {

using namespace fxx;
using enum OptionDirection;

const MarketEnvironment kEnv{100.0, 0.03, 0.01, 0.2, 1.0};

TEST(GreeksFd, ConstantPricer) {
    const GreekSet g = fd_greeks([](const MarketEnvironment&) { return 3.5; }, kEnv);
    EXPECT_EQ(g.value, 3.5);
    EXPECT_EQ(g.delta, 0.0);
    EXPECT_EQ(g.vega, 0.0);
    EXPECT_EQ(g.vanna, 0.0);
    EXPECT_EQ(g.volga, 0.0);
}

TEST(GreeksFd, LinearPricer) {
    const GreekSet g = fd_greeks([](const MarketEnvironment& e) { return 2.5 * e.spot; }, kEnv);
    EXPECT_NEAR(g.delta, 2.5, 1e-10);
    EXPECT_NEAR(g.vega, 0.0, 1e-9);
    EXPECT_NEAR(g.vanna, 0.0, 1e-9);
    EXPECT_NEAR(g.volga, 0.0, 1e-4);  // roundoff of 250 / k^2
}

TEST(GreeksFd, VanillaMatchesAnalytic) {
    const auto price = [](const MarketEnvironment& e) { return gk_price(e, Call, 100.0); };
    const GreekSet f = fd_greeks(price, kEnv, {1e-4, 1e-4});
    const GreekSet a = gk_greeks(kEnv, Call, 100.0);
    // Here d2 = 0, so vanna and volga vanish; they are compared on the vega
    // scale instead of relatively.
    EXPECT_NEAR(f.delta, a.delta, 1e-6 * std::fabs(a.delta));
    EXPECT_NEAR(f.vega, a.vega, 1e-6 * std::fabs(a.vega));
    EXPECT_NEAR(f.vanna, a.vanna, 1e-6 * std::fabs(a.vega));
    EXPECT_NEAR(f.volga, a.volga, 1e-6 * std::fabs(a.vega));
}

// Halving both bumps cuts the truncation error by four.
TEST(GreeksFd, SecondOrderConvergence) {
    const double K = 110.0;
    const auto price = [&](const MarketEnvironment& e) { return gk_price(e, Put, K); };
    const GreekSet a = gk_greeks(kEnv, Put, K);
    const GreekSet f1 = fd_greeks(price, kEnv, {2e-2, 2e-2});
    const GreekSet f2 = fd_greeks(price, kEnv, {1e-2, 1e-2});
    const double ratio_delta = std::fabs(f1.delta - a.delta) / std::fabs(f2.delta - a.delta);
    const double ratio_vega = std::fabs(f1.vega - a.vega) / std::fabs(f2.vega - a.vega);
    const double ratio_vanna = std::fabs(f1.vanna - a.vanna) / std::fabs(f2.vanna - a.vanna);
    const double ratio_volga = std::fabs(f1.volga - a.volga) / std::fabs(f2.volga - a.volga);
    for (double r : {ratio_delta, ratio_vega, ratio_vanna, ratio_volga}) {
        EXPECT_GE(r, 3.0);
        EXPECT_LE(r, 5.0);
    }
}

TEST(GreeksFd, RejectsBadBumps) {
    const auto price = [](const MarketEnvironment& e) { return e.spot; };
    EXPECT_THROW(fd_greeks(price, kEnv, {0.0, 1e-4}), DomainError);
    EXPECT_THROW(fd_greeks(price, kEnv, {1e-4, 0.3}), DomainError);
}

TEST(GreeksFd, StencilFailureKeepsCategoryAndNamesPoint) {
    const SingleBarrierSpec s{Call, 100.0, 99.999, BarrierSide::Lower, KnockType::Out};
    try {
        fd_greeks([&](const MarketEnvironment& e) { return price_single_barrier(e, s); }, kEnv);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("stencil point"), std::string::npos);
    }
    try {
        fd_greeks([](const MarketEnvironment&) -> double { throw OverflowError("boom"); }, kEnv);
        FAIL();
    } catch (const OverflowError& e) {
        EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
    }
}

TEST(GreeksFd, FitSpotBump) {
    EXPECT_EQ(fit_spot_bump(100.0, 0.01, {80.0, 120.0}), 0.01);
    EXPECT_NEAR(fit_spot_bump(100.0, 0.01, {99.99, 120.0}), 0.005, 1e-12);
    EXPECT_THROW(fit_spot_bump(100.0, 0.01, {99.99999}), ProximityError);
}

// The extended-precision oracle used by the acceptance suite agrees with the
// plain double engine wherever the latter is accurate.
TEST(GreeksFd, QuadOracleAgreesWithDoubleEngine) {
    for (const auto& c : test::barrier_grid(24, 5, {.min_boundary_gap = 1e-3, .min_spot_gap = 0.02})) {
        const GreekSet q = test::row_fd_quad(c.env, c.spec);
        const GreekSet d = fd_greeks([&](const MarketEnvironment& e) { return price_single_barrier(e, c.spec); },
                                     c.env);
        const double scale = std::max(1.0, std::fabs(q.value));
        EXPECT_NEAR(d.delta, q.delta, 1e-5 * scale);
        EXPECT_NEAR(d.vega, q.vega, 1e-4 * scale);
    }
}

}  // namespace
