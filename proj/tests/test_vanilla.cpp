#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fxx/error.hpp"
#include "fxx/greeks_fd.hpp"
#include "fxx/vanilla.hpp"

namespace {

using namespace fxx;
using enum OptionDirection;

const MarketEnvironment kEnv{100.0, 0.03, 0.01, 0.2, 1.0};

// 40-digit value from tests/oracles/abcd_oracle.py (parameter A at K = S).
TEST(Vanilla, AtTheMoneyCallReference) {
    EXPECT_NEAR(gk_price(kEnv, Call, 100.0), 8.8273212253521255841, 1e-12);
}

TEST(Vanilla, QuoteReportsD1D2) {
    const VanillaQuote q = gk_quote(kEnv, Call, 110.0);
    const double s = 0.2;
    const double d1 = (std::log(100.0 / 110.0) + (0.02 + 0.02)) / s;
    EXPECT_NEAR(q.d1, d1, 1e-15);
    EXPECT_NEAR(q.d2, d1 - s, 1e-15);
}

TEST(Vanilla, PutCallParityGrid) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const MarketEnvironment e{50 + 150 * u(rng), -0.02 + 0.1 * u(rng), -0.02 + 0.1 * u(rng),
                                  0.05 + 0.55 * u(rng), 0.05 + 1.95 * u(rng)};
        const double K = e.spot * (0.5 + u(rng));
        const double parity = e.spot * std::exp(-e.rf * e.T) - K * std::exp(-e.rd * e.T);
        EXPECT_NEAR(gk_price(e, Call, K) - gk_price(e, Put, K), parity, 1e-12 * std::max(1.0, e.spot));
    }
}

TEST(Vanilla, TinyStrikeLimits) {
    EXPECT_NEAR(gk_price(kEnv, Call, 1e-12), 100.0 * std::exp(-0.01), 1e-10);
    EXPECT_NEAR(gk_price(kEnv, Put, 1e-12), 0.0, 1e-300);
}

TEST(Vanilla, VanishingVolatilityGivesDiscountedIntrinsic) {
    MarketEnvironment e = kEnv;
    e.sigma = 1e-14;
    const VanillaQuote q = gk_quote(e, Call, 95.0);
    EXPECT_NEAR(q.price, 100.0 * std::exp(-0.01) - 95.0 * std::exp(-0.03), 1e-12);
    EXPECT_TRUE(std::isinf(q.d1) && q.d1 > 0);
    EXPECT_EQ(gk_quote(e, Put, 95.0).price, 0.0);
}

TEST(Vanilla, GreekSignsAndBounds) {
    for (double K : {70.0, 100.0, 140.0}) {
        const GreekSet c = gk_greeks(kEnv, Call, K);
        const GreekSet p = gk_greeks(kEnv, Put, K);
        EXPECT_GT(c.vega, 0.0);
        EXPECT_GT(c.delta, 0.0);
        EXPECT_LT(c.delta, std::exp(-0.01));
        EXPECT_LT(p.delta, 0.0);
        EXPECT_GT(p.delta, -std::exp(-0.01));
        // Call and put share vega, vanna and volga.
        EXPECT_NEAR(c.vega, p.vega, 1e-12);
        EXPECT_NEAR(c.vanna, p.vanna, 1e-12);
        EXPECT_NEAR(c.volga, p.volga, 1e-12);
        EXPECT_NEAR(c.delta - p.delta, std::exp(-0.01), 1e-14);
    }
}

TEST(Vanilla, DeepInTheMoneyDeltaSaturates) {
    EXPECT_NEAR(gk_greeks(kEnv, Call, 1.0).delta, std::exp(-0.01), 1e-14);
}

TEST(Vanilla, GreeksMatchFiniteDifferences) {
    const double K = 110.0;
    const GreekSet a = gk_greeks(kEnv, Call, K);
    const GreekSet f = fd_greeks([&](const MarketEnvironment& e) { return gk_price(e, Call, K); }, kEnv);
    EXPECT_NEAR(a.value, f.value, 1e-14);
    EXPECT_NEAR(a.delta, f.delta, 1e-6 * std::fabs(f.delta));
    EXPECT_NEAR(a.vega, f.vega, 1e-6 * std::fabs(f.vega));
    EXPECT_NEAR(a.vanna, f.vanna, 1e-6 * std::fabs(f.vanna));
    EXPECT_NEAR(a.volga, f.volga, 1e-6 * std::fabs(f.volga));
}

// Textbook closed forms written out independently of the library kernel.
TEST(Vanilla, GreeksMatchTextbookForms) {
    const double S = 100, K = 105, rd = 0.03, rf = 0.01, sg = 0.2, T = 1;
    const double d1 = (std::log(S / K) + (rd - rf + 0.5 * sg * sg) * T) / (sg * std::sqrt(T));
    const double d2 = d1 - sg * std::sqrt(T);
    const double n1 = std::exp(-0.5 * d1 * d1) / std::sqrt(2 * M_PI);
    const double vega = S * std::exp(-rf * T) * n1 * std::sqrt(T);
    const GreekSet g = gk_greeks(kEnv, Call, K);
    EXPECT_NEAR(g.delta, std::exp(-rf * T) * 0.5 * std::erfc(-d1 / std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(g.vega, vega, 1e-12);
    EXPECT_NEAR(g.vanna, -std::exp(-rf * T) * n1 * d2 / sg, 1e-13);
    EXPECT_NEAR(g.volga, vega * d1 * d2 / sg, 1e-11);
}

TEST(Vanilla, RejectsInvalidInput) {
    EXPECT_THROW(gk_price(kEnv, Call, 0.0), DomainError);
    MarketEnvironment e = kEnv;
    e.sigma = -0.1;
    EXPECT_THROW(gk_greeks(e, Put, 100.0), DomainError);
}

}  // namespace
