#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fxx/double_barrier.hpp"
#include "fxx/error.hpp"
#include "fxx/mc_oracle.hpp"
#include "fxx/single_barrier.hpp"
#include "fxx/vanilla.hpp"

namespace {

using namespace fxx;
using enum OptionDirection;
using enum BarrierSide;
using enum KnockType;

const MarketEnvironment kEnv{100.0, 0.03, 0.01, 0.2, 1.0};
const MarketEnvironment kDocEnv{100.0, 0.02, 0.0, 0.25, 0.5};

McConfig config(std::uint64_t paths, int steps, std::uint64_t seed = 42, bool bridge = true) {
    McConfig c;
    c.n_paths = paths;
    c.n_steps = steps;
    c.seed = seed;
    c.bridge_correction = bridge;
    return c;
}

double z_score(double closed, const McEstimate& m) { return (closed - m.price) / m.std_error; }

TEST(McGenerator, UniformStaysInsideOpenInterval) {
    EXPECT_GT(detail::mc_uniform(0), 0.0);
    EXPECT_LT(detail::mc_uniform(~std::uint64_t{0}), 1.0);
    EXPECT_EQ(detail::mc_hash(1, 2), detail::mc_hash(1, 2));
    EXPECT_NE(detail::mc_hash(1, 2), detail::mc_hash(1, 3));
    EXPECT_NE(detail::mc_hash(1, 2), detail::mc_hash(2, 2));
}

TEST(McGenerator, UniformMoments) {
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = detail::mc_uniform(detail::mc_hash(99, static_cast<std::uint64_t>(i)));
        sum += u;
        sum2 += u * u;
    }
    EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
    EXPECT_NEAR(sum2 / n, 1.0 / 3.0, 4.0 * std::sqrt(4.0 / 45.0 / n));
}

// A European payoff only needs the terminal value, so one exact step
// suffices.
TEST(McOracle, VanillaAgreesWithClosedForm) {
    for (auto d : {Call, Put}) {
        const McEstimate m = mc_price(kEnv, VanillaSpec{d, 100.0}, config(400000, 1));
        EXPECT_LT(std::fabs(z_score(gk_price(kEnv, d, 100.0), m)), 3.5);
        EXPECT_GT(m.std_error, 0.0);
    }
}

TEST(McOracle, Martingale) {
    const McEstimate m = mc_forward_ratio(kEnv, config(400000, 4));
    EXPECT_LT(std::fabs(1.0 - m.price), 3.5 * m.std_error);
}

TEST(McOracle, DownAndOutCallAgrees) {
    const SingleBarrierSpec s{Call, 100.0, 80.0, Lower, Out};
    const McEstimate m = mc_price(kDocEnv, s, config(100000, 200));
    EXPECT_LT(std::fabs(z_score(price_single_barrier(kDocEnv, s), m)), 3.5);
}

TEST(McOracle, KokoAgrees) {
    const MarketEnvironment e{100.0, 0.02, 0.01, 0.2, 0.5};
    const DoubleBarrierSpec s{Call, 100.0, 85.0, 115.0, Out};
    const McEstimate m = mc_price(e, s, config(100000, 200));
    EXPECT_LT(std::fabs(z_score(koko_price(e, s), m)), 3.5);
}

TEST(McOracle, BitIdenticalAcrossThreadCounts) {
    const std::vector<Contract> contracts{VanillaSpec{Call, 100.0},
                                          SingleBarrierSpec{Put, 100.0, 115.0, Upper, Out},
                                          DoubleBarrierSpec{Call, 100.0, 85.0, 115.0, In}};
    McConfig c = config(5000, 64, 7);
    const auto serial = mc_price_many_serial(kEnv, contracts, c);
    for (int threads : {1, 4, 8}) {
        c.threads = threads;
        const auto par = mc_price_many(kEnv, contracts, c);
        for (std::size_t i = 0; i < contracts.size(); ++i) {
            EXPECT_EQ(par[i].price, serial[i].price) << threads;
            EXPECT_EQ(par[i].std_error, serial[i].std_error) << threads;
        }
    }
}

TEST(McOracle, SameSeedSameResultOtherSeedDiffers) {
    const SingleBarrierSpec s{Call, 100.0, 90.0, Lower, Out};
    const McEstimate a = mc_price(kEnv, s, config(3000, 50, 1));
    const McEstimate b = mc_price(kEnv, s, config(3000, 50, 1));
    const McEstimate c = mc_price(kEnv, s, config(3000, 50, 2));
    EXPECT_EQ(a.price, b.price);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.price, c.price);
}

TEST(McOracle, UnreachableKnockOutEqualsVanillaPathwise) {
    const std::vector<Contract> contracts{VanillaSpec{Call, 100.0},
                                          SingleBarrierSpec{Call, 100.0, 100.0 * 1e9, Upper, Out}};
    const auto pay = mc_path_payoffs(kEnv, contracts, config(1, 100), 0, 2000);
    for (std::size_t p = 0; p < 2000; ++p) {
        EXPECT_EQ(pay[2 * p], pay[2 * p + 1]);
    }
}

TEST(McOracle, KikiPlusKokoIsVanillaPathwise) {
    const std::vector<Contract> contracts{VanillaSpec{Put, 100.0},
                                          DoubleBarrierSpec{Put, 100.0, 90.0, 112.0, In},
                                          DoubleBarrierSpec{Put, 100.0, 90.0, 112.0, Out}};
    const auto pay = mc_path_payoffs(kEnv, contracts, config(1, 100), 500, 3000);
    int knocked = 0;
    for (std::size_t p = 0; p < 3000; ++p) {
        EXPECT_EQ(pay[3 * p + 1] + pay[3 * p + 2], pay[3 * p]);
        knocked += pay[3 * p + 1] > 0.0;
    }
    EXPECT_GT(knocked, 0);
}

TEST(McOracle, PathPayoffsMatchEstimate) {
    const Contract c = SingleBarrierSpec{Call, 95.0, 85.0, Lower, Out};
    const McConfig cfg = config(3000, 30);
    const auto pay = mc_path_payoffs(kEnv, std::span<const Contract>(&c, 1), cfg, 0, 3000);
    double sum = 0.0;
    for (double x : pay) {
        sum += x;
    }
    EXPECT_NEAR(sum / 3000.0, mc_price(kEnv, c, cfg).price, 1e-12);
}

TEST(McOracle, CombinationIsPathwiseDifference) {
    const std::vector<Contract> contracts{VanillaSpec{Call, 100.0},
                                          DoubleBarrierSpec{Call, 100.0, 85.0, 115.0, Out}};
    const std::vector<double> w{1.0, -1.0};
    const McConfig cfg = config(20000, 50);
    const McEstimate diff = mc_price_combination(kEnv, contracts, w, cfg);
    const McEstimate kiki = mc_price(kEnv, DoubleBarrierSpec{Call, 100.0, 85.0, 115.0, In}, cfg);
    EXPECT_NEAR(diff.price, kiki.price, 1e-12);
    EXPECT_THROW(mc_price_combination(kEnv, contracts, std::vector<double>{1.0}, cfg), DomainError);
}

// Averaged over ten seeds, the bridge-corrected 50-step estimate of a
// down-and-out call is closer to the continuous-monitoring price than the
// uncorrected one.
TEST(McOracle, BridgeCorrectionReducesBias) {
    const SingleBarrierSpec s{Call, 100.0, 90.0, Lower, Out};
    const double closed = price_single_barrier(kDocEnv, s);
    double with = 0.0, without = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        with += mc_price(kDocEnv, s, config(20000, 50, seed, true)).price;
        without += mc_price(kDocEnv, s, config(20000, 50, seed, false)).price;
    }
    EXPECT_LT(std::fabs(with / 10.0 - closed), std::fabs(without / 10.0 - closed));
}

TEST(McOracle, KikoPayoffUsesBothBarriers) {
    const KikoSpec s{Call, 100.0, 90.0, Lower, 115.0, Upper};
    const McEstimate m = mc_price(kEnv, s, config(60000, 200));
    EXPECT_LT(std::fabs(z_score(kiko_price(kEnv, s), m)), 3.5);
}

TEST(McOracle, RejectsInvalidInput) {
    EXPECT_THROW(mc_price(kEnv, VanillaSpec{Call, 100.0}, config(0, 10)), DomainError);
    EXPECT_THROW(mc_price(kEnv, VanillaSpec{Call, 100.0}, config(10, 0)), DomainError);
    EXPECT_THROW(mc_price(kEnv, SingleBarrierSpec{Call, 100.0, 101.0, Lower, Out}, config(10, 10)),
                 DomainError);
    EXPECT_THROW(mc_price(kEnv, KikoSpec{Call, 100.0, 90.0, Upper, 115.0, Upper}, config(10, 10)),
                 ClassificationError);
}

}  // namespace
