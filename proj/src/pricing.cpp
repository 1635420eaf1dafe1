#include "fxx/pricing.hpp"

#include <variant>

#include "fxx/error.hpp"
#include "fxx/greeks_fd.hpp"
#include "fxx/single_barrier.hpp"
#include "fxx/vanilla.hpp"

namespace fxx {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

GreekSet fd_with_barriers(const MarketEnvironment& env, const Contract& contract,
                          const SeriesConfig& cfg, std::initializer_list<double> barriers) {
    const FdBumps defaults;
    const double h = fit_spot_bump(env.spot, defaults.dS_rel * env.spot, barriers);
    return fd_greeks([&](const MarketEnvironment& e) { return contract_price(e, contract, cfg); },
                     env, {h / env.spot, defaults.dSigma_abs});
}

}  // namespace

std::string_view contract_kind(const Contract& contract) {
    return std::visit(Overloaded{
                          [](const VanillaSpec&) { return std::string_view("vanilla"); },
                          [](const SingleBarrierSpec&) { return std::string_view("single_barrier"); },
                          [](const DoubleBarrierSpec&) { return std::string_view("double_barrier"); },
                          [](const KikoSpec&) { return std::string_view("kiko"); },
                      },
                      contract);
}

PriceReport price_contract(const MarketEnvironment& env, const Contract& contract,
                           const SeriesConfig& cfg) {
    return std::visit(
        Overloaded{
            [&](const VanillaSpec& s) {
                const VanillaQuote q = gk_quote(env, s.direction, s.strike);
                PriceReport r;
                r.price = q.price;
                r.d1 = q.d1;
                r.d2 = q.d2;
                return r;
            },
            [&](const SingleBarrierSpec& s) {
                PriceReport r;
                r.price = price_single_barrier(env, s);
                r.rule = std::string(classify_single_barrier(s).rule);
                return r;
            },
            [&](const DoubleBarrierSpec& s) {
                const SeriesQuote q = double_barrier_quote(env, s, cfg);
                PriceReport r;
                r.price = q.price;
                r.rule = std::string(s.knock == KnockType::Out ? "KOKO-" : "KIKI-") +
                         std::string(to_string(s.direction));
                r.series_tail = q.tail;
                r.truncation_warning = q.truncation_warning;
                return r;
            },
            [&](const KikoSpec& s) {
                const KikoQuote q = kiko_quote(env, s, cfg);
                PriceReport r;
                r.price = q.price;
                r.rule = "KIKO-" + std::string(to_string(s.direction)) + "-row" + std::to_string(q.row) +
                         ": " + q.inequality;
                r.replication = q.replication;
                r.truncation_warning = q.truncation_warning;
                return r;
            },
        },
        contract);
}

double contract_price(const MarketEnvironment& env, const Contract& contract, const SeriesConfig& cfg) {
    return price_contract(env, contract, cfg).price;
}

GreeksReport contract_greeks(const MarketEnvironment& env, const Contract& contract,
                             GreekMethod method, const SeriesConfig& cfg) {
    const bool fd = method == GreekMethod::FiniteDifference;
    GreeksReport out;
    out.method = method;
    std::visit(Overloaded{
                   [&](const VanillaSpec& s) {
                       out.greeks = fd ? fd_greeks([&](const MarketEnvironment& e) {
                                             return gk_price(e, s.direction, s.strike);
                                         }, env)
                                       : gk_greeks(env, s.direction, s.strike);
                   },
                   [&](const SingleBarrierSpec& s) {
                       if (!fd) {
                           out.greeks = greeks_single_barrier(env, s);
                           return;
                       }
                       validate(s, env);
                       if (on_classification_boundary(s)) {
                           throw DomainError("strike equals barrier (classification boundary); "
                                             "Greeks are undefined there");
                       }
                       out.greeks = fd_with_barriers(env, contract, cfg, {s.barrier});
                   },
                   [&](const DoubleBarrierSpec& s) {
                       out.greeks = s.knock == KnockType::Out ? koko_greeks(env, s, cfg)
                                                              : kiki_greeks(env, s, cfg);
                   },
                   [&](const KikoSpec& s) { out.greeks = kiko_greeks(env, s, cfg); },
               },
               contract);
    const bool analytic_available =
        std::holds_alternative<VanillaSpec>(contract) || std::holds_alternative<SingleBarrierSpec>(contract);
    if (!analytic_available && !fd) {
        out.method = GreekMethod::FiniteDifference;
        out.notice = "analytic Greeks are not available for this contract; finite differences used";
    }
    return out;
}

}  // namespace fxx
