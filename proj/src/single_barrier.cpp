#include "fxx/single_barrier.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "fxx/detail/abcd_formulas.hpp"
#include "fxx/error.hpp"

namespace fxx {
namespace {

constexpr double kNegativeTolerance = 1e-10;

detail::AbcdInputs<double> make_inputs(const MarketEnvironment& env, OptionDirection direction,
                                       BarrierSide side, double strike, double barrier) {
    return {env.spot, strike, barrier, env.rd, env.rf, env.sigma, env.T, phi(direction), eta(side)};
}

void check_kernel_inputs(const MarketEnvironment& env, double strike, double barrier) {
    validate(env);
    if (!(strike > 0.0 && std::isfinite(strike)) || !(barrier > 0.0 && std::isfinite(barrier))) {
        throw DomainError("strike and barrier must be finite and > 0");
    }
}

std::string describe(const MarketEnvironment& env, double strike, double barrier) {
    return "S=" + std::to_string(env.spot) + " K=" + std::to_string(strike) +
           " B=" + std::to_string(barrier) + " sigma=" + std::to_string(env.sigma) +
           " T=" + std::to_string(env.T);
}

double clamp_price(double price, const char* what) {
    if (price >= 0.0) {
        return price;
    }
    if (price >= -kNegativeTolerance) {
        return 0.0;
    }
    throw NumericalError(std::string(what) + ": negative price " + std::to_string(price));
}

}  // namespace

AbcdValues abcd(const MarketEnvironment& env, OptionDirection direction, BarrierSide side,
                double strike, double barrier) {
    check_kernel_inputs(env, strike, barrier);
    const auto v = detail::abcd_values(make_inputs(env, direction, side, strike, barrier));
    if (!std::isfinite(v.a) || !std::isfinite(v.b) || !std::isfinite(v.c) || !std::isfinite(v.d)) {
        throw OverflowError("abcd: non-finite parameter value (extreme barrier power) at " +
                            describe(env, strike, barrier));
    }
    return {v.a, v.b, v.c, v.d, v.alpha, v.x1, v.x2, v.y1, v.y2};
}

std::array<GreekSet, 4> greeks_abcd(const MarketEnvironment& env, OptionDirection direction,
                                    BarrierSide side, double strike, double barrier) {
    check_kernel_inputs(env, strike, barrier);
    const auto raw = detail::abcd_greeks(make_inputs(env, direction, side, strike, barrier));
    std::array<GreekSet, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = {raw[i].value, raw[i].delta, raw[i].vega, raw[i].vanna, raw[i].volga};
        for (double x : {out[i].value, out[i].delta, out[i].vega, out[i].vanna, out[i].volga}) {
            if (!std::isfinite(x)) {
                throw OverflowError("greeks_abcd: non-finite sensitivity at " +
                                    describe(env, strike, barrier));
            }
        }
    }
    return out;
}

double apply_recipe(const Recipe& recipe, const AbcdValues& v) {
    const auto& c = recipe.coeff;
    return c[0] * v.a + c[1] * v.b + c[2] * v.c + c[3] * v.d;
}

double price_single_barrier(const MarketEnvironment& env, const SingleBarrierSpec& spec) {
    validate(spec, env);
    const TableRow& row = classify_single_barrier(spec);
    if (row.recipe.is_zero()) {
        return 0.0;
    }
    const AbcdValues v = abcd(env, spec.direction, spec.side, spec.strike, spec.barrier);
    return clamp_price(apply_recipe(row.recipe, v), "price_single_barrier");
}

GreekSet greeks_single_barrier(const MarketEnvironment& env, const SingleBarrierSpec& spec) {
    validate(spec, env);
    if (on_classification_boundary(spec)) {
        throw DomainError("greeks_single_barrier: strike equals barrier (classification boundary); "
                          "Greeks are undefined there");
    }
    const TableRow& row = classify_single_barrier(spec);
    GreekSet out;
    if (row.recipe.is_zero()) {
        return out;
    }
    const auto g = greeks_abcd(env, spec.direction, spec.side, spec.strike, spec.barrier);
    for (std::size_t i = 0; i < 4; ++i) {
        out += static_cast<double>(row.recipe.coeff[i]) * g[i];
    }
    out.value = clamp_price(out.value, "greeks_single_barrier");
    return out;
}

std::vector<double> price_single_barrier_batch_serial(std::span<const SingleBarrierJob> jobs) {
    std::vector<double> out(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        out[i] = price_single_barrier(jobs[i].env, jobs[i].spec);
    }
    return out;
}

std::vector<double> price_single_barrier_batch(std::span<const SingleBarrierJob> jobs) {
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
    std::vector<double> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = price_single_barrier(jobs[i].env, jobs[i].spec);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace fxx
