#include "fxx/greeks_fd.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "fxx/error.hpp"

namespace fxx {
namespace {

[[noreturn]] void rethrow_with_point(const std::string& where) {
    try {
        throw;
    } catch (const ProximityError& e) {
        throw ProximityError(std::string(e.what()) + where);
    } catch (const ClassificationError& e) {
        throw ClassificationError(std::string(e.what()) + where);
    } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + where);
    } catch (const OverflowError& e) {
        throw OverflowError(std::string(e.what()) + where);
    } catch (const IllConditionedError& e) {
        throw IllConditionedError(std::string(e.what()) + where);
    } catch (const std::exception& e) {
        throw NumericalError(std::string(e.what()) + where);
    }
}

}  // namespace

GreekSet fd_greeks(const EnvPricer& pricer, const MarketEnvironment& env, FdBumps bumps) {
    validate(env);
    if (!(bumps.dS_rel > 0.0) || !(bumps.dSigma_abs > 0.0)) {
        throw DomainError("fd_greeks: bumps must be > 0");
    }
    if (bumps.dSigma_abs >= env.sigma) {
        throw DomainError("fd_greeks: volatility bump must be smaller than sigma");
    }
    const double h = (env.spot + bumps.dS_rel * env.spot) - env.spot;
    const double k = (env.sigma + bumps.dSigma_abs) - env.sigma;

    auto at = [&](double S, double sigma) {
        MarketEnvironment e = env;
        e.spot = S;
        e.sigma = sigma;
        try {
            return pricer(e);
        } catch (...) {
            rethrow_with_point(" [fd stencil point S=" + std::to_string(S) +
                               " sigma=" + std::to_string(sigma) + "]");
        }
    };
    const auto g = central_differences<double>(at, env.spot, env.sigma, h, k);
    return {at(env.spot, env.sigma), g.delta, g.vega, g.vanna, g.volga};
}

double fit_spot_bump(double spot, double requested, std::initializer_list<double> barriers) {
    double h = requested;
    for (double b : barriers) {
        // S +- h must stay at least h away from the barrier: |S - b| >= 2h.
        h = std::min(h, 0.5 * std::fabs(spot - b));
    }
    if (!(h >= 1e-3 * requested)) {
        throw ProximityError("spot is too close to a barrier for a finite-difference stencil "
                             "(requested bump " + std::to_string(requested) + ", usable " +
                             std::to_string(h) + ")");
    }
    return h;
}

}  // namespace fxx
