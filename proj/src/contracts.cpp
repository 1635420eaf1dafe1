#include "fxx/contracts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fxx/error.hpp"

namespace fxx {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError(what);
    }
}

void require_positive(double x, const char* name) {
    require(std::isfinite(x) && x > 0.0, std::string(name) + " must be finite and > 0");
}

void require_unbreached(double spot, double barrier, BarrierSide side, const char* name) {
    if (side == BarrierSide::Upper) {
        require(spot < barrier, std::string(name) + ": upper barrier already breached (spot >= barrier)");
    } else {
        require(spot > barrier, std::string(name) + ": lower barrier already breached (spot <= barrier)");
    }
}

using enum OptionDirection;
using enum BarrierSide;
using enum KnockType;

constexpr Recipe kA{{1, 0, 0, 0}};
constexpr Recipe kC{{0, 0, 1, 0}};
constexpr Recipe kZero{{0, 0, 0, 0}};
constexpr Recipe kAminusC{{1, 0, -1, 0}};
constexpr Recipe kBminusCplusD{{0, 1, -1, 1}};
constexpr Recipe kAminusBplusD{{1, -1, 0, 1}};
constexpr Recipe kAminusBplusCminusD{{1, -1, 1, -1}};
constexpr Recipe kBminusD{{0, 1, 0, -1}};

constexpr std::array<TableRow, 16> kTable{{
    {"Up and In Call", "UI-call-standard", Call, Upper, In, false, kA},
    {"Down and In Call", "DI-call-standard", Call, Lower, In, false, kC},
    {"Up and Out Call", "UO-call-standard", Call, Upper, Out, false, kZero},
    {"Down and Out Call", "DO-call-standard", Call, Lower, Out, false, kAminusC},
    {"Reverse Up and In Call", "UI-call-reverse", Call, Upper, In, true, kBminusCplusD},
    {"Reverse Down and In Call", "DI-call-reverse", Call, Lower, In, true, kAminusBplusD},
    {"Reverse Up and Out Call", "UO-call-reverse", Call, Upper, Out, true, kAminusBplusCminusD},
    {"Reverse Down and Out Call", "DO-call-reverse", Call, Lower, Out, true, kBminusD},
    {"Up and In Put", "UI-put-standard", Put, Upper, In, false, kC},
    {"Down and In Put", "DI-put-standard", Put, Lower, In, false, kA},
    {"Up and Out Put", "UO-put-standard", Put, Upper, Out, false, kAminusC},
    {"Down and Out Put", "DO-put-standard", Put, Lower, Out, false, kZero},
    {"Reverse Up and In Put", "UI-put-reverse", Put, Upper, In, true, kAminusBplusD},
    {"Reverse Down and In Put", "DI-put-reverse", Put, Lower, In, true, kBminusCplusD},
    {"Reverse Up and Out Put", "UO-put-reverse", Put, Upper, Out, true, kBminusD},
    {"Reverse Down and Out Put", "DO-put-reverse", Put, Lower, Out, true, kAminusBplusCminusD},
}};

}  // namespace

std::string_view to_string(OptionDirection d) { return d == Call ? "call" : "put"; }
std::string_view to_string(BarrierSide s) { return s == Lower ? "lower" : "upper"; }
std::string_view to_string(KnockType k) { return k == In ? "in" : "out"; }

void validate(const MarketEnvironment& env) {
    require_positive(env.spot, "spot");
    require_positive(env.sigma, "sigma");
    require_positive(env.T, "T");
    require(std::isfinite(env.rd), "rd must be finite");
    require(std::isfinite(env.rf), "rf must be finite");
}

void validate(const VanillaSpec& spec, const MarketEnvironment& env) {
    validate(env);
    require_positive(spec.strike, "strike");
}

void validate(const SingleBarrierSpec& spec, const MarketEnvironment& env) {
    validate(env);
    require_positive(spec.strike, "strike");
    require_positive(spec.barrier, "barrier");
    require(env.vol_sqrt_t() >= 1e-10, "sigma*sqrt(T) must be >= 1e-10 for barrier contracts");
    require_unbreached(env.spot, spec.barrier, spec.side, "barrier");
}

void validate(const DoubleBarrierSpec& spec, const MarketEnvironment& env) {
    validate(env);
    require_positive(spec.strike, "strike");
    require_positive(spec.lower, "lower");
    require_positive(spec.upper, "upper");
    require(spec.lower < spec.upper, "lower barrier must be < upper barrier");
    require(env.vol_sqrt_t() >= 1e-10, "sigma*sqrt(T) must be >= 1e-10 for barrier contracts");
    require(spec.lower < env.spot, "lower barrier already breached (spot <= lower)");
    require(env.spot < spec.upper, "upper barrier already breached (spot >= upper)");
}

void validate(const KikoSpec& spec, const MarketEnvironment& env) {
    validate(env);
    require_positive(spec.strike, "strike");
    require_positive(spec.barrier_in, "barrier_in");
    require_positive(spec.barrier_out, "barrier_out");
    require(spec.barrier_in != spec.barrier_out, "barrier_in must differ from barrier_out");
    require(env.vol_sqrt_t() >= 1e-10, "sigma*sqrt(T) must be >= 1e-10 for barrier contracts");
    require_unbreached(env.spot, spec.barrier_in, spec.side_in, "barrier_in");
    require_unbreached(env.spot, spec.barrier_out, spec.side_out, "barrier_out");
}

void validate(const Contract& contract, const MarketEnvironment& env) {
    std::visit([&](const auto& spec) { validate(spec, env); }, contract);
}

std::span<const TableRow, 16> single_barrier_table() { return kTable; }

const TableRow& classify_single_barrier(const SingleBarrierSpec& spec) {
    const bool reverse = spec.direction == Call ? spec.strike <= spec.barrier
                                                : spec.strike > spec.barrier;
    const auto it = std::find_if(kTable.begin(), kTable.end(), [&](const TableRow& row) {
        return row.direction == spec.direction && row.side == spec.side &&
               row.knock == spec.knock && row.reverse == reverse;
    });
    return *it;
}

bool on_classification_boundary(const SingleBarrierSpec& spec) {
    return std::fabs(spec.strike - spec.barrier) <=
           1e-12 * std::max(std::fabs(spec.strike), std::fabs(spec.barrier));
}

}  // namespace fxx
