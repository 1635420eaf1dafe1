#include "fxx/cli/commands.hpp"

#include <cmath>
#include <ostream>
#include <variant>

#include "fxx/cli/requests.hpp"
#include "fxx/error.hpp"
#include "fxx/mc_oracle.hpp"
#include "fxx/vanna_volga.hpp"

namespace fxx::cli {
namespace {

void add_greeks(Record& rec, const GreekSet& g) {
    rec.add("value", g.value)
        .add("delta", g.delta)
        .add("vega", g.vega)
        .add("vanna", g.vanna)
        .add("volga", g.volga);
}

void add_z(Record& rec, double closed, const McEstimate& est) {
    rec.add("mc_price", est.price).add("std_error", est.std_error);
    rec.add("z_score", est.std_error > 0.0 ? (closed - est.price) / est.std_error
                                           : (closed == est.price ? 0.0 : NAN));
}

}  // namespace

void cmd_price(const std::string& request, std::ostream& out, std::ostream& err, const std::string& source) {
    const Request req = parse_request(request, source);
    const SeriesConfig cfg = series_config_from_env();
    const PriceReport r = price_contract(req.market, req.contract, cfg);
    Record rec;
    rec.add("command", "price").add("type", contract_kind(req.contract)).add("price", r.price);
    if (std::holds_alternative<VanillaSpec>(req.contract)) {
        rec.add("d1", r.d1).add("d2", r.d2);
    } else {
        rec.add("rule", r.rule);
    }
    if (!r.replication.empty()) {
        rec.add("replication", r.replication);
    }
    if (std::holds_alternative<DoubleBarrierSpec>(req.contract)) {
        rec.add("n_max", cfg.n_max).add("series_tail", r.series_tail);
    }
    if (r.truncation_warning) {
        rec.add("truncation_warning", true);
        err << "warning: series tail term exceeds tolerance; increase FXX_SERIES_NMAX\n";
    }
    out << rec.str() << '\n';
}

void cmd_greeks(const std::string& request, GreekMethod method, std::ostream& out, std::ostream& err,
                const std::string& source) {
    const Request req = parse_request(request, source);
    const GreeksReport r = contract_greeks(req.market, req.contract, method, series_config_from_env());
    Record rec;
    rec.add("command", "greeks")
        .add("type", contract_kind(req.contract))
        .add("method", r.method == GreekMethod::Analytic ? "analytic" : "fd");
    add_greeks(rec, r.greeks);
    if (!r.notice.empty()) {
        rec.add("notice", r.notice);
        err << "notice: " << r.notice << '\n';
    }
    out << rec.str() << '\n';
}

void cmd_vv_price(const std::string& request, const std::string& quotes, std::ostream& out,
                  std::ostream& err, const std::string& request_source, const std::string& quotes_source) {
    const Request req = parse_request(request, request_source);
    const PivotQuotes q = parse_quotes(quotes, quotes_source);
    const VvResult r = vv_price(req.market, req.contract, q, series_config_from_env());
    Record rec;
    rec.add("command", "vv-price")
        .add("type", contract_kind(req.contract))
        .add("bs_price", r.bs_price)
        .add("x1", r.weights[0])
        .add("x2", r.weights[1])
        .add("x3", r.weights[2])
        .add("rr_gap", r.rr_gap)
        .add("bf_gap", r.bf_gap)
        .add("adjustment", r.adjustment)
        .add("vv_price", r.vv_price)
        .add("condition", r.condition)
        .add("three_term_adjustment", r.three_term_adjustment)
        .add("k_put25", r.pivots.pivots[0].strike)
        .add("k_atm", r.pivots.pivots[1].strike)
        .add("k_call25", r.pivots.pivots[2].strike)
        .add("sigma_put25", r.pivots.pivots[0].market_vol)
        .add("sigma_call25", r.pivots.pivots[2].market_vol);
    if (q.sigma_atm != req.market.sigma) {
        const char* msg = "sigma_atm from the quotes overrides the request sigma for Vanna-Volga pricing";
        rec.add("warning", msg);
        err << "warning: " << msg << '\n';
    }
    out << rec.str() << '\n';
}

void cmd_mc_check(const std::string& request, const McCheckOptions& opts, std::ostream& out,
                  std::ostream& err, const std::string& source) {
    (void)err;
    const Request req = parse_request(request, source);
    const SeriesConfig series = series_config_from_env();
    const double closed = contract_price(req.market, req.contract, series);
    McConfig cfg;
    cfg.n_paths = opts.paths;
    cfg.n_steps = opts.steps;
    cfg.seed = opts.seed;
    cfg.bridge_correction = opts.bridge;
    cfg.threads = opts.threads;

    Record rec;
    rec.add("command", "mc-check")
        .add("type", contract_kind(req.contract))
        .add("paths", static_cast<unsigned long long>(cfg.n_paths))
        .add("steps", cfg.n_steps)
        .add("seed", static_cast<unsigned long long>(cfg.seed))
        .add("bridge", cfg.bridge_correction)
        .add("closed_form", closed);

    const auto* dbl = std::get_if<DoubleBarrierSpec>(&req.contract);
    if (dbl != nullptr && dbl->knock == KnockType::In) {
        DoubleBarrierSpec koko = *dbl;
        koko.knock = KnockType::Out;
        const std::array<Contract, 3> legs{req.contract, VanillaSpec{dbl->direction, dbl->strike}, koko};
        const auto est = mc_price_many(req.market, legs, cfg);
        const std::array<double, 3> w{0.0, 1.0, -1.0};
        const McEstimate parity = mc_price_combination(req.market, legs, w, cfg);
        add_z(rec, closed, est[0]);
        rec.add("vanilla_minus_koko_mc", parity.price)
            .add("vanilla_minus_koko_std_error", parity.std_error)
            .add("pathwise_equal", parity.price == est[0].price && parity.std_error == est[0].std_error);
    } else {
        add_z(rec, closed, mc_price(req.market, req.contract, cfg));
    }
    out << rec.str() << '\n';
}

int run_guarded(const std::function<void()>& body, std::ostream& err) {
    try {
        body();
        return kExitOk;
    } catch (const ParseError& e) {
        err << "fxx: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        err << "fxx: precondition violated: " << e.what() << '\n';
        return kExitDomain;
    } catch (const NumericalError& e) {
        err << "fxx: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "fxx: error: " << e.what() << '\n';
        return kExitOther;
    }
}

}  // namespace fxx::cli
