#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fxx/cli/commands.hpp"
#include "fxx/cli/requests.hpp"

int main(int argc, char** argv) {
    using namespace fxx::cli;

    CLI::App app{"FX vanilla and barrier option pricer"};
    app.require_subcommand(1);

    std::string request_path;
    std::string quotes_path;

    auto* price = app.add_subcommand("price", "Closed-form price of the request contract");
    price->add_option("request", request_path, "Request JSON file")->required();

    std::string method = "analytic";
    auto* greeks = app.add_subcommand("greeks", "Delta, Vega, Vanna and Volga");
    greeks->add_option("request", request_path, "Request JSON file")->required();
    greeks->add_option("--method", method, "analytic or fd")
        ->check(CLI::IsMember({"analytic", "fd"}));

    auto* vv = app.add_subcommand("vv-price", "Vanna-Volga price under ATM/RR/BF quotes");
    vv->add_option("request", request_path, "Request JSON file")->required();
    vv->add_option("quotes", quotes_path, "Quotes JSON file")->required();

    McCheckOptions mc;
    auto* check = app.add_subcommand("mc-check", "Closed form against the Monte Carlo oracle");
    check->add_option("request", request_path, "Request JSON file")->required();
    check->add_option("--paths", mc.paths, "Number of paths")->check(CLI::PositiveNumber);
    check->add_option("--steps", mc.steps, "Monitoring steps per path")->check(CLI::PositiveNumber);
    check->add_option("--seed", mc.seed, "Generator seed");
    check->add_flag("--bridge,!--no-bridge", mc.bridge, "Brownian-bridge barrier correction (default on)");
    check->add_option("--threads", mc.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    return run_guarded(
        [&] {
            if (price->parsed()) {
                cmd_price(read_file(request_path), std::cout, std::cerr, request_path);
            } else if (greeks->parsed()) {
                cmd_greeks(read_file(request_path),
                           method == "fd" ? fxx::GreekMethod::FiniteDifference : fxx::GreekMethod::Analytic,
                           std::cout, std::cerr, request_path);
            } else if (vv->parsed()) {
                cmd_vv_price(read_file(request_path), read_file(quotes_path), std::cout, std::cerr,
                             request_path, quotes_path);
            } else if (check->parsed()) {
                cmd_mc_check(read_file(request_path), mc, std::cout, std::cerr, request_path);
            }
        },
        std::cerr);
}
