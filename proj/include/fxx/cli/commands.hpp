#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "fxx/pricing.hpp"

namespace fxx::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNumerical = 4;
inline constexpr int kExitOther = 1;

// Each command reads document text (already loaded from disk), writes one
// JSON record per line to out and human-oriented notices to err. Errors are
// reported by exception; run_guarded maps them to exit codes.

void cmd_price(const std::string& request, std::ostream& out, std::ostream& err,
               const std::string& source = "request");

void cmd_greeks(const std::string& request, GreekMethod method, std::ostream& out, std::ostream& err,
                const std::string& source = "request");

void cmd_vv_price(const std::string& request, const std::string& quotes, std::ostream& out,
                  std::ostream& err, const std::string& request_source = "request",
                  const std::string& quotes_source = "quotes");

struct McCheckOptions {
    std::uint64_t paths = 200000;
    int steps = 1000;
    std::uint64_t seed = 42;
    bool bridge = true;
    int threads = 0;
};

void cmd_mc_check(const std::string& request, const McCheckOptions& opts, std::ostream& out,
                  std::ostream& err, const std::string& source = "request");

/// Runs body and converts exceptions into an exit code, printing the
/// message to err: ParseError 2, DomainError 3, NumericalError 4, other 1.
int run_guarded(const std::function<void()>& body, std::ostream& err);

}  // namespace fxx::cli
