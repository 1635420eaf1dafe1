#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fxx/contracts.hpp"
#include "fxx/double_barrier.hpp"
#include "fxx/vanna_volga.hpp"

namespace fxx::cli {

// Malformed request or quote document. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Request {
    MarketEnvironment market;
    Contract contract;
};

// Request schema (all fields required, unknown fields rejected):
//   {"market":   {"spot", "rd", "rf", "sigma", "T"},
//    "contract": {"type": "vanilla",        "direction", "strike"}
//              | {"type": "single_barrier", "direction", "strike", "barrier", "side", "knock"}
//              | {"type": "double_barrier", "direction", "strike", "lower", "upper", "knock"}
//              | {"type": "kiko",           "direction", "strike", "barrier_in", "side_in",
//                                           "barrier_out", "side_out"}}
// direction: "call" | "put"; side: "lower" | "upper"; knock: "in" | "out".
// Numeric validity (sigma > 0, unbreached barriers, ...) is not checked
// here; the pricers raise DomainError for that.
Request parse_request(std::string_view json_text, std::string_view source = "request");

// Quotes schema: {"sigma_atm", "rr25", "bf25", optional "convention": "smile_strangle"}.
PivotQuotes parse_quotes(std::string_view json_text, std::string_view source = "quotes");

std::string read_file(const std::string& path);

/// Series configuration with n_max taken from FXX_SERIES_NMAX when set.
SeriesConfig series_config_from_env();

// One JSON object per line; numbers are written with 17 significant digits,
// non-finite numbers as null.
class Record {
public:
    Record& add(std::string_view key, double value);
    Record& add(std::string_view key, int value);
    Record& add(std::string_view key, long long value);
    Record& add(std::string_view key, unsigned long long value);
    Record& add(std::string_view key, bool value);
    Record& add(std::string_view key, std::string_view value);
    Record& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
    std::string str() const;

private:
    std::string body_;
};

std::string format_number(double value);

}  // namespace fxx::cli
