#include "fxx/cli/requests.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fxx::cli {
namespace {

using nlohmann::json;

class Reader {
public:
    Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) {
            fail(path_, "expected a JSON object");
        }
    }

    [[noreturn]] static void fail(const std::string& field, const std::string& why) {
        throw ParseError("field '" + field + "': " + why);
    }

    const json& member(const std::string& key) {
        seen_.insert(key);
        const auto it = obj_.find(key);
        if (it == obj_.end()) {
            fail(path_ + "." + key, "missing");
        }
        return *it;
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    double number(const std::string& key) {
        const json& v = member(key);
        if (!v.is_number()) {
            fail(path_ + "." + key, "expected a number");
        }
        return v.get<double>();
    }

    std::string text(const std::string& key) {
        const json& v = member(key);
        if (!v.is_string()) {
            fail(path_ + "." + key, "expected a string");
        }
        return v.get<std::string>();
    }

    Reader object(const std::string& key) { return Reader(member(key), path_ + "." + key); }

    std::string field(const std::string& key) const { return path_ + "." + key; }

    void reject_unknown() const {
        for (const auto& [key, value] : obj_.items()) {
            if (!seen_.count(key)) {
                fail(path_ + "." + key, "unknown field");
            }
        }
    }

private:
    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

OptionDirection parse_direction(Reader& r, const std::string& key) {
    const std::string v = r.text(key);
    if (v == "call") return OptionDirection::Call;
    if (v == "put") return OptionDirection::Put;
    Reader::fail(r.field(key), "expected \"call\" or \"put\", got \"" + v + "\"");
}

BarrierSide parse_side(Reader& r, const std::string& key) {
    const std::string v = r.text(key);
    if (v == "lower") return BarrierSide::Lower;
    if (v == "upper") return BarrierSide::Upper;
    Reader::fail(r.field(key), "expected \"lower\" or \"upper\", got \"" + v + "\"");
}

KnockType parse_knock(Reader& r, const std::string& key) {
    const std::string v = r.text(key);
    if (v == "in") return KnockType::In;
    if (v == "out") return KnockType::Out;
    Reader::fail(r.field(key), "expected \"in\" or \"out\", got \"" + v + "\"");
}

json parse_document(std::string_view text, std::string_view source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(source) + ": " + e.what());
    }
}

}  // namespace

Request parse_request(std::string_view json_text, std::string_view source) {
    const json doc = parse_document(json_text, source);
    Reader root(doc, std::string(source));
    Request req;

    Reader m = root.object("market");
    req.market.spot = m.number("spot");
    req.market.rd = m.number("rd");
    req.market.rf = m.number("rf");
    req.market.sigma = m.number("sigma");
    req.market.T = m.number("T");
    m.reject_unknown();

    Reader c = root.object("contract");
    const std::string type = c.text("type");
    if (type == "vanilla") {
        VanillaSpec s;
        s.direction = parse_direction(c, "direction");
        s.strike = c.number("strike");
        req.contract = s;
    } else if (type == "single_barrier") {
        SingleBarrierSpec s;
        s.direction = parse_direction(c, "direction");
        s.strike = c.number("strike");
        s.barrier = c.number("barrier");
        s.side = parse_side(c, "side");
        s.knock = parse_knock(c, "knock");
        req.contract = s;
    } else if (type == "double_barrier") {
        DoubleBarrierSpec s;
        s.direction = parse_direction(c, "direction");
        s.strike = c.number("strike");
        s.lower = c.number("lower");
        s.upper = c.number("upper");
        s.knock = parse_knock(c, "knock");
        req.contract = s;
    } else if (type == "kiko") {
        KikoSpec s;
        s.direction = parse_direction(c, "direction");
        s.strike = c.number("strike");
        s.barrier_in = c.number("barrier_in");
        s.side_in = parse_side(c, "side_in");
        s.barrier_out = c.number("barrier_out");
        s.side_out = parse_side(c, "side_out");
        req.contract = s;
    } else {
        Reader::fail(c.field("type"),
                     "expected vanilla, single_barrier, double_barrier or kiko, got \"" + type + "\"");
    }
    c.reject_unknown();
    root.reject_unknown();
    return req;
}

PivotQuotes parse_quotes(std::string_view json_text, std::string_view source) {
    const json doc = parse_document(json_text, source);
    Reader r(doc, std::string(source));
    PivotQuotes q;
    q.sigma_atm = r.number("sigma_atm");
    q.rr25 = r.number("rr25");
    q.bf25 = r.number("bf25");
    if (r.has("convention")) {
        const std::string conv = r.text("convention");
        if (conv != "smile_strangle") {
            Reader::fail(r.field("convention"), "only \"smile_strangle\" is supported, got \"" + conv + "\"");
        }
    }
    r.reject_unknown();
    return q;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SeriesConfig series_config_from_env() {
    SeriesConfig cfg;
    if (const char* v = std::getenv("FXX_SERIES_NMAX")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end == v || *end != '\0' || n < 1 || n > 1000) {
            throw ParseError("FXX_SERIES_NMAX must be an integer in [1, 1000], got \"" + std::string(v) + "\"");
        }
        cfg.n_max = static_cast<int>(n);
    }
    return cfg;
}

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

}  // namespace

Record& Record::add(std::string_view key, double value) {
    body_ += (body_.empty() ? "" : ",") + quoted(key) + ":" + format_number(value);
    return *this;
}

Record& Record::add(std::string_view key, int value) { return add(key, static_cast<long long>(value)); }

Record& Record::add(std::string_view key, long long value) {
    body_ += (body_.empty() ? "" : ",") + quoted(key) + ":" + std::to_string(value);
    return *this;
}

Record& Record::add(std::string_view key, unsigned long long value) {
    body_ += (body_.empty() ? "" : ",") + quoted(key) + ":" + std::to_string(value);
    return *this;
}

Record& Record::add(std::string_view key, bool value) {
    body_ += (body_.empty() ? "" : ",") + quoted(key) + ":" + (value ? "true" : "false");
    return *this;
}

Record& Record::add(std::string_view key, std::string_view value) {
    body_ += (body_.empty() ? "" : ",") + quoted(key) + ":" + quoted(value);
    return *this;
}

std::string Record::str() const { return "{" + body_ + "}"; }

}  // namespace fxx::cli
