#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string_view>
#include <variant>

namespace fxx {

// Spot is quoted in domestic currency per unit of foreign. Rates are
// continuously compounded per year, sigma per sqrt(year), T in years.
struct MarketEnvironment {
    double spot = 0.0;
    double rd = 0.0;
    double rf = 0.0;
    double sigma = 0.0;
    double T = 0.0;

    double drift() const { return rd - rf; }
    double vol_sqrt_t() const { return sigma * std::sqrt(T); }
};

/// Throws DomainError naming the first violated invariant
/// (spot > 0, sigma > 0, T > 0, finite rates). Barrier specs additionally
/// require sigma*sqrt(T) >= 1e-10.
void validate(const MarketEnvironment& env);

enum class OptionDirection { Call = +1, Put = -1 };
enum class BarrierSide { Lower = +1, Upper = -1 };
enum class KnockType { In, Out };

constexpr int phi(OptionDirection d) { return static_cast<int>(d); }
constexpr int eta(BarrierSide s) { return static_cast<int>(s); }

std::string_view to_string(OptionDirection d);
std::string_view to_string(BarrierSide s);
std::string_view to_string(KnockType k);

struct VanillaSpec {
    OptionDirection direction = OptionDirection::Call;
    double strike = 0.0;
};

struct SingleBarrierSpec {
    OptionDirection direction = OptionDirection::Call;
    double strike = 0.0;
    double barrier = 0.0;
    BarrierSide side = BarrierSide::Lower;
    KnockType knock = KnockType::Out;
};

// Knock type applies to both barriers: KOKO or KIKI.
struct DoubleBarrierSpec {
    OptionDirection direction = OptionDirection::Call;
    double strike = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    KnockType knock = KnockType::Out;
};

struct KikoSpec {
    OptionDirection direction = OptionDirection::Call;
    double strike = 0.0;
    double barrier_in = 0.0;
    BarrierSide side_in = BarrierSide::Lower;
    double barrier_out = 0.0;
    BarrierSide side_out = BarrierSide::Upper;
};

using Contract = std::variant<VanillaSpec, SingleBarrierSpec, DoubleBarrierSpec, KikoSpec>;

// Each validate() checks the spec on its own and against the environment
// (barriers must not already be breached). Failures throw DomainError.
void validate(const VanillaSpec& spec, const MarketEnvironment& env);
void validate(const SingleBarrierSpec& spec, const MarketEnvironment& env);
void validate(const DoubleBarrierSpec& spec, const MarketEnvironment& env);
void validate(const KikoSpec& spec, const MarketEnvironment& env);
void validate(const Contract& contract, const MarketEnvironment& env);

// Signed combination of the parameters A, B, C, D.
struct Recipe {
    std::array<int, 4> coeff{};

    bool is_zero() const { return coeff == std::array<int, 4>{}; }
    friend bool operator==(const Recipe&, const Recipe&) = default;
};

struct TableRow {
    std::string_view name;  // e.g. "Reverse Up and Out Call"
    std::string_view rule;  // e.g. "UO-call-reverse"
    OptionDirection direction;
    BarrierSide side;
    KnockType knock;
    bool reverse;           // barrier set in the money
    Recipe recipe;
};

/// The sixteen single-barrier rows. A row is reverse when K <= B for calls
/// and K > B for puts; the K = B tie follows that split exactly.
std::span<const TableRow, 16> single_barrier_table();

const TableRow& classify_single_barrier(const SingleBarrierSpec& spec);

/// True when K and B coincide to within 1e-12 relative. Greeks reject such
/// specs because the classification is not locally constant there.
bool on_classification_boundary(const SingleBarrierSpec& spec);

struct GreekSet {
    double value = 0.0;
    double delta = 0.0;
    double vega = 0.0;
    double vanna = 0.0;
    double volga = 0.0;

    GreekSet& operator+=(const GreekSet& o) {
        value += o.value;
        delta += o.delta;
        vega += o.vega;
        vanna += o.vanna;
        volga += o.volga;
        return *this;
    }
    GreekSet& operator-=(const GreekSet& o) { return *this += (-1.0 * o); }
    friend GreekSet operator*(double a, const GreekSet& g) {
        return {a * g.value, a * g.delta, a * g.vega, a * g.vanna, a * g.volga};
    }
    friend GreekSet operator+(GreekSet a, const GreekSet& b) { return a += b; }
    friend GreekSet operator-(GreekSet a, const GreekSet& b) { return a -= b; }
};

}  // namespace fxx
