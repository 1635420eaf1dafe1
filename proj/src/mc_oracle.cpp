#include "fxx/mc_oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <variant>

#include "fxx/double_barrier.hpp"
#include "fxx/error.hpp"
#include "fxx/num_core.hpp"

namespace fxx {

namespace detail {

std::uint64_t mc_hash(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + counter * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double mc_uniform(std::uint64_t bits) {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

}  // namespace detail

namespace {

constexpr std::uint64_t kBlockPaths = 1024;
constexpr double kBridgeCutoff = 40.0;  // exp(-40) is below the smallest uniform

enum Stream : std::uint64_t { kNormal = 0, kUpperUniform = 1, kLowerUniform = 2 };

struct Barrier {
    double log_level;
    BarrierSide side;
};

enum class Alive { Always, IfNone, IfAny, InNotOut };

struct PayoffRule {
    int phi;
    double strike;
    Alive alive;
    int first = -1;   // barrier index (single/out/in)
    int second = -1;  // second barrier index (double) or knock-out (KIKO)
};

struct Plan {
    std::vector<Barrier> barriers;
    std::vector<PayoffRule> rules;
    std::vector<std::vector<double>> outputs;  // weights over rules, plus forward column
    double log_spot, drift_step, vol_step, var_step, discount, forward_norm;
    int n_steps;
    std::uint64_t key;
    bool bridge;
};

int barrier_index(Plan& plan, double level, BarrierSide side) {
    const double lg = std::log(level);
    for (std::size_t i = 0; i < plan.barriers.size(); ++i) {
        if (plan.barriers[i].log_level == lg && plan.barriers[i].side == side) {
            return static_cast<int>(i);
        }
    }
    plan.barriers.push_back({lg, side});
    return static_cast<int>(plan.barriers.size() - 1);
}

PayoffRule make_rule(Plan& plan, const MarketEnvironment& env, const Contract& c) {
    struct Visitor {
        Plan& plan;
        const MarketEnvironment& env;
        PayoffRule operator()(const VanillaSpec& s) const {
            return {phi(s.direction), s.strike, Alive::Always};
        }
        PayoffRule operator()(const SingleBarrierSpec& s) const {
            const int b = barrier_index(plan, s.barrier, s.side);
            return {phi(s.direction), s.strike, s.knock == KnockType::Out ? Alive::IfNone : Alive::IfAny, b};
        }
        PayoffRule operator()(const DoubleBarrierSpec& s) const {
            const int lo = barrier_index(plan, s.lower, BarrierSide::Lower);
            const int up = barrier_index(plan, s.upper, BarrierSide::Upper);
            return {phi(s.direction), s.strike, s.knock == KnockType::Out ? Alive::IfNone : Alive::IfAny,
                    lo, up};
        }
        PayoffRule operator()(const KikoSpec& s) const {
            kiko_quote(env, s);  // side consistency and breach checks
            const int in = barrier_index(plan, s.barrier_in, s.side_in);
            const int out = barrier_index(plan, s.barrier_out, s.side_out);
            return {phi(s.direction), s.strike, Alive::InNotOut, in, out};
        }
    };
    PayoffRule rule = std::visit(Visitor{plan, env}, c);
    validate(c, env);
    return rule;
}

Plan make_plan(const MarketEnvironment& env, std::span<const Contract> contracts, const McConfig& cfg) {
    validate(env);
    validate(cfg);
    Plan plan;
    for (const Contract& c : contracts) {
        plan.rules.push_back(make_rule(plan, env, c));
    }
    const double dt = env.T / cfg.n_steps;
    plan.log_spot = std::log(env.spot);
    plan.drift_step = (env.drift() - 0.5 * env.sigma * env.sigma) * dt;
    plan.vol_step = env.sigma * std::sqrt(dt);
    plan.var_step = env.sigma * env.sigma * dt;
    plan.discount = std::exp(-env.rd * env.T);
    plan.forward_norm = std::exp(-env.drift() * env.T) / env.spot;
    plan.n_steps = cfg.n_steps;
    plan.key = detail::mc_hash(cfg.seed, 0x5EEDULL);
    plan.bridge = cfg.bridge_correction;
    return plan;
}

// Simulates one path; writes the discounted payoff of each rule into out
// and returns S_T.
double simulate_path(const Plan& plan, std::uint64_t path, std::vector<char>& touched, double* out) {
    std::fill(touched.begin(), touched.end(), 0);
    const std::size_t nb = plan.barriers.size();
    double x = plan.log_spot;
    const std::uint64_t base = path * static_cast<std::uint64_t>(plan.n_steps);
    for (int step = 0; step < plan.n_steps; ++step) {
        const std::uint64_t ctr = (base + static_cast<std::uint64_t>(step)) << 2;
        const double z = inv_std_normal_cdf_fast(detail::mc_uniform(detail::mc_hash(plan.key, ctr | kNormal)));
        const double next = x + plan.drift_step + plan.vol_step * z;
        double u_upper = -1.0, u_lower = -1.0;
        for (std::size_t b = 0; b < nb; ++b) {
            if (touched[b]) {
                continue;
            }
            const Barrier& bar = plan.barriers[b];
            const double sign = bar.side == BarrierSide::Lower ? 1.0 : -1.0;
            const double d0 = sign * (x - bar.log_level);
            const double d1 = sign * (next - bar.log_level);
            if (d1 <= 0.0) {
                touched[b] = 1;
                continue;
            }
            if (!plan.bridge) {
                continue;
            }
            const double e = 2.0 * d0 * d1 / plan.var_step;
            if (e >= kBridgeCutoff) {
                continue;
            }
            double& u = bar.side == BarrierSide::Lower ? u_lower : u_upper;
            if (u < 0.0) {
                const Stream s = bar.side == BarrierSide::Lower ? kLowerUniform : kUpperUniform;
                u = detail::mc_uniform(detail::mc_hash(plan.key, ctr | s));
            }
            if (u < std::exp(-e)) {
                touched[b] = 1;
            }
        }
        x = next;
    }
    const double ST = std::exp(x);
    for (std::size_t r = 0; r < plan.rules.size(); ++r) {
        const PayoffRule& rule = plan.rules[r];
        bool alive = true;
        switch (rule.alive) {
            case Alive::Always:
                break;
            case Alive::IfNone:
                alive = !touched[rule.first] && (rule.second < 0 || !touched[rule.second]);
                break;
            case Alive::IfAny:
                alive = touched[rule.first] || (rule.second >= 0 && touched[rule.second]);
                break;
            case Alive::InNotOut:
                alive = touched[rule.first] && !touched[rule.second];
                break;
        }
        out[r] = alive ? plan.discount * std::max(rule.phi * (ST - rule.strike), 0.0) : 0.0;
    }
    return ST;
}

struct Moments {
    double n = 0.0, mean = 0.0, m2 = 0.0;

    void add(double x) {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    void merge(const Moments& o) {
        if (o.n == 0.0) {
            return;
        }
        const double total = n + o.n;
        const double d = o.mean - mean;
        mean += d * (o.n / total);
        m2 += o.m2 + d * d * (n * o.n / total);
        n = total;
    }
};

// Statistics of one block of paths for every output.
void run_block(const Plan& plan, std::uint64_t block, std::uint64_t n_paths, Moments* stats) {
    std::vector<char> touched(plan.barriers.size());
    std::vector<double> payoff(plan.rules.size() + 1);
    const std::uint64_t first = block * kBlockPaths;
    const std::uint64_t last = std::min(first + kBlockPaths, n_paths);
    for (std::uint64_t p = first; p < last; ++p) {
        const double ST = simulate_path(plan, p, touched, payoff.data());
        payoff.back() = ST * plan.forward_norm;
        for (std::size_t o = 0; o < plan.outputs.size(); ++o) {
            double v = 0.0;
            for (std::size_t r = 0; r < payoff.size(); ++r) {
                if (plan.outputs[o][r] != 0.0) {
                    v += plan.outputs[o][r] * payoff[r];
                }
            }
            stats[o].add(v);
        }
    }
}

std::vector<McEstimate> finish(const Plan& plan, const std::vector<Moments>& blocks, std::uint64_t n_blocks) {
    const std::size_t no = plan.outputs.size();
    std::vector<McEstimate> out(no);
    for (std::size_t o = 0; o < no; ++o) {
        Moments total;
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            total.merge(blocks[b * no + o]);
        }
        const double var = total.n > 1.0 ? total.m2 / (total.n - 1.0) : 0.0;
        out[o] = {total.mean, std::sqrt(var / total.n)};
    }
    return out;
}

std::vector<McEstimate> run(const Plan& plan, const McConfig& cfg, bool parallel) {
    const std::uint64_t n_blocks = (cfg.n_paths + kBlockPaths - 1) / kBlockPaths;
    const std::size_t no = plan.outputs.size();
    std::vector<Moments> blocks(n_blocks * no);
    if (!parallel) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            run_block(plan, b, cfg.n_paths, &blocks[b * no]);
        }
        return finish(plan, blocks, n_blocks);
    }
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
    const auto nb = static_cast<std::int64_t>(n_blocks);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t b = 0; b < nb; ++b) {
        run_block(plan, static_cast<std::uint64_t>(b), cfg.n_paths, &blocks[static_cast<std::size_t>(b) * no]);
    }
    return finish(plan, blocks, n_blocks);
}

void identity_outputs(Plan& plan) {
    const std::size_t width = plan.rules.size() + 1;
    for (std::size_t r = 0; r < plan.rules.size(); ++r) {
        std::vector<double> w(width, 0.0);
        w[r] = 1.0;
        plan.outputs.push_back(std::move(w));
    }
}

}  // namespace

void validate(const McConfig& cfg) {
    if (cfg.n_paths < 1) {
        throw DomainError("mc: n_paths must be >= 1");
    }
    if (cfg.n_steps < 1) {
        throw DomainError("mc: n_steps must be >= 1");
    }
    if (cfg.threads < 0) {
        throw DomainError("mc: threads must be >= 0");
    }
}

std::vector<McEstimate> mc_price_many(const MarketEnvironment& env, std::span<const Contract> contracts,
                                      const McConfig& cfg) {
    Plan plan = make_plan(env, contracts, cfg);
    identity_outputs(plan);
    return run(plan, cfg, true);
}

std::vector<McEstimate> mc_price_many_serial(const MarketEnvironment& env,
                                             std::span<const Contract> contracts, const McConfig& cfg) {
    Plan plan = make_plan(env, contracts, cfg);
    identity_outputs(plan);
    return run(plan, cfg, false);
}

McEstimate mc_price(const MarketEnvironment& env, const Contract& contract, const McConfig& cfg) {
    return mc_price_many(env, std::span<const Contract>(&contract, 1), cfg).front();
}

McEstimate mc_price_combination(const MarketEnvironment& env, std::span<const Contract> contracts,
                                std::span<const double> weights, const McConfig& cfg) {
    if (weights.size() != contracts.size()) {
        throw DomainError("mc_price_combination: one weight per contract required");
    }
    Plan plan = make_plan(env, contracts, cfg);
    std::vector<double> w(weights.begin(), weights.end());
    w.push_back(0.0);
    plan.outputs.push_back(std::move(w));
    return run(plan, cfg, true).front();
}

McEstimate mc_forward_ratio(const MarketEnvironment& env, const McConfig& cfg) {
    Plan plan = make_plan(env, {}, cfg);
    plan.outputs.push_back({1.0});
    return run(plan, cfg, true).front();
}

std::vector<double> mc_path_payoffs(const MarketEnvironment& env, std::span<const Contract> contracts,
                                    const McConfig& cfg, std::uint64_t first_path, std::uint64_t count) {
    const Plan plan = make_plan(env, contracts, cfg);
    const std::size_t nc = contracts.size();
    std::vector<double> out(count * nc);
    std::vector<char> touched(plan.barriers.size());
    std::vector<double> row(nc);
    for (std::uint64_t i = 0; i < count; ++i) {
        simulate_path(plan, first_path + i, touched, row.data());
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(i * nc));
    }
    return out;
}

}  // namespace fxx
