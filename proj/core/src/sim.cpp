#include "whittle/sim.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "whittle/belief.hpp"
#include "whittle/index.hpp"
#include "whittle/rng.hpp"

namespace whittle {

const char* policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::whittle: return "whittle";
        case PolicyKind::myopic: return "myopic";
        case PolicyKind::random: return "random";
    }
    return "unknown";
}

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <typename T>
std::string join_semicolon(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(static_cast<long long>(xs[i]));
    }
    return out;
}

}  // namespace

void SimulationTrace::write_csv(std::ostream& out) const {
    out << "# initial";
    for (double b : initial_beliefs) out << ' ' << fmt_double(b);
    out << '\n';
    out << "t,chosen,acks,reward";
    for (std::size_t i = 0; i < initial_beliefs.size(); ++i) out << ",belief" << i;
    out << '\n';
    for (const SlotRecord& slot : slots) {
        out << slot.t << ',' << join_semicolon(slot.chosen) << ','
            << join_semicolon(slot.acks) << ',' << fmt_double(slot.reward);
        for (double b : slot.beliefs) out << ',' << fmt_double(b);
        out << '\n';
    }
}

std::string SimulationTrace::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

double WhittleIndexCache::get_or_compute(int arm, double omega,
                                         const std::function<double()>& compute) {
    const auto quantized = static_cast<std::uint64_t>(std::llround(omega * 1e9));
    const std::uint64_t key = (static_cast<std::uint64_t>(arm) << 32) | quantized;
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    const double value = compute();
    map_.emplace(key, value);
    return value;
}

std::uint64_t derive_episode_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base ^ index);
}

EpisodeResult run_episode(const BanditConfig& config, const PolicySpec& policy,
                          WhittleIndexCache* cache) {
    config.validate();
    const int n = static_cast<int>(config.arms.size());
    const ObservationModel obs{config.epsilon};

    std::vector<double> beliefs = config.resolved_initial_beliefs();
    Xoshiro256pp rng(config.seed);

    std::vector<std::uint8_t> states(n);
    for (int i = 0; i < n; ++i) states[i] = rng.uniform() < beliefs[i] ? 1 : 0;

    EpisodeResult result;
    result.trace.initial_beliefs = beliefs;
    result.trace.slots.reserve(config.horizon);

    std::vector<double> obs_draws(n), trans_draws(n), scores(n);
    double discount = 1.0;
    for (int t = 0; t < config.horizon; ++t) {
        for (int i = 0; i < n; ++i) obs_draws[i] = rng.uniform();
        for (int i = 0; i < n; ++i) trans_draws[i] = rng.uniform();

        ActionSet chosen;
        switch (policy.kind) {
            case PolicyKind::whittle:
                for (int i = 0; i < n; ++i) {
                    IndexQuery query;
                    query.omega = beliefs[i];
                    query.P = config.arms[i].P;
                    query.epsilon = config.epsilon;
                    query.beta = config.beta;
                    query.reward = config.arms[i].reward;
                    query.iterations = policy.iterations;
                    if (cache) {
                        scores[i] = cache->get_or_compute(
                            i, beliefs[i], [&query] { return whittle_index(query); });
                    } else {
                        scores[i] = whittle_index(query);
                    }
                }
                chosen = select_top(scores, config.select_count);
                break;
            case PolicyKind::myopic:
                for (int i = 0; i < n; ++i) scores[i] = beliefs[i] * config.arms[i].reward;
                chosen = select_top(scores, config.select_count);
                break;
            case PolicyKind::random: {
                std::vector<int> pool(n);
                for (int i = 0; i < n; ++i) pool[i] = i;
                for (int k = 0; k < config.select_count; ++k) {
                    const int remaining = n - k;
                    int j = k + static_cast<int>(rng.uniform() * remaining);
                    if (j >= n) j = n - 1;
                    std::swap(pool[k], pool[j]);
                    chosen.push_back(pool[k]);
                }
                std::sort(chosen.begin(), chosen.end());
                break;
            }
        }

        SlotRecord slot;
        slot.t = t;
        slot.states = states;
        slot.chosen = chosen;
        slot.acks.assign(chosen.size(), 0);

        double slot_reward = 0.0;
        std::vector<bool> is_chosen(n, false);
        std::vector<bool> got_ack(n, false);
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const int arm = chosen[k];
            is_chosen[arm] = true;
            const bool ack = states[arm] == 1 && obs_draws[arm] < 1.0 - config.epsilon;
            if (ack) {
                slot.acks[k] = 1;
                got_ack[arm] = true;
                slot_reward += config.arms[arm].reward;
            }
        }
        slot.reward = slot_reward;
        result.discounted_total += discount * slot_reward;
        discount *= config.beta;

        for (int i = 0; i < n; ++i) {
            beliefs[i] =
                update_belief(beliefs[i], config.arms[i].P, obs, is_chosen[i], got_ack[i]);
            const double stay =
                states[i] == 1 ? config.arms[i].P.p11 : config.arms[i].P.p01;
            states[i] = trans_draws[i] < stay ? 1 : 0;
        }

        slot.beliefs = beliefs;
        result.trace.slots.push_back(std::move(slot));
    }
    return result;
}

MonteCarloResult monte_carlo(const BanditConfig& config, const PolicySpec& policy,
                             int episodes) {
    if (episodes < 1) throw std::invalid_argument("episodes must be at least 1");
    config.validate();

    WhittleIndexCache cache;
    double sum = 0.0, sum_sq = 0.0;
    for (int e = 0; e < episodes; ++e) {
        BanditConfig episode_config = config;
        episode_config.seed = derive_episode_seed(config.seed, static_cast<std::uint64_t>(e));
        const double total = run_episode(episode_config, policy, &cache).discounted_total;
        sum += total;
        sum_sq += total * total;
    }

    MonteCarloResult result;
    result.episodes = episodes;
    result.mean = sum / episodes;
    if (episodes == 1) {
        result.stderr_of_mean = std::numeric_limits<double>::quiet_NaN();
    } else {
        const double variance =
            (sum_sq - episodes * result.mean * result.mean) / (episodes - 1);
        result.stderr_of_mean = std::sqrt(std::max(variance, 0.0) / episodes);
    }
    return result;
}

}  // namespace whittle
