#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "whittle/model.hpp"
#include "whittle/policies.hpp"

namespace whittle {

enum class PolicyKind { whittle, myopic, random };

struct PolicySpec {
    PolicyKind kind = PolicyKind::whittle;
    int iterations = 4;  // chain depth for PolicyKind::whittle
};

const char* policy_name(PolicyKind kind);

// One simulated slot. states holds the true states at the start of the slot,
// acks is aligned with chosen, beliefs the posteriors carried into the next
// slot.
struct SlotRecord {
    int t = 0;
    std::vector<std::uint8_t> states;
    ActionSet chosen;
    std::vector<std::uint8_t> acks;
    double reward = 0.0;
    std::vector<double> beliefs;
};

struct SimulationTrace {
    std::vector<double> initial_beliefs;
    std::vector<SlotRecord> slots;

    // One row per slot: t, chosen (';'-joined), acks (';'-joined), reward,
    // then one belief column per arm. Doubles are printed with enough digits
    // to round-trip, so equal traces have equal bytes.
    void write_csv(std::ostream& out) const;
    std::string to_csv() const;
};

struct EpisodeResult {
    double discounted_total = 0.0;
    SimulationTrace trace;
};

// Memo for index values inside a simulation run. Beliefs are quantized to
// 1e-9 for the key, which is treated as a pure cache: two beliefs that
// collide are close enough that either index value is acceptable.
class WhittleIndexCache {
  public:
    double get_or_compute(int arm, double omega, const std::function<double()>& compute);
    std::size_t size() const { return map_.size(); }

  private:
    std::unordered_map<std::uint64_t, double> map_;
};

// seed_i = mix64(base ^ i); see rng.hpp.
std::uint64_t derive_episode_seed(std::uint64_t base, std::uint64_t index);

// Simulates one episode of `config.horizon` slots.
//
// Randomness comes from one xoshiro256++ stream seeded with config.seed, with
// a fixed draw order: first one uniform per arm for the initial states
// (S=1 iff u < initial belief); then per slot, one observation uniform per
// arm in index order (an ACK of a probed arm in state 1 requires u < 1-eps),
// one transition uniform per arm in index order (next state 1 iff
// u < p11/p01), and finally any draws the policy itself needs. Observation
// and transition uniforms are drawn for every arm whether or not they are
// used, so the world realization does not depend on the policy.
EpisodeResult run_episode(const BanditConfig& config, const PolicySpec& policy,
                          WhittleIndexCache* cache = nullptr);

struct MonteCarloResult {
    double mean = 0.0;
    double stderr_of_mean = 0.0;  // NaN when episodes == 1
    int episodes = 0;
};

// Mean discounted total over independently seeded episodes
// (seed_i = mix64(config.seed ^ i)). One index cache is shared by the run.
MonteCarloResult monte_carlo(const BanditConfig& config, const PolicySpec& policy, int episodes);

}  // namespace whittle
