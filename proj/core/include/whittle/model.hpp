#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "whittle/belief.hpp"

namespace whittle {

// One restless arm: its state chain and the reward B collected per
// acknowledged probe.
struct ArmModel {
    TransitionMatrix P;
    double reward = 1.0;

    void validate() const;
};

// Full description of a bandit instance for simulation and planning.
// select_count is the number of arms probed per slot (M). All arms share one
// observation channel. delta (miss detection) is carried through configuration
// files untouched; no computation reads it.
struct BanditConfig {
    std::vector<ArmModel> arms;
    int select_count = 1;
    double epsilon = 0.1;
    double beta = 0.9;
    int horizon = 100;
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> initial_beliefs;
    double delta = 0.0;

    void validate() const;

    // initial_beliefs when given, otherwise each arm's stationary belief.
    std::vector<double> resolved_initial_beliefs() const;
};

}  // namespace whittle
