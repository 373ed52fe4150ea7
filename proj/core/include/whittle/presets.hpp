#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whittle/model.hpp"

namespace whittle {

// Bundled benchmark systems: four fixed 7-arm parameter sets.
struct SystemPreset {
    int id = 0;
    std::vector<double> p11;
    std::vector<double> p01;
    std::vector<double> reward;

    std::vector<ArmModel> arms() const;
};

// Bundled examples: a system paired with an observation error and a discount
// factor, plus the published verdicts on whether the sufficient conditions
// for threshold structure and for indexability hold. Both verdicts are the
// conjunction over the system's arms (arms differ, so the strict reading is
// used; the certify report prints per-arm results alongside).
struct ExamplePreset {
    int id = 0;
    int system = 0;
    double epsilon = 0.0;
    double beta = 0.0;
    bool meets_threshold = false;
    bool meets_indexability = false;
};

const std::vector<SystemPreset>& system_presets();
const std::vector<ExamplePreset>& example_presets();

// Throw std::invalid_argument for unknown ids.
const SystemPreset& find_system(int id);
const ExamplePreset& find_example(int id);

std::vector<ArmModel> system_arms(int system_id);

// BanditConfig for an example: its system's arms, its epsilon and beta,
// M = 1, horizon 100, seed 0. Callers adjust fields afterwards as needed.
BanditConfig example_config(int example_id);

// FNV-1a over a canonical rendering of every preset number, so tests can pin
// the bundled data against accidental edits.
std::uint64_t presets_checksum();

}  // namespace whittle
