#include "whittle/presets.hpp"

#include <cstdio>
#include <stdexcept>

namespace whittle {

std::vector<ArmModel> SystemPreset::arms() const {
    std::vector<ArmModel> out(p11.size());
    for (std::size_t i = 0; i < p11.size(); ++i) {
        out[i].P = TransitionMatrix{p01[i], p11[i]};
        out[i].reward = reward[i];
    }
    return out;
}

const std::vector<SystemPreset>& system_presets() {
    static const std::vector<SystemPreset> systems = {
        {1,
         {0.3, 0.6, 0.4, 0.7, 0.2, 0.6, 0.8},
         {0.1, 0.4, 0.3, 0.4, 0.1, 0.3, 0.5},
         {0.8800, 0.2200, 0.3300, 0.1930, 1.0000, 0.2558, 0.1549}},
        {2,
         {0.6, 0.4, 0.2, 0.2, 0.4, 0.1, 0.3},
         {0.8, 0.6, 0.4, 0.9, 0.8, 0.6, 0.7},
         {0.5150, 0.6666, 1.0000, 0.6296, 0.5833, 0.8100, 0.6700}},
        {3,
         {0.1, 0.4, 0.3, 0.4, 0.1, 0.3, 0.5},
         {0.3, 0.6, 0.4, 0.7, 0.2, 0.6, 0.8},
         {0.7273, 0.3636, 0.5000, 0.3377, 1.0000, 0.3939, 0.2955}},
        {4,
         {0.6, 0.7, 0.2, 0.6, 0.4, 0.5, 0.3},
         {0.8, 0.4, 0.9, 0.5, 0.7, 0.2, 0.6},
         {0.4286, 0.5000, 0.5397, 0.5143, 0.5306, 1.0000, 0.6190}},
    };
    return systems;
}

const std::vector<ExamplePreset>& example_presets() {
    static const std::vector<ExamplePreset> examples = {
        {1, 1, 0.3, 0.999, true, false},
        {2, 1, 0.1, 0.999, true, false},
        {3, 2, 0.3, 0.29, true, true},
        {4, 2, 0.1, 0.29, true, true},
        {5, 2, 0.3, 0.48, false, true},
        {6, 2, 0.1, 0.48, false, true},
        {7, 3, 0.3, 0.69, true, false},
        {8, 3, 0.1, 0.69, true, false},
        {9, 3, 0.3, 0.48, true, true},
        {10, 3, 0.1, 0.48, true, true},
        {11, 4, 0.3, 0.29, true, true},
        {12, 4, 0.1, 0.29, true, true},
        {13, 4, 0.3, 0.48, false, true},
        {14, 4, 0.1, 0.48, false, true},
        {15, 4, 0.3, 0.999, false, false},
        {16, 4, 0.1, 0.999, false, false},
    };
    return examples;
}

const SystemPreset& find_system(int id) {
    for (const SystemPreset& s : system_presets())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown system id: " + std::to_string(id));
}

const ExamplePreset& find_example(int id) {
    for (const ExamplePreset& e : example_presets())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown example id: " + std::to_string(id));
}

std::vector<ArmModel> system_arms(int system_id) { return find_system(system_id).arms(); }

BanditConfig example_config(int example_id) {
    const ExamplePreset& example = find_example(example_id);
    BanditConfig config;
    config.arms = system_arms(example.system);
    config.select_count = 1;
    config.epsilon = example.epsilon;
    config.beta = example.beta;
    config.horizon = 100;
    config.seed = 0;
    return config;
}

namespace {

void feed(std::string& bytes, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f,", value);
    bytes += buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace

std::uint64_t presets_checksum() {
    std::string bytes;
    for (const SystemPreset& s : system_presets()) {
        bytes += "system" + std::to_string(s.id) + ":";
        for (double v : s.p11) feed(bytes, v);
        for (double v : s.p01) feed(bytes, v);
        for (double v : s.reward) feed(bytes, v);
    }
    for (const ExamplePreset& e : example_presets()) {
        bytes += "example" + std::to_string(e.id) + ":" + std::to_string(e.system) + ",";
        feed(bytes, e.epsilon);
        feed(bytes, e.beta);
        bytes += e.meets_threshold ? "t," : "f,";
        bytes += e.meets_indexability ? "t," : "f,";
    }
    return fnv1a64(bytes);
}

}  // namespace whittle
