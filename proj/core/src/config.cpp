#include "whittle/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace whittle {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

double parse_double(const std::string& key, const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': bad number '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument("config key '" + key + "': bad number '" + token + "'");
    return value;
}

std::vector<double> parse_array(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& token : tokenize(value)) out.push_back(parse_double(key, token));
    if (out.empty()) throw std::invalid_argument("config key '" + key + "': empty array");
    return out;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

BanditConfig parse_bandit_config(const std::string& text) {
    std::vector<double> p11, p01, reward, initial;
    bool have_p11 = false, have_p01 = false, have_reward = false, have_initial = false;

    BanditConfig config;
    std::istringstream in(text);
    std::string raw_line;
    int line_number = 0;
    while (std::getline(in, raw_line)) {
        ++line_number;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos) raw_line.erase(hash);
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": expected key = value");

        if (key == "p11") {
            p11 = parse_array(key, value);
            have_p11 = true;
        } else if (key == "p01") {
            p01 = parse_array(key, value);
            have_p01 = true;
        } else if (key == "reward") {
            reward = parse_array(key, value);
            have_reward = true;
        } else if (key == "initial_beliefs") {
            initial = parse_array(key, value);
            have_initial = true;
        } else if (key == "m") {
            config.select_count = static_cast<int>(parse_double(key, value));
        } else if (key == "epsilon") {
            config.epsilon = parse_double(key, value);
        } else if (key == "delta") {
            config.delta = parse_double(key, value);
        } else if (key == "beta") {
            config.beta = parse_double(key, value);
        } else if (key == "horizon") {
            config.horizon = static_cast<int>(parse_double(key, value));
        } else if (key == "seed") {
            try {
                config.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw std::invalid_argument("config key 'seed': bad integer '" + value + "'");
            }
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": unknown key '" + key + "'");
        }
    }

    if (!have_p11 || !have_p01)
        throw std::invalid_argument("config requires both p11 and p01 arrays");
    if (p11.size() != p01.size())
        throw std::invalid_argument("p11 and p01 arrays must have equal length");
    if (have_reward && reward.size() != p11.size())
        throw std::invalid_argument("reward array must match p11/p01 length");

    config.arms.resize(p11.size());
    for (std::size_t i = 0; i < p11.size(); ++i) {
        config.arms[i].P = TransitionMatrix{p01[i], p11[i]};
        config.arms[i].reward = have_reward ? reward[i] : 1.0;
    }
    if (have_initial) config.initial_beliefs = initial;

    config.validate();
    return config;
}

BanditConfig load_bandit_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bandit_config(buffer.str());
}

std::string serialize_bandit_config(const BanditConfig& config) {
    config.validate();
    std::ostringstream out;
    auto write_array = [&out, &config](const char* key, auto get) {
        out << key << " =";
        for (std::size_t i = 0; i < config.arms.size(); ++i) out << ' ' << fmt_double(get(i));
        out << '\n';
    };
    write_array("p11", [&config](std::size_t i) { return config.arms[i].P.p11; });
    write_array("p01", [&config](std::size_t i) { return config.arms[i].P.p01; });
    write_array("reward", [&config](std::size_t i) { return config.arms[i].reward; });
    out << "m = " << config.select_count << '\n';
    out << "epsilon = " << fmt_double(config.epsilon) << '\n';
    out << "delta = " << fmt_double(config.delta) << '\n';
    out << "beta = " << fmt_double(config.beta) << '\n';
    out << "horizon = " << config.horizon << '\n';
    out << "seed = " << config.seed << '\n';
    const std::vector<double> beliefs = config.resolved_initial_beliefs();
    out << "initial_beliefs =";
    for (double b : beliefs) out << ' ' << fmt_double(b);
    out << '\n';
    return out.str();
}

}  // namespace whittle
