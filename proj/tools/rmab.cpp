// Experiment runner for the restless-bandit library: Monte Carlo policy
// comparisons, index sweeps, and condition certification, all emitted as
// CSV/text with enough header detail to re-run bit-identically.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "whittle/config.hpp"
#include "whittle/experiment.hpp"
#include "whittle/model.hpp"
#include "whittle/presets.hpp"
#include "whittle/sim.hpp"

namespace {

struct CommonSelection {
    int system = 0;
    int example = 0;
    std::string config_path;
};

void add_selection_flags(CLI::App* cmd, CommonSelection* sel) {
    cmd->add_option("--system", sel->system, "Bundled system preset id (1-4)");
    cmd->add_option("--example", sel->example, "Bundled example preset id (1-16)");
    cmd->add_option("--config", sel->config_path, "Bandit config file (key = value lines)");
}

whittle::BanditConfig resolve_config(const CommonSelection& sel) {
    const int picked = (sel.system ? 1 : 0) + (sel.example ? 1 : 0) +
                       (sel.config_path.empty() ? 0 : 1);
    if (picked != 1)
        throw std::invalid_argument("pick exactly one of --system, --example, --config");
    if (sel.example) return whittle::example_config(sel.example);
    if (!sel.config_path.empty()) return whittle::load_bandit_config(sel.config_path);
    whittle::BanditConfig config;
    config.arms = whittle::system_arms(sel.system);
    return config;
}

std::vector<whittle::PolicySpec> resolve_policies(const std::vector<std::string>& names,
                                                  int iterations) {
    std::vector<whittle::PolicySpec> out;
    for (const std::string& name : names) {
        whittle::PolicySpec spec;
        spec.iterations = iterations;
        if (name == "whittle")
            spec.kind = whittle::PolicyKind::whittle;
        else if (name == "myopic")
            spec.kind = whittle::PolicyKind::myopic;
        else if (name == "random")
            spec.kind = whittle::PolicyKind::random;
        else
            throw std::invalid_argument("unknown policy '" + name +
                                        "' (expected whittle, myopic, or random)");
        out.push_back(spec);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whittle index policies for restless bandits with noisy ACKs"};
    app.require_subcommand(1);

    CommonSelection run_sel;
    std::vector<std::string> policy_names{"whittle", "myopic"};
    std::vector<int> horizons{100};
    int episodes = 1000;
    int run_iters = 4;
    std::uint64_t seed = 0;
    double run_eps = -1.0, run_beta = -1.0;
    int run_m = 0;
    std::string run_out;
    CLI::App* run = app.add_subcommand("run-experiment",
                                       "Monte Carlo policy comparison table (CSV)");
    add_selection_flags(run, &run_sel);
    run->add_option("--policies", policy_names, "Policies to evaluate")->delimiter(',');
    run->add_option("--horizons", horizons, "Horizons to evaluate")->delimiter(',');
    run->add_option("--episodes", episodes, "Episodes per cell");
    run->add_option("--iters", run_iters, "Whittle chain iterations");
    CLI::Option* run_seed_opt = run->add_option("--seed", seed, "Base RNG seed");
    CLI::Option* run_eps_opt = run->add_option("--eps", run_eps, "Override false-alarm rate");
    CLI::Option* run_beta_opt = run->add_option("--beta", run_beta, "Override discount");
    CLI::Option* run_m_opt = run->add_option("--M", run_m, "Override arms probed per slot");
    run->add_option("--out", run_out, "Output path (default stdout)");

    double sw_p11 = 0.0, sw_p01 = 0.0, sw_eps = 0.1, sw_beta = 0.9, sw_reward = 1.0;
    double sw_grid = 1e-3;
    int sw_iters = 4, sw_arm = 0;
    CommonSelection sw_sel;
    std::string sw_out;
    CLI::App* sweep = app.add_subcommand("sweep-index",
                                         "Approximated index over a belief grid (CSV)");
    add_selection_flags(sweep, &sw_sel);
    CLI::Option* sw_p11_opt = sweep->add_option("--p11", sw_p11, "P(1 -> 1)");
    CLI::Option* sw_p01_opt = sweep->add_option("--p01", sw_p01, "P(0 -> 1)");
    sweep->add_option("--arm", sw_arm, "Arm index within --system/--example (0-based)");
    CLI::Option* sw_eps_opt = sweep->add_option("--eps", sw_eps, "False-alarm rate");
    CLI::Option* sw_beta_opt = sweep->add_option("--beta", sw_beta, "Discount");
    sweep->add_option("--B", sw_reward, "Arm reward");
    sweep->add_option("--iters", sw_iters, "Chain iterations");
    sweep->add_option("--grid", sw_grid, "Belief grid step");
    sweep->add_option("--out", sw_out, "Output path (default stdout)");

    CommonSelection ct_sel;
    double ct_p11 = 0.0, ct_p01 = 0.0, ct_eps = 0.1, ct_beta = 0.9, ct_grid = 0.01;
    int ct_iters = 4;
    std::string ct_out;
    CLI::App* cert = app.add_subcommand("certify",
                                        "Threshold/indexability condition report");
    add_selection_flags(cert, &ct_sel);
    CLI::Option* ct_p11_opt = cert->add_option("--p11", ct_p11, "P(1 -> 1)");
    CLI::Option* ct_p01_opt = cert->add_option("--p01", ct_p01, "P(0 -> 1)");
    CLI::Option* ct_eps_opt = cert->add_option("--eps", ct_eps, "False-alarm rate");
    CLI::Option* ct_beta_opt = cert->add_option("--beta", ct_beta, "Discount");
    cert->add_option("--iters", ct_iters, "Chain iterations");
    cert->add_option("--grid", ct_grid, "Threshold grid step");
    cert->add_option("--out", ct_out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            whittle::ExperimentSpec spec;
            spec.config = resolve_config(run_sel);
            if (run_seed_opt->count()) spec.config.seed = seed;
            if (run_eps_opt->count()) spec.config.epsilon = run_eps;
            if (run_beta_opt->count()) spec.config.beta = run_beta;
            if (run_m_opt->count()) spec.config.select_count = run_m;
            spec.policies = resolve_policies(policy_names, run_iters);
            spec.horizons = horizons;
            spec.episodes = episodes;
            emit(whittle::run_experiment_csv(spec), run_out);
        } else if (sweep->parsed()) {
            whittle::TransitionMatrix P;
            double eps = sw_eps, beta = sw_beta, reward = sw_reward;
            if (sw_p11_opt->count() || sw_p01_opt->count()) {
                if (!sw_p11_opt->count() || !sw_p01_opt->count())
                    throw std::invalid_argument("--p11 and --p01 must be given together");
                P = whittle::TransitionMatrix{sw_p01, sw_p11};
            } else {
                const whittle::BanditConfig config = resolve_config(sw_sel);
                if (sw_arm < 0 || sw_arm >= static_cast<int>(config.arms.size()))
                    throw std::invalid_argument("--arm out of range");
                P = config.arms[sw_arm].P;
                reward = config.arms[sw_arm].reward;
                if (!sw_eps_opt->count()) eps = config.epsilon;
                if (!sw_beta_opt->count()) beta = config.beta;
            }
            emit(whittle::sweep_index_csv(P, eps, beta, sw_iters, sw_grid, reward), sw_out);
        } else if (cert->parsed()) {
            std::vector<whittle::ArmModel> arms;
            double eps = ct_eps, beta = ct_beta;
            if (ct_p11_opt->count() || ct_p01_opt->count()) {
                if (!ct_p11_opt->count() || !ct_p01_opt->count())
                    throw std::invalid_argument("--p11 and --p01 must be given together");
                whittle::ArmModel arm;
                arm.P = whittle::TransitionMatrix{ct_p01, ct_p11};
                arms.push_back(arm);
            } else {
                const whittle::BanditConfig config = resolve_config(ct_sel);
                arms = config.arms;
                if (!ct_eps_opt->count()) eps = config.epsilon;
                if (!ct_beta_opt->count()) beta = config.beta;
            }
            emit(whittle::format_certify(whittle::certify(arms, eps, beta, ct_iters, ct_grid)),
                 ct_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
