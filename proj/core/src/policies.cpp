#include "whittle/policies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "whittle/errors.hpp"

namespace whittle {

ActionSet select_top(const std::vector<double>& scores, int select_count) {
    if (select_count < 1 || select_count > static_cast<int>(scores.size()))
        throw std::invalid_argument("select_count must satisfy 1 <= M <= N");
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    ActionSet chosen(order.begin(), order.begin() + select_count);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

void check_selection_args(const std::vector<double>& beliefs, const std::vector<ArmModel>& arms,
                          int select_count) {
    if (arms.empty() || beliefs.size() != arms.size())
        throw std::invalid_argument("beliefs and arms must have equal nonzero size");
    if (select_count < 1 || select_count >= static_cast<int>(arms.size()))
        throw std::invalid_argument("select_count must satisfy 1 <= M < N");
}

}  // namespace

ActionSet select_whittle(const std::vector<double>& beliefs, const std::vector<ArmModel>& arms,
                         double epsilon, double beta, int iterations, int select_count) {
    check_selection_args(beliefs, arms, select_count);
    std::vector<double> scores(arms.size());
    for (std::size_t i = 0; i < arms.size(); ++i) {
        IndexQuery q;
        q.omega = beliefs[i];
        q.P = arms[i].P;
        q.epsilon = epsilon;
        q.beta = beta;
        q.reward = arms[i].reward;
        q.iterations = iterations;
        scores[i] = whittle_index(q);
    }
    return select_top(scores, select_count);
}

ActionSet select_myopic(const std::vector<double>& beliefs, const std::vector<ArmModel>& arms,
                        int select_count) {
    check_selection_args(beliefs, arms, select_count);
    std::vector<double> scores(arms.size());
    for (std::size_t i = 0; i < arms.size(); ++i) scores[i] = beliefs[i] * arms[i].reward;
    return select_top(scores, select_count);
}

FiniteHorizonEvaluator::FiniteHorizonEvaluator(const TransitionMatrix& P, double epsilon,
                                               double beta, double subsidy, int horizon)
    : P_(P), epsilon_(epsilon), beta_(beta), subsidy_(subsidy), horizon_(horizon) {
    P_.validate();
    ObservationModel{epsilon_}.validate();
    if (!(beta_ > 0.0 && beta_ < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (horizon_ < 0) throw std::invalid_argument("horizon must be nonnegative");
    if (horizon_ > kFiniteHorizonCap)
        throw BudgetError("finite-horizon walk refused: horizon " + std::to_string(horizon_) +
                          " exceeds cap " + std::to_string(kFiniteHorizonCap) +
                          " (cost grows as 2^T)");
    p11_value_.assign(static_cast<std::size_t>(horizon_) + 1, 0.0);
    for (int t = 1; t <= horizon_; ++t) p11_value_[t] = value(P_.p11, t);
}

double FiniteHorizonEvaluator::value(double omega, int t) const {
    if (t == 0) return 0.0;
    const ObservationModel obs{epsilon_};
    const double aw = (1.0 - epsilon_) * omega;
    const double active = aw * (1.0 + beta_ * p11_value_[t - 1]) +
                          (1.0 - aw) * beta_ * value(tau_phi(omega, P_, obs), t - 1);
    const double passive = subsidy_ + beta_ * value(tau(omega, P_), t - 1);
    return std::max(active, passive);
}

FiniteHorizonValue FiniteHorizonEvaluator::evaluate(double omega) const {
    if (horizon_ == 0) return {};
    const ObservationModel obs{epsilon_};
    const double aw = (1.0 - epsilon_) * omega;
    FiniteHorizonValue out;
    out.active = aw * (1.0 + beta_ * p11_value_[horizon_ - 1]) +
                 (1.0 - aw) * beta_ * value(tau_phi(omega, P_, obs), horizon_ - 1);
    out.passive = subsidy_ + beta_ * value(tau(omega, P_), horizon_ - 1);
    out.value = std::max(out.active, out.passive);
    return out;
}

FiniteHorizonValue single_arm_finite_value(double omega, const TransitionMatrix& P,
                                           double epsilon, double beta, double subsidy,
                                           int horizon) {
    return FiniteHorizonEvaluator(P, epsilon, beta, subsidy, horizon).evaluate(omega);
}

ThresholdScan single_arm_threshold_scan(const TransitionMatrix& P, double epsilon, double beta,
                                        double subsidy, int horizon, double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 1.0))
        throw std::invalid_argument("grid_step must lie in (0, 1]");
    const FiniteHorizonEvaluator eval(P, epsilon, beta, subsidy, horizon);

    const long cells = std::lround(1.0 / grid_step);
    std::vector<char> active;
    active.reserve(cells + 1);
    for (long i = 0; i <= cells; ++i) {
        const double omega = std::min(1.0, static_cast<double>(i) * grid_step);
        const FiniteHorizonValue v = eval.evaluate(omega);
        active.push_back(v.active > v.passive ? 1 : 0);  // tie stays passive
    }

    const long first_active = std::find(active.begin(), active.end(), 1) - active.begin();
    const long count = static_cast<long>(active.size());
    for (long i = first_active; i < count; ++i)
        if (!active[i]) return {ThresholdScan::Kind::non_threshold, 0.0};

    if (first_active == count) return {ThresholdScan::Kind::all_passive, 1.0};
    if (first_active == 0) return {ThresholdScan::Kind::all_active, 0.0};
    const double last_passive = static_cast<double>(first_active - 1) * grid_step;
    return {ThresholdScan::Kind::threshold, last_passive};
}

namespace {

double joint_value(const BanditConfig& cfg, const std::vector<ActionSet>& subsets,
                   const std::vector<double>& beliefs, int t, int horizon) {
    if (t == horizon) return 0.0;
    const ObservationModel obs{cfg.epsilon};
    const int m = cfg.select_count;
    double best = -1.0;
    std::vector<double> next(beliefs.size());
    for (const ActionSet& chosen : subsets) {
        double immediate = 0.0;
        for (int i : chosen) immediate += (1.0 - cfg.epsilon) * beliefs[i] * cfg.arms[i].reward;
        double value = immediate;
        for (unsigned pattern = 0; pattern < (1u << m); ++pattern) {
            double prob = 1.0;
            for (std::size_t i = 0; i < beliefs.size(); ++i) next[i] = tau(beliefs[i], cfg.arms[i].P);
            for (int j = 0; j < m; ++j) {
                const int arm = chosen[j];
                const double ack_prob = (1.0 - cfg.epsilon) * beliefs[arm];
                if (pattern & (1u << j)) {
                    prob *= ack_prob;
                    next[arm] = cfg.arms[arm].P.p11;
                } else {
                    prob *= 1.0 - ack_prob;
                    next[arm] = tau_phi(beliefs[arm], cfg.arms[arm].P, obs);
                }
            }
            if (prob > 0.0)
                value += cfg.beta * prob * joint_value(cfg, subsets, next, t + 1, horizon);
        }
        best = std::max(best, value);
    }
    return best;
}

void enumerate_subsets(int n, int m, int start, ActionSet& scratch, std::vector<ActionSet>& out) {
    if (static_cast<int>(scratch.size()) == m) {
        out.push_back(scratch);
        return;
    }
    for (int i = start; i < n; ++i) {
        scratch.push_back(i);
        enumerate_subsets(n, m, i + 1, scratch, out);
        scratch.pop_back();
    }
}

}  // namespace

double joint_optimal_value(const BanditConfig& config, int horizon) {
    config.validate();
    const int n = static_cast<int>(config.arms.size());
    if (n > kJointMaxArms || config.select_count > kJointMaxSelect || horizon > kJointMaxHorizon)
        throw BudgetError("joint dynamic program refused: limits are N <= " +
                          std::to_string(kJointMaxArms) + ", M <= " +
                          std::to_string(kJointMaxSelect) + ", T <= " +
                          std::to_string(kJointMaxHorizon));
    if (horizon < 1) throw std::invalid_argument("horizon must be positive");

    std::vector<ActionSet> subsets;
    ActionSet scratch;
    enumerate_subsets(n, config.select_count, 0, scratch, subsets);
    return joint_value(config, subsets, config.resolved_initial_beliefs(), 0, horizon);
}

}  // namespace whittle
