#pragma once

#include <vector>

#include "whittle/index.hpp"
#include "whittle/model.hpp"

namespace whittle {

// Distinct 0-based arm indices in increasing order.
using ActionSet = std::vector<int>;

// Indices of the select_count largest scores; ties go to the smallest arm
// index. The result is sorted ascending.
ActionSet select_top(const std::vector<double>& scores, int select_count);

// Top select_count arms by approximated Whittle index; ties go to the
// smallest arm index.
ActionSet select_whittle(const std::vector<double>& beliefs, const std::vector<ArmModel>& arms,
                         double epsilon, double beta, int iterations, int select_count);

// Top select_count arms by immediate expected value omega_i * B_i; ties go to
// the smallest arm index.
ActionSet select_myopic(const std::vector<double>& beliefs, const std::vector<ArmModel>& arms,
                        int select_count);

struct FiniteHorizonValue {
    double value = 0.0;
    double active = 0.0;
    double passive = 0.0;
};

// Horizon above which the exact finite-horizon tree walk is refused.
inline constexpr int kFiniteHorizonCap = 25;

// Exact finite-horizon value of the subsidized single-arm problem, by direct
// expansion of the optimality recursion (no grid, no interpolation). The
// values V_t(p11) are computed once and shared across the walk, which leaves
// O(2^T) work per evaluation. horizon > kFiniteHorizonCap throws BudgetError.
class FiniteHorizonEvaluator {
  public:
    FiniteHorizonEvaluator(const TransitionMatrix& P, double epsilon, double beta,
                           double subsidy, int horizon);

    FiniteHorizonValue evaluate(double omega) const;
    int horizon() const { return horizon_; }

  private:
    double value(double omega, int t) const;

    TransitionMatrix P_;
    double epsilon_;
    double beta_;
    double subsidy_;
    int horizon_;
    std::vector<double> p11_value_;
};

FiniteHorizonValue single_arm_finite_value(double omega, const TransitionMatrix& P,
                                           double epsilon, double beta, double subsidy,
                                           int horizon);

// Action pattern of the exact finite-horizon policy over a belief grid.
// A proper threshold pattern is passive up to some belief and active beyond
// it; anything interleaved is flagged as non_threshold.
struct ThresholdScan {
    enum class Kind { all_active, all_passive, threshold, non_threshold };
    Kind kind = Kind::non_threshold;
    // Largest grid belief at which the policy stays passive (Kind::threshold).
    double threshold = 0.0;
};

ThresholdScan single_arm_threshold_scan(const TransitionMatrix& P, double epsilon, double beta,
                                        double subsidy, int horizon, double grid_step);

// Size limits for the exact joint dynamic program (the enumeration grows as
// (C(N,M)*2^M)^T).
inline constexpr int kJointMaxArms = 5;
inline constexpr int kJointMaxSelect = 2;
inline constexpr int kJointMaxHorizon = 6;

// Exact expected discounted reward of the optimal joint policy over `horizon`
// slots: at every node all M-subsets are enumerated and chosen arms branch on
// ACK vs no-ACK. Throws BudgetError beyond the limits above.
double joint_optimal_value(const BanditConfig& config, int horizon);

}  // namespace whittle
