#pragma once

#include <string>
#include <vector>

#include "whittle/index.hpp"
#include "whittle/model.hpp"
#include "whittle/sim.hpp"

namespace whittle {

// One experiment: Monte Carlo evaluation of a set of policies over a set of
// horizons on a fixed bandit, plus (when include_optimal) the exact joint
// dynamic program as an upper-bound row per horizon.
struct ExperimentSpec {
    BanditConfig config;
    std::vector<PolicySpec> policies;
    std::vector<int> horizons;
    int episodes = 1000;
    bool include_optimal = true;

    void validate() const;
};

// CSV with one row per (policy, horizon) cell: policy,horizon,mean,stderr.
// Optimal rows carry "na" in the stderr column, and in the mean column too
// when the instance exceeds the joint DP budget. The full resolved config and
// spec are embedded as leading comment lines, so the output can be re-run
// bit-identically. Cells are evaluated concurrently; assembly order is fixed.
std::string run_experiment_csv(const ExperimentSpec& spec);

// CSV of the approximated index over a belief grid: omega,index rows followed
// by a monotonicity verdict comment line (tolerance 1e-9). grid_step must
// give at least two points.
std::string sweep_index_csv(const TransitionMatrix& P, double epsilon, double beta,
                            int iterations, double grid_step, double reward = 1.0);

// Condition report for one arm.
struct ArmCertificate {
    TransitionMatrix P;
    double reward = 1.0;
    double threshold_bound = 0.0;  // largest beta with guaranteed threshold structure
    bool threshold_ok = false;     // beta <= threshold_bound
    bool indexability_ok = false;  // beta <= 0.5
    double min_margin = 0.0;       // smallest passive-time margin over the threshold grid
    bool margin_positive = false;
    bool sweep_monotone = false;   // index sweep over the grid is nondecreasing
};

struct CertifyReport {
    double epsilon = 0.0;
    double beta = 0.0;
    int iterations = 0;
    double grid_step = 0.0;
    std::vector<ArmCertificate> arms;
    // Conjunction over arms (the strict reading of a per-system verdict).
    bool all_threshold_ok = false;
    bool all_indexability_ok = false;
};

CertifyReport certify(const std::vector<ArmModel>& arms, double epsilon, double beta,
                      int iterations, double grid_step = 0.01);

std::string format_certify(const CertifyReport& report);

}  // namespace whittle
