#pragma once

#include <utility>
#include <vector>

#include "whittle/belief.hpp"
#include "whittle/crossing.hpp"

namespace whittle {

// Value of the subsidized single-arm problem as an affine function of the
// subsidy m. Keeping the m-dependence symbolic lets one factorization of the
// chain system produce the exact subsidy at which active and passive values
// meet, instead of re-solving at sampled subsidies.
struct AffineValue {
    double intercept = 0.0;
    double slope = 0.0;

    double at(double m) const { return intercept + slope * m; }
};

// How the finite chain closes the recursion at its last tracked belief.
enum class ChainClosure {
    repeat_last,  // V(k_{n+1}) := V(k_n)   (default)
    zero_tail,    // V(k_{n+1}) := 0
};

struct IndexParams {
    TransitionMatrix P;
    double epsilon = 0.1;
    double beta = 0.9;
    int iterations = 4;
    ChainClosure closure = ChainClosure::repeat_last;

    void validate() const;
};

struct IndexQuery {
    double omega = 0.0;
    TransitionMatrix P;
    double epsilon = 0.1;
    double beta = 0.9;
    double reward = 1.0;  // per-ACK reward B of the arm
    int iterations = 4;
    ChainClosure closure = ChainClosure::repeat_last;

    IndexParams params() const { return {P, epsilon, beta, iterations, closure}; }
    void validate() const;
};

// One step of the belief map driving the chain: probe once the threshold is
// first exceeded and no ACK comes back, i.e. tau(phi(tau_L(omega))) with
// L = first_crossing_time(omega, threshold). Throws CrossingNeverHappensError
// when L is infinite.
double f_map(double omega, double threshold, const TransitionMatrix& P,
             const ObservationModel& obs);

// [k0, k1, ..., kn] with k_{i+1} = f_map(k_i, threshold). A never-crossing
// step aborts with CrossingNeverHappensError carrying the failing index.
std::vector<double> k_sequence(double k0, double threshold, const TransitionMatrix& P,
                               const ObservationModel& obs, int n);

// Subsidized single-arm value function under a fixed activation threshold,
// approximated by the n-iteration chain system.
//
// For iterations >= 1 the unknowns are V(p11), V(k1), ..., V(kn) along the
// k-sequence started at p11, closed per ChainClosure; a belief whose crossing
// never happens contributes the always-passive value m/(1-beta) and ends the
// sequence. iterations == 0 uses the two-point approximation instead: the
// no-ACK continuation is collapsed onto p01 and the unknowns are V(p11) and
// V(p01). That two-point system is what the closed-form index expressions
// solve, so the two agree.
//
// Throws SolverDegenerateError if the linear system loses rank.
class ValueChain {
  public:
    static ValueChain solve(double threshold, const IndexParams& params);

    double threshold() const { return threshold_; }
    const IndexParams& params() const { return params_; }
    const std::vector<double>& beliefs() const { return beliefs_; }
    const std::vector<AffineValue>& values() const { return values_; }

    AffineValue value_p11() const { return values_.front(); }

    // V(omega) by expanding the recursion from omega through its own
    // k-sequence, to the same depth and with the same closure as the chain,
    // taking V(p11) from the solved system.
    AffineValue value_at(double omega) const;

    // V(omega; u=1) and V(omega; u=0) at this chain's threshold.
    AffineValue value_active(double omega) const;
    AffineValue value_passive(double omega) const;

  private:
    AffineValue expand(double omega, int depth) const;

    double threshold_ = 0.0;
    IndexParams params_;
    std::vector<double> beliefs_;
    std::vector<AffineValue> values_;
    bool two_point_ = false;  // iterations == 0 layout: beliefs_ = {p11, p01}
};

// Expected discounted passive time under the same threshold approximation.
// Values lie in [0, 1/(1-beta)] and do not depend on the subsidy.
class PassiveTimeChain {
  public:
    static PassiveTimeChain solve(double threshold, const IndexParams& params);

    double threshold() const { return threshold_; }
    const std::vector<double>& beliefs() const { return beliefs_; }
    const std::vector<double>& values() const { return values_; }

    double at_p11() const { return values_.front(); }
    double at(double omega) const;

  private:
    double expand(double omega, int depth) const;

    double threshold_ = 0.0;
    IndexParams params_;
    std::vector<double> beliefs_;
    std::vector<double> values_;
    bool two_point_ = false;
};

// Subsidy m at which active and passive values meet, scaled by the arm
// reward: the approximated Whittle index W(omega) = B * m*(omega). The chain
// is solved at threshold omega with unit reward; if the affine slopes of the
// two branches coincide (or the chain system degenerates) the index falls
// back to omega * B.
double whittle_index(const IndexQuery& query);

// Solves intercept_active + m*slope_active = intercept_passive + m*slope_passive
// and scales by the arm reward; falls back to omega*reward when the slope gap
// is below slope_tolerance. Exposed mainly so the fallback path is testable.
double solve_index_equation(const AffineValue& active, const AffineValue& passive,
                            double omega, double reward, double slope_tolerance = 1e-12);

// Piecewise closed form of the 0-iteration index (unit reward). Four branches
// for p11 > p01, five for p01 > p11; the top branch is (1-eps)*omega in both
// orderings.
double closed_form_whittle_index(double omega, const TransitionMatrix& P,
                                 const ObservationModel& obs, double beta);

// Margin of the passive-time inequality certifying that raising the subsidy
// cannot shrink the passive region at this threshold:
//   1 + beta*D(tau(w)) - beta*[(1-eps)w*D(p11) + (1-(1-eps)w)*D(tau(phi(w)))]
// evaluated at w = threshold. Positive margin certifies the threshold.
double indexability_margin(double threshold, const IndexParams& params);
bool check_indexability(double threshold, const IndexParams& params);

// Largest discount factor for which the single-arm threshold structure is
// guaranteed:  1/((3-eps)(p11-p01)) for p11 > p01, 1/((5-2eps)(p01-p11))
// otherwise (uncapped).
double threshold_condition_bound(const TransitionMatrix& P, const ObservationModel& obs);

// Discount bound under which both the threshold structure and indexability
// are guaranteed: min(threshold_condition_bound, 0.5).
double threshold_beta_bound(const TransitionMatrix& P, const ObservationModel& obs);

// True iff the index samples (belief, W) are nondecreasing in W once sorted
// by belief; entries may be supplied in any order. A decrease no larger than
// tolerance is ignored.
bool monitor_index_monotonicity(std::vector<std::pair<double, double>> history,
                                double tolerance = 0.0);

}  // namespace whittle
