#pragma once

#include "whittle/belief.hpp"

namespace whittle {

// First slot index k >= 0 at which the k-step passive update of a belief
// strictly exceeds a threshold. The crossing may never happen; that outcome
// is an explicit state of this type, never a sentinel value.
class CrossingTime {
  public:
    static CrossingTime finite(long k);
    static CrossingTime never() { return CrossingTime{}; }

    bool is_finite() const { return finite_; }
    // Throws std::logic_error when the crossing never happens.
    long steps() const;

    friend bool operator==(const CrossingTime&, const CrossingTime&) = default;

  private:
    bool finite_ = false;
    long steps_ = 0;
};

// L(omega, threshold) = min{ k >= 0 : tau_k(omega) > threshold }.
//
// Evaluated by case analysis rather than iteration. For p11 > p01 the
// trajectory climbs monotonically toward the stationary belief, so the
// crossing index comes from a floor(log) expression; the float result is
// verified against tau_k and nudged by one step if rounding put it off.
// For p11 < p01 the trajectory oscillates and only k in {0, 1} can cross.
CrossingTime first_crossing_time(double omega, double threshold, const TransitionMatrix& P);

}  // namespace whittle
