#pragma once

namespace whittle {

// Two-state Markov chain given by its two defining transition probabilities.
// p01 = Pr(S' = 1 | S = 0), p11 = Pr(S' = 1 | S = 1); complements are derived.
// The chain is positively correlated when p11 > p01 (a good state tends to
// stay good) and negatively correlated when p11 < p01.
struct TransitionMatrix {
    double p01 = 0.0;
    double p11 = 0.0;

    constexpr double p00() const { return 1.0 - p01; }
    constexpr double p10() const { return 1.0 - p11; }
    constexpr bool positively_correlated() const { return p11 > p01; }

    // Throws std::invalid_argument unless 0 < p01 < 1, 0 < p11 < 1 and
    // p01 != p11.
    void validate() const;
};

// Observation channel for a probed arm. epsilon is the false-alarm rate
// Pr(O = 0 | S = 1): a good state is missed with probability epsilon.
// A miss-detection rate can appear in configuration files for completeness
// but plays no role in any computation here (an acknowledgement requires
// S = 1 and O = 1, so only epsilon enters the reward and belief updates).
struct ObservationModel {
    double epsilon = 0.0;

    // Throws std::invalid_argument unless 0 <= epsilon < 1.
    void validate() const;
};

// One-step passive belief update: tau(w) = w*p11 + (1-w)*p01.
double tau(double omega, const TransitionMatrix& P);

// k-step passive update, evaluated in closed form (O(1) in k):
//   tau_k(w) = wo + (p11 - p01)^k * (w - wo)
// where wo is the stationary belief. k = 0 returns omega. Throws
// std::invalid_argument for k < 0.
double tau_k(double omega, const TransitionMatrix& P, long k);

// Fixed point of tau: wo = p01 / (p01 + p10).
double stationary_belief(const TransitionMatrix& P);

// Bayes posterior of S = 1 after probing at belief omega and not receiving an
// acknowledgement: phi(w) = eps*w / (eps*w + 1 - w). Throws std::domain_error
// in the degenerate case epsilon = 0, omega = 1 (no-ACK has probability 0).
double phi(double omega, const ObservationModel& obs);

// tau(phi(omega)): the belief one slot after probing without an ACK.
double tau_phi(double omega, const TransitionMatrix& P, const ObservationModel& obs);

// Belief carried into the next slot. chosen says whether the arm was probed,
// ack whether the probe was acknowledged. ack && !chosen is a contract
// violation (throws std::invalid_argument).
double update_belief(double omega, const TransitionMatrix& P, const ObservationModel& obs,
                     bool chosen, bool ack);

// Lipschitz constant of the infinite-horizon subsidized value function in the
// belief argument:
//   C = (1 - eps) / (1 - (2 - eps) * beta * |p11 - p01|),
// valid when beta < 1 / ((2 - eps) * |p11 - p01|); otherwise throws
// BoundInapplicableError.
double lipschitz_bound(const TransitionMatrix& P, const ObservationModel& obs, double beta);

}  // namespace whittle
