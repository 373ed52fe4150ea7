#include "whittle/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "whittle/errors.hpp"

namespace whittle {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_prob(double p, const char* name) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument(std::string(name) + " must lie strictly inside (0, 1)");
}

}  // namespace

void TransitionMatrix::validate() const {
    check_prob(p01, "p01");
    check_prob(p11, "p11");
    if (p01 == p11)
        throw std::invalid_argument("p01 == p11: chain state carries no information");
}

void ObservationModel::validate() const {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1)");
}

double tau(double omega, const TransitionMatrix& P) {
    return clamp01(omega * P.p11 + (1.0 - omega) * P.p01);
}

double tau_k(double omega, const TransitionMatrix& P, long k) {
    if (k < 0) throw std::invalid_argument("tau_k: k must be nonnegative");
    if (k == 0) return clamp01(omega);
    const double wo = stationary_belief(P);
    const double r = P.p11 - P.p01;
    return clamp01(wo + std::pow(r, static_cast<double>(k)) * (omega - wo));
}

double stationary_belief(const TransitionMatrix& P) {
    return clamp01(P.p01 / (P.p01 + P.p10()));
}

double phi(double omega, const ObservationModel& obs) {
    const double denom = obs.epsilon * omega + 1.0 - omega;
    if (denom <= 0.0)
        throw std::domain_error("phi: posterior undefined (epsilon = 0 and omega = 1)");
    return clamp01(obs.epsilon * omega / denom);
}

double tau_phi(double omega, const TransitionMatrix& P, const ObservationModel& obs) {
    return tau(phi(omega, obs), P);
}

double update_belief(double omega, const TransitionMatrix& P, const ObservationModel& obs,
                     bool chosen, bool ack) {
    if (ack && !chosen)
        throw std::invalid_argument("update_belief: ack without the arm being chosen");
    if (!chosen) return tau(omega, P);
    if (ack) return clamp01(P.p11);
    return tau_phi(omega, P, obs);
}

double lipschitz_bound(const TransitionMatrix& P, const ObservationModel& obs, double beta) {
    const double spread = std::fabs(P.p11 - P.p01);
    const double limit = 1.0 / ((2.0 - obs.epsilon) * spread);
    if (!(beta < limit))
        throw BoundInapplicableError(
            "lipschitz_bound: requires beta < 1/((2-eps)|p11-p01|) = " + std::to_string(limit));
    return (1.0 - obs.epsilon) / (1.0 - (2.0 - obs.epsilon) * beta * spread);
}

}  // namespace whittle
