#include "whittle/crossing.hpp"

#include <cmath>
#include <stdexcept>

namespace whittle {

CrossingTime CrossingTime::finite(long k) {
    if (k < 0) throw std::invalid_argument("CrossingTime: negative step count");
    CrossingTime t;
    t.finite_ = true;
    t.steps_ = k;
    return t;
}

long CrossingTime::steps() const {
    if (!finite_) throw std::logic_error("CrossingTime: crossing never happens");
    return steps_;
}

CrossingTime first_crossing_time(double omega, double threshold, const TransitionMatrix& P) {
    P.validate();
    if (omega > threshold) return CrossingTime::finite(0);
    if (threshold >= 1.0) return CrossingTime::never();

    if (P.p11 > P.p01) {
        const double wo = stationary_belief(P);
        if (threshold >= wo) return CrossingTime::never();
        // omega <= threshold < wo: the trajectory rises strictly toward wo,
        // so the crossing index satisfies r^L < (wo - threshold)/(wo - omega).
        const double r = P.p11 - P.p01;
        const double ratio = (wo - threshold) / (wo - omega);
        long L = static_cast<long>(std::floor(std::log(ratio) / std::log(r))) + 1;
        if (L < 1) L = 1;
        while (L > 1 && tau_k(omega, P, L - 1) > threshold) --L;
        while (tau_k(omega, P, L) <= threshold) ++L;
        return CrossingTime::finite(L);
    }

    // p11 < p01: iterates after the first step are trapped between tau(omega)
    // and omega, so either step 1 crosses or nothing ever does.
    if (tau(omega, P) > threshold) return CrossingTime::finite(1);
    return CrossingTime::never();
}

}  // namespace whittle
