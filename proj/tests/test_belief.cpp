#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "whittle/belief.hpp"
#include "whittle/errors.hpp"
#include "whittle/rng.hpp"

using namespace whittle;

namespace {
TransitionMatrix random_matrix(Xoshiro256pp& rng) {
    for (;;) {
        const double p01 = 0.01 + 0.98 * rng.uniform();
        const double p11 = 0.01 + 0.98 * rng.uniform();
        if (std::fabs(p01 - p11) > 1e-3) return TransitionMatrix{p01, p11};
    }
}
}  // namespace

TEST_CASE("transition matrix invariants") {
    TransitionMatrix P{0.3, 0.6};
    CHECK(P.p00() == doctest::Approx(0.7));
    CHECK(P.p10() == doctest::Approx(0.4));
    CHECK(P.positively_correlated());
    CHECK_NOTHROW(P.validate());
    CHECK_THROWS_AS(TransitionMatrix{0.5, 0.5}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(TransitionMatrix{0.0, 0.6}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(TransitionMatrix{0.3, 1.0}.validate(), std::invalid_argument);
    CHECK_FALSE(TransitionMatrix{0.9, 0.2}.positively_correlated());
}

TEST_CASE("one-step belief propagation") {
    TransitionMatrix P{0.3, 0.6};
    CHECK(tau(0.0, P) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(tau(1.0, P) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(tau(0.5, P) == doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("k-step propagation closed form") {
    TransitionMatrix P{0.3, 0.6};
    CHECK(tau_k(0.5, P, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tau_k(0.5, P, 1) == doctest::Approx(tau(0.5, P)).epsilon(1e-12));
    CHECK(tau_k(0.5, P, 2) == doctest::Approx(0.435).epsilon(1e-12));
    CHECK(tau_k(0.5, P, 60) == doctest::Approx(3.0 / 7.0).epsilon(1e-9));
}

TEST_CASE("k-step closed form equals iterated one-step") {
    Xoshiro256pp rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const TransitionMatrix P = random_matrix(rng);
        const double omega = rng.uniform();
        double iterated = omega;
        for (long k = 0; k <= 50; ++k) {
            CHECK(std::fabs(tau_k(omega, P, k) - iterated) < 1e-10);
            iterated = tau(iterated, P);
        }
    }
}

TEST_CASE("stationary belief") {
    CHECK(stationary_belief(TransitionMatrix{0.3, 0.6}) == doctest::Approx(0.428571).epsilon(1e-6));
    CHECK(stationary_belief(TransitionMatrix{0.9, 0.2}) == doctest::Approx(0.529412).epsilon(1e-6));
    Xoshiro256pp rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const TransitionMatrix P = random_matrix(rng);
        const double wo = stationary_belief(P);
        CHECK(std::fabs(tau(wo, P) - wo) < 1e-12);
    }
}

TEST_CASE("convergence to the stationary point is geometric") {
    Xoshiro256pp rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const TransitionMatrix P = random_matrix(rng);
        const double wo = stationary_belief(P);
        const double ratio = std::fabs(P.p11 - P.p01);
        double omega = rng.uniform();
        for (int k = 0; k < 30; ++k) {
            const double next = tau(omega, P);
            CHECK(std::fabs(next - wo) <= ratio * std::fabs(omega - wo) + 1e-12);
            omega = next;
        }
    }
}

TEST_CASE("no-ACK posterior") {
    ObservationModel obs{0.1};
    CHECK(phi(0.0, obs) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(phi(1.0, obs) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi(0.5, obs) == doctest::Approx(0.0909091).epsilon(1e-7));
    CHECK_THROWS_AS(phi(1.0, ObservationModel{0.0}), std::domain_error);
}

TEST_CASE("no-ACK posterior never raises the belief") {
    Xoshiro256pp rng(44);
    for (int trial = 0; trial < 500; ++trial) {
        const double eps = rng.uniform() * 0.99;
        const double omega = rng.uniform();
        const double post = phi(omega, ObservationModel{eps});
        CHECK(post <= omega + 1e-12);
        CHECK(post >= 0.0);
    }
}

TEST_CASE("operators stay inside the unit interval") {
    Xoshiro256pp rng(45);
    for (int trial = 0; trial < 500; ++trial) {
        const TransitionMatrix P = random_matrix(rng);
        const ObservationModel obs{rng.uniform() * 0.99};
        const double omega = rng.uniform();
        for (double v : {tau(omega, P), phi(omega, obs), tau_phi(omega, P, obs)}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("probe-and-miss map is Lipschitz with ratio |p11-p01|/eps") {
    Xoshiro256pp rng(46);
    for (int trial = 0; trial < 300; ++trial) {
        const TransitionMatrix P = random_matrix(rng);
        const double eps = 0.05 + 0.9 * rng.uniform();
        const ObservationModel obs{eps};
        const double a = rng.uniform(), b = rng.uniform();
        const double lhs = std::fabs(tau_phi(a, P, obs) - tau_phi(b, P, obs));
        const double rhs = std::fabs(P.p11 - P.p01) / eps * std::fabs(a - b);
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("belief update cases") {
    TransitionMatrix P{0.3, 0.6};
    ObservationModel obs{0.1};
    CHECK(update_belief(0.123, P, obs, true, true) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(update_belief(0.5, P, obs, false, false) == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(update_belief(0.5, P, obs, true, false) == doctest::Approx(0.327273).epsilon(1e-6));
    CHECK_THROWS_AS(update_belief(0.5, P, obs, false, true), std::invalid_argument);
}

TEST_CASE("value Lipschitz constant") {
    ObservationModel obs{0.1};
    CHECK(lipschitz_bound(TransitionMatrix{0.3, 0.6}, obs, 0.29) ==
          doctest::Approx(1.07823).epsilon(1e-4));
    CHECK(lipschitz_bound(TransitionMatrix{0.3, 0.6}, obs, 0.0) ==
          doctest::Approx(0.9).epsilon(1e-12));
    CHECK_THROWS_AS(lipschitz_bound(TransitionMatrix{0.1, 0.9}, obs, 0.7),
                    BoundInapplicableError);
}

TEST_CASE("observation model validation") {
    CHECK_NOTHROW(ObservationModel{0.0}.validate());
    CHECK_NOTHROW(ObservationModel{0.3}.validate());
    CHECK_THROWS_AS(ObservationModel{1.0}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(ObservationModel{-0.1}.validate(), std::invalid_argument);
}
