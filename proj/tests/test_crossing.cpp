#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "whittle/belief.hpp"
#include "whittle/crossing.hpp"
#include "whittle/rng.hpp"

using namespace whittle;

namespace {

// Reference implementation: iterate tau until the belief exceeds the
// threshold, with a step cap standing in for infinity.
CrossingTime brute_force(double omega, double threshold, const TransitionMatrix& P, long cap) {
    double w = omega;
    for (long k = 0; k <= cap; ++k) {
        if (w > threshold) return CrossingTime::finite(k);
        w = tau(w, P);
    }
    return CrossingTime::never();
}

}  // namespace

TEST_CASE("crossing time value semantics") {
    CHECK(CrossingTime::finite(3).is_finite());
    CHECK(CrossingTime::finite(3).steps() == 3);
    CHECK_FALSE(CrossingTime::never().is_finite());
    CHECK_THROWS_AS(CrossingTime::never().steps(), std::logic_error);
    CHECK(CrossingTime::finite(2) == CrossingTime::finite(2));
    CHECK_FALSE(CrossingTime::finite(2) == CrossingTime::never());
}

TEST_CASE("pinned crossing times") {
    CHECK(first_crossing_time(0.2, 0.12, TransitionMatrix{0.1, 0.3}) == CrossingTime::finite(0));
    CHECK(first_crossing_time(0.2, 0.12, TransitionMatrix{0.9, 0.2}) == CrossingTime::finite(0));
    // 0.1 -> 0.12 -> 0.124: two steps to exceed 0.12
    CHECK(first_crossing_time(0.1, 0.12, TransitionMatrix{0.1, 0.3}) == CrossingTime::finite(2));
    // stationary point is 0.125, so 0.13 is never reached
    CHECK(first_crossing_time(0.1, 0.13, TransitionMatrix{0.1, 0.3}) == CrossingTime::never());
    // negative correlation: tau(0.3) = 0.69 > 0.5, one step
    CHECK(first_crossing_time(0.3, 0.5, TransitionMatrix{0.9, 0.2}) == CrossingTime::finite(1));
    CHECK(first_crossing_time(0.3, 0.7, TransitionMatrix{0.9, 0.2}) == CrossingTime::never());
}

TEST_CASE("threshold edge cases") {
    TransitionMatrix P{0.1, 0.3};
    CHECK(first_crossing_time(0.5, -0.25, P) == CrossingTime::finite(0));
    CHECK(first_crossing_time(0.5, 1.0, P) == CrossingTime::never());
    CHECK(first_crossing_time(0.5, 1.5, P) == CrossingTime::never());
    // exactly at the stationary point: approach is from below, never strict
    CHECK(first_crossing_time(0.1, 0.125, P) == CrossingTime::never());
}

TEST_CASE("zero crossing iff already above threshold") {
    Xoshiro256pp rng(101);
    for (int trial = 0; trial < 500; ++trial) {
        const double p01 = 0.01 + 0.98 * rng.uniform();
        const double p11 = 0.01 + 0.98 * rng.uniform();
        if (std::fabs(p01 - p11) < 1e-3) continue;
        const TransitionMatrix P{p01, p11};
        const double omega = rng.uniform();
        const double threshold = rng.uniform() * 1.2 - 0.1;
        const CrossingTime L = first_crossing_time(omega, threshold, P);
        CHECK((L == CrossingTime::finite(0)) == (omega > threshold));
    }
}

TEST_CASE("closed form matches brute force") {
    Xoshiro256pp rng(102);
    for (int trial = 0; trial < 2000; ++trial) {
        const double p01 = 0.01 + 0.98 * rng.uniform();
        const double p11 = 0.01 + 0.98 * rng.uniform();
        if (std::fabs(p01 - p11) < 1e-3) continue;
        const TransitionMatrix P{p01, p11};
        const double omega = rng.uniform();
        const double threshold = rng.uniform() * 1.1 - 0.05;
        const CrossingTime expected = brute_force(omega, threshold, P, 10000);
        const CrossingTime actual = first_crossing_time(omega, threshold, P);
        CHECK(actual == expected);
    }
}

TEST_CASE("positive correlation: monotone in omega and threshold") {
    const TransitionMatrix P{0.1, 0.7};
    auto steps_or_large = [&](double omega, double threshold) {
        const CrossingTime L = first_crossing_time(omega, threshold, P);
        return L.is_finite() ? L.steps() : 1000000L;
    };
    for (double threshold : {0.05, 0.12, 0.2, 0.28}) {
        long prev = steps_or_large(0.01, threshold);
        for (double omega = 0.02; omega < 1.0; omega += 0.017) {
            const long cur = steps_or_large(omega, threshold);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
    for (double omega : {0.02, 0.1, 0.25}) {
        long prev = steps_or_large(omega, 0.0);
        for (double threshold = 0.02; threshold < 1.0; threshold += 0.017) {
            const long cur = steps_or_large(omega, threshold);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("degenerate chain is rejected") {
    CHECK_THROWS_AS(first_crossing_time(0.2, 0.5, TransitionMatrix{0.4, 0.4}),
                    std::invalid_argument);
}
