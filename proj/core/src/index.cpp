#include "whittle/index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "whittle/errors.hpp"

namespace whittle {

namespace {

constexpr double kPivotTolerance = 1e-12;

// In-place Gaussian elimination with partial pivoting on an n x n matrix with
// nrhs right-hand sides appended column-wise (row stride n + nrhs). Solutions
// are written back into the right-hand-side columns.
void eliminate(std::vector<double>& aug, int n, int nrhs) {
    const int stride = n + nrhs;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(aug[col * stride + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::fabs(aug[r * stride + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best < kPivotTolerance)
            throw SolverDegenerateError("chain system singular to working precision");
        if (pivot != col)
            for (int j = 0; j < stride; ++j)
                std::swap(aug[pivot * stride + j], aug[col * stride + j]);
        const double diag = aug[col * stride + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = aug[r * stride + col] / diag;
            if (f == 0.0) continue;
            for (int j = col; j < stride; ++j) aug[r * stride + j] -= f * aug[col * stride + j];
        }
    }
    for (int k = 0; k < nrhs; ++k) {
        for (int r = n - 1; r >= 0; --r) {
            double acc = aug[r * stride + n + k];
            for (int j = r + 1; j < n; ++j) acc -= aug[r * stride + j] * aug[j * stride + n + k];
            aug[r * stride + n + k] = acc / aug[r * stride + r];
        }
    }
}

// Beliefs tracked by a chain and their first crossing times. For
// iterations >= 1 this is the k-sequence started at p11, cut short at the
// first belief that never crosses; for iterations == 0 it is {p11, p01}.
struct ChainLayout {
    std::vector<double> beliefs;
    std::vector<CrossingTime> times;
    bool two_point = false;
};

ChainLayout build_layout(double threshold, const IndexParams& p) {
    ChainLayout lay;
    const ObservationModel obs{p.epsilon};
    if (p.iterations == 0) {
        lay.two_point = true;
        lay.beliefs = {p.P.p11, p.P.p01};
        lay.times = {first_crossing_time(p.P.p11, threshold, p.P),
                     first_crossing_time(p.P.p01, threshold, p.P)};
        return lay;
    }
    lay.beliefs.push_back(p.P.p11);
    lay.times.push_back(first_crossing_time(p.P.p11, threshold, p.P));
    for (int i = 0; i < p.iterations; ++i) {
        if (!lay.times.back().is_finite()) break;
        const double tl = tau_k(lay.beliefs.back(), p.P, lay.times.back().steps());
        const double next = tau(phi(tl, obs), p.P);
        lay.beliefs.push_back(next);
        lay.times.push_back(first_crossing_time(next, threshold, p.P));
    }
    return lay;
}

// Row i of the chain system. For a finite crossing L with tl = tau_L(k_i):
//   X(k_i) - beta^{L+1} [ a*X(p11) + (1-a)*X(target) ] = rhs,   a = (1-eps)*tl
// where target is k_{i+1}, or p01 in two-point mode, or k_i / nothing at the
// closed tail. A never-crossing belief pins X(k_i) to the always-passive
// value. The value system carries two right-hand sides (intercept and slope
// in the subsidy); the passive-time system carries one.
std::vector<double> assemble(const ChainLayout& lay, const IndexParams& p, bool value_mode) {
    const int n = static_cast<int>(lay.beliefs.size());
    const int nrhs = value_mode ? 2 : 1;
    const int stride = n + nrhs;
    std::vector<double> aug(static_cast<std::size_t>(n) * stride, 0.0);
    const double beta = p.beta;
    const double geom_all = 1.0 / (1.0 - beta);

    for (int i = 0; i < n; ++i) {
        double* row = &aug[static_cast<std::size_t>(i) * stride];
        if (!lay.times[i].is_finite()) {
            row[i] = 1.0;
            if (value_mode)
                row[n + 1] = geom_all;
            else
                row[n] = geom_all;
            continue;
        }
        const long L = lay.times[i].steps();
        const double tl = tau_k(lay.beliefs[i], p.P, L);
        const double a = (1.0 - p.epsilon) * tl;
        const double bl = std::pow(beta, static_cast<double>(L));
        const double g = bl * beta;
        const double geom = L == 0 ? 0.0 : (1.0 - bl) * geom_all;

        row[i] += 1.0;
        row[0] -= g * a;
        int target = -1;
        if (lay.two_point)
            target = 1;
        else if (i + 1 < n)
            target = i + 1;
        else if (p.closure == ChainClosure::repeat_last)
            target = i;
        if (target >= 0) row[target] -= g * (1.0 - a);

        if (value_mode) {
            row[n] = bl * a;
            row[n + 1] = geom;
        } else {
            row[n] = geom;
        }
    }
    eliminate(aug, n, nrhs);
    return aug;
}

}  // namespace

void IndexParams::validate() const {
    P.validate();
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1) for the chain solver");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (iterations < 0) throw std::invalid_argument("iterations must be nonnegative");
}

void IndexQuery::validate() const {
    params().validate();
    if (!(omega >= 0.0 && omega <= 1.0)) throw std::invalid_argument("omega must lie in [0, 1]");
    if (!(reward > 0.0)) throw std::invalid_argument("reward must be positive");
}

double f_map(double omega, double threshold, const TransitionMatrix& P,
             const ObservationModel& obs) {
    const CrossingTime L = first_crossing_time(omega, threshold, P);
    if (!L.is_finite())
        throw CrossingNeverHappensError("f_map: belief never crosses the threshold");
    return tau(phi(tau_k(omega, P, L.steps()), obs), P);
}

std::vector<double> k_sequence(double k0, double threshold, const TransitionMatrix& P,
                               const ObservationModel& obs, int n) {
    if (n < 0) throw std::invalid_argument("k_sequence: n must be nonnegative");
    std::vector<double> seq{k0};
    seq.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        try {
            seq.push_back(f_map(seq.back(), threshold, P, obs));
        } catch (const CrossingNeverHappensError&) {
            throw CrossingNeverHappensError("k_sequence: crossing never happens", i);
        }
    }
    return seq;
}

ValueChain ValueChain::solve(double threshold, const IndexParams& params) {
    params.validate();
    ValueChain chain;
    chain.threshold_ = threshold;
    chain.params_ = params;
    ChainLayout lay = build_layout(threshold, params);
    const int n = static_cast<int>(lay.beliefs.size());
    const std::vector<double> aug = assemble(lay, params, /*value_mode=*/true);
    const int stride = n + 2;
    chain.beliefs_ = std::move(lay.beliefs);
    chain.two_point_ = lay.two_point;
    chain.values_.resize(n);
    for (int i = 0; i < n; ++i)
        chain.values_[i] = {aug[static_cast<std::size_t>(i) * stride + n],
                            aug[static_cast<std::size_t>(i) * stride + n + 1]};
    return chain;
}

AffineValue ValueChain::expand(double omega, int depth) const {
    const double beta = params_.beta;
    const CrossingTime ct = first_crossing_time(omega, threshold_, params_.P);
    if (!ct.is_finite()) return {0.0, 1.0 / (1.0 - beta)};

    const long L = ct.steps();
    const double tl = tau_k(omega, params_.P, L);
    const double a = (1.0 - params_.epsilon) * tl;
    const double bl = std::pow(beta, static_cast<double>(L));
    const double g = bl * beta;
    const double base_i = bl * a;
    const double base_s = L == 0 ? 0.0 : (1.0 - bl) / (1.0 - beta);
    const AffineValue v0 = values_.front();

    AffineValue tail;
    if (two_point_) {
        tail = values_[1];
    } else if (depth >= params_.iterations) {
        if (params_.closure == ChainClosure::repeat_last) {
            // X appears on both sides: X = base + g*[a*V(p11) + (1-a)*X].
            const double denom = 1.0 - g * (1.0 - a);
            return {(base_i + g * a * v0.intercept) / denom,
                    (base_s + g * a * v0.slope) / denom};
        }
        tail = {0.0, 0.0};
    } else {
        const ObservationModel obs{params_.epsilon};
        tail = expand(tau(phi(tl, obs), params_.P), depth + 1);
    }
    return {base_i + g * (a * v0.intercept + (1.0 - a) * tail.intercept),
            base_s + g * (a * v0.slope + (1.0 - a) * tail.slope)};
}

AffineValue ValueChain::value_at(double omega) const { return expand(omega, 0); }

AffineValue ValueChain::value_active(double omega) const {
    const double beta = params_.beta;
    const double aw = (1.0 - params_.epsilon) * omega;
    AffineValue tail;
    if (two_point_) {
        tail = values_[1];
    } else {
        const ObservationModel obs{params_.epsilon};
        tail = value_at(tau_phi(omega, params_.P, obs));
    }
    const AffineValue v0 = values_.front();
    return {aw + beta * (aw * v0.intercept + (1.0 - aw) * tail.intercept),
            beta * (aw * v0.slope + (1.0 - aw) * tail.slope)};
}

AffineValue ValueChain::value_passive(double omega) const {
    const AffineValue next = value_at(tau(omega, params_.P));
    return {params_.beta * next.intercept, 1.0 + params_.beta * next.slope};
}

PassiveTimeChain PassiveTimeChain::solve(double threshold, const IndexParams& params) {
    params.validate();
    PassiveTimeChain chain;
    chain.threshold_ = threshold;
    chain.params_ = params;
    ChainLayout lay = build_layout(threshold, params);
    const int n = static_cast<int>(lay.beliefs.size());
    const std::vector<double> aug = assemble(lay, params, /*value_mode=*/false);
    const int stride = n + 1;
    const double cap = 1.0 / (1.0 - params.beta);
    chain.beliefs_ = std::move(lay.beliefs);
    chain.two_point_ = lay.two_point;
    chain.values_.resize(n);
    for (int i = 0; i < n; ++i)
        chain.values_[i] = std::clamp(aug[static_cast<std::size_t>(i) * stride + n], 0.0, cap);
    return chain;
}

double PassiveTimeChain::expand(double omega, int depth) const {
    const double beta = params_.beta;
    const CrossingTime ct = first_crossing_time(omega, threshold_, params_.P);
    if (!ct.is_finite()) return 1.0 / (1.0 - beta);

    const long L = ct.steps();
    const double tl = tau_k(omega, params_.P, L);
    const double a = (1.0 - params_.epsilon) * tl;
    const double bl = std::pow(beta, static_cast<double>(L));
    const double g = bl * beta;
    const double base = L == 0 ? 0.0 : (1.0 - bl) / (1.0 - beta);
    const double d0 = values_.front();

    double tail;
    if (two_point_) {
        tail = values_[1];
    } else if (depth >= params_.iterations) {
        if (params_.closure == ChainClosure::repeat_last)
            return (base + g * a * d0) / (1.0 - g * (1.0 - a));
        tail = 0.0;
    } else {
        const ObservationModel obs{params_.epsilon};
        tail = expand(tau(phi(tl, obs), params_.P), depth + 1);
    }
    return base + g * (a * d0 + (1.0 - a) * tail);
}

double PassiveTimeChain::at(double omega) const {
    return std::clamp(expand(omega, 0), 0.0, 1.0 / (1.0 - params_.beta));
}

double solve_index_equation(const AffineValue& active, const AffineValue& passive,
                            double omega, double reward, double slope_tolerance) {
    const double gap = passive.slope - active.slope;
    if (std::fabs(gap) < slope_tolerance) return omega * reward;
    return reward * (active.intercept - passive.intercept) / gap;
}

double whittle_index(const IndexQuery& query) {
    query.validate();
    IndexParams unit = query.params();
    try {
        const ValueChain chain = ValueChain::solve(query.omega, unit);
        const AffineValue active = chain.value_active(query.omega);
        const AffineValue passive = chain.value_passive(query.omega);
        return solve_index_equation(active, passive, query.omega, query.reward);
    } catch (const SolverDegenerateError&) {
        return query.omega * query.reward;
    }
}

double closed_form_whittle_index(double omega, const TransitionMatrix& P,
                                 const ObservationModel& obs, double beta) {
    P.validate();
    obs.validate();
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (!(omega >= 0.0 && omega <= 1.0)) throw std::invalid_argument("omega must lie in [0, 1]");

    const double e1 = 1.0 - obs.epsilon;
    const double p11 = P.p11;
    const double p01 = P.p01;
    const double wo = stationary_belief(P);

    if (P.positively_correlated()) {
        if (omega >= p11) return e1 * omega;
        if (omega <= p01)
            return omega * e1 * (1.0 - beta * p11 + beta * p01) /
                   (1.0 - beta * e1 * p11 + beta * e1 * p01);
        if (omega >= wo) return e1 * omega / (1.0 - beta * e1 * p11 + beta * e1 * omega);

        // p01 < omega < wo. The crossing from p01 is finite here.
        const long L = first_crossing_time(p01, omega, P).steps();
        const double tl = tau_k(p01, P, L);
        const double bl = std::pow(beta, static_cast<double>(L));
        const double d1 = 1.0 - beta * e1 * p11;
        const double den = d1 * (1.0 - bl * beta) + e1 * (1.0 - beta) * bl * beta * tl;
        const double c1 = d1 * (1.0 - bl) / den;
        const double c2 = e1 * bl * tl / den;
        const double active_gain = e1 * (omega - beta * tau(omega, P));
        const double k = d1 - active_gain;
        return (active_gain + c2 * (1.0 - beta) * beta * k) / (d1 - c1 * beta * k);
    }

    // p01 > p11
    const double tp11 = tau(p11, P);
    if (omega >= p01) return e1 * omega;
    if (omega <= p11)
        return omega * e1 * (1.0 - beta * p11 + beta * p01) /
               (1.0 - beta * e1 * p11 + beta * e1 * p01);
    if (omega >= tp11)
        return e1 * (beta * p01 + (1.0 - beta) * omega) / (1.0 + e1 * beta * (p01 - omega));

    const double den34 = 1.0 + beta * (1.0 + beta) * e1 * p01 - beta * beta * e1 * tp11;
    const double c3 = (1.0 - beta * (1.0 - e1 * p01)) / den34;
    const double c4 = (beta * e1 * tp11 * (1.0 - beta) + beta * beta * e1 * p01) / den34;
    if (omega >= wo) {
        const double blend = beta * p01 + omega * (1.0 - beta);
        return e1 * (1.0 - beta + beta * c4) * blend /
               (1.0 - beta * (1.0 - e1 * p01) - e1 * beta * c3 * blend);
    }
    // p11 < omega < wo
    const double drift = beta * p01 + omega - beta * tau(omega, P);
    return e1 * (1.0 - beta + c4 * beta) * drift /
           (1.0 - beta * (1.0 - e1 * p01) - e1 * c3 * beta * drift);
}

double indexability_margin(double threshold, const IndexParams& params) {
    const PassiveTimeChain chain = PassiveTimeChain::solve(threshold, params);
    const ObservationModel obs{params.epsilon};
    const double aw = (1.0 - params.epsilon) * threshold;
    const double lhs = params.beta * (aw * chain.at_p11() +
                                      (1.0 - aw) * chain.at(tau_phi(threshold, params.P, obs)));
    const double rhs = 1.0 + params.beta * chain.at(tau(threshold, params.P));
    return rhs - lhs;
}

bool check_indexability(double threshold, const IndexParams& params) {
    return indexability_margin(threshold, params) > 0.0;
}

double threshold_condition_bound(const TransitionMatrix& P, const ObservationModel& obs) {
    P.validate();
    obs.validate();
    if (P.positively_correlated()) return 1.0 / ((3.0 - obs.epsilon) * (P.p11 - P.p01));
    return 1.0 / ((5.0 - 2.0 * obs.epsilon) * (P.p01 - P.p11));
}

double threshold_beta_bound(const TransitionMatrix& P, const ObservationModel& obs) {
    return std::min(threshold_condition_bound(P, obs), 0.5);
}

bool monitor_index_monotonicity(std::vector<std::pair<double, double>> history,
                                double tolerance) {
    std::sort(history.begin(), history.end());
    for (std::size_t i = 1; i < history.size(); ++i)
        if (history[i].second < history[i - 1].second - tolerance) return false;
    return true;
}

}  // namespace whittle
