#include "whittle/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "whittle/config.hpp"
#include "whittle/errors.hpp"
#include "whittle/policies.hpp"

namespace whittle {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void prefix_comment_lines(std::ostringstream& out, const std::string& block) {
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line)) out << "# " << line << '\n';
}

std::vector<double> grid_points(double grid_step) {
    if (!(grid_step > 0.0 && grid_step <= 1.0))
        throw std::invalid_argument("grid step must lie in (0, 1]");
    const long cells = std::lround(1.0 / grid_step);
    std::vector<double> points;
    points.reserve(cells + 1);
    for (long i = 0; i <= cells; ++i)
        points.push_back(std::min(1.0, static_cast<double>(i) * grid_step));
    return points;
}

}  // namespace

void ExperimentSpec::validate() const {
    config.validate();
    if (policies.empty()) throw std::invalid_argument("experiment needs at least one policy");
    if (horizons.empty()) throw std::invalid_argument("experiment needs at least one horizon");
    for (int h : horizons)
        if (h < 1) throw std::invalid_argument("horizons must be positive");
    if (episodes < 1) throw std::invalid_argument("episodes must be at least 1");
}

std::string run_experiment_csv(const ExperimentSpec& spec) {
    spec.validate();

    std::ostringstream out;
    prefix_comment_lines(out, serialize_bandit_config(spec.config));
    out << "# policies =";
    for (const PolicySpec& p : spec.policies) {
        out << ' ' << policy_name(p.kind);
        if (p.kind == PolicyKind::whittle) out << "(n=" << p.iterations << ")";
    }
    out << '\n';
    out << "# horizons =";
    for (int h : spec.horizons) out << ' ' << h;
    out << '\n';
    out << "# episodes = " << spec.episodes << '\n';
    out << "# optimal = " << (spec.include_optimal ? "yes" : "no") << '\n';
    out << "policy,horizon,mean,stderr\n";

    struct Cell {
        std::string label;
        int horizon = 0;
        std::future<std::string> row;
    };
    std::vector<Cell> cells;

    for (const PolicySpec& policy : spec.policies) {
        for (int horizon : spec.horizons) {
            BanditConfig config = spec.config;
            config.horizon = horizon;
            cells.push_back({policy_name(policy.kind), horizon,
                             std::async(std::launch::async, [config, policy, &spec] {
                                 const MonteCarloResult r =
                                     monte_carlo(config, policy, spec.episodes);
                                 return fmt_double(r.mean) + "," +
                                        fmt_double(r.stderr_of_mean);
                             })});
        }
    }
    if (spec.include_optimal) {
        for (int horizon : spec.horizons) {
            BanditConfig config = spec.config;
            config.horizon = horizon;
            cells.push_back({"optimal", horizon,
                             std::async(std::launch::async, [config, horizon]() -> std::string {
                                 try {
                                     return fmt_double(joint_optimal_value(config, horizon)) +
                                            ",na";
                                 } catch (const BudgetError&) {
                                     return "na,na";
                                 }
                             })});
        }
    }

    for (Cell& cell : cells)
        out << cell.label << ',' << cell.horizon << ',' << cell.row.get() << '\n';
    return out.str();
}

std::string sweep_index_csv(const TransitionMatrix& P, double epsilon, double beta,
                            int iterations, double grid_step, double reward) {
    const std::vector<double> points = grid_points(grid_step);
    if (points.size() < 2) throw std::invalid_argument("grid must have at least two points");

    std::ostringstream out;
    out << "# p11 = " << fmt_double(P.p11) << '\n';
    out << "# p01 = " << fmt_double(P.p01) << '\n';
    out << "# epsilon = " << fmt_double(epsilon) << '\n';
    out << "# beta = " << fmt_double(beta) << '\n';
    out << "# reward = " << fmt_double(reward) << '\n';
    out << "# iterations = " << iterations << '\n';
    out << "# grid_step = " << fmt_double(grid_step) << '\n';
    out << "omega,index\n";

    std::vector<std::pair<double, double>> history;
    history.reserve(points.size());
    for (double omega : points) {
        IndexQuery query;
        query.omega = omega;
        query.P = P;
        query.epsilon = epsilon;
        query.beta = beta;
        query.reward = reward;
        query.iterations = iterations;
        const double index = whittle_index(query);
        history.emplace_back(omega, index);
        out << fmt_double(omega) << ',' << fmt_double(index) << '\n';
    }

    const bool monotone = monitor_index_monotonicity(history, 1e-9);
    out << "# monotone = " << (monotone ? "yes" : "no") << '\n';
    return out.str();
}

CertifyReport certify(const std::vector<ArmModel>& arms, double epsilon, double beta,
                      int iterations, double grid_step) {
    if (arms.empty()) throw std::invalid_argument("certify needs at least one arm");
    const ObservationModel obs{epsilon};
    obs.validate();
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    const std::vector<double> points = grid_points(grid_step);

    CertifyReport report;
    report.epsilon = epsilon;
    report.beta = beta;
    report.iterations = iterations;
    report.grid_step = grid_step;
    report.all_threshold_ok = true;
    report.all_indexability_ok = true;

    for (const ArmModel& arm : arms) {
        arm.validate();
        ArmCertificate cert;
        cert.P = arm.P;
        cert.reward = arm.reward;
        cert.threshold_bound = threshold_condition_bound(arm.P, obs);
        cert.threshold_ok = beta <= cert.threshold_bound;
        cert.indexability_ok = beta <= 0.5;

        IndexParams params;
        params.P = arm.P;
        params.epsilon = epsilon;
        params.beta = beta;
        params.iterations = iterations;

        double min_margin = std::numeric_limits<double>::infinity();
        for (double threshold : points)
            min_margin = std::min(min_margin, indexability_margin(threshold, params));
        cert.min_margin = min_margin;
        cert.margin_positive = min_margin > 0.0;

        std::vector<std::pair<double, double>> history;
        history.reserve(points.size());
        for (double omega : points) {
            IndexQuery query;
            query.omega = omega;
            query.P = arm.P;
            query.epsilon = epsilon;
            query.beta = beta;
            query.reward = arm.reward;
            query.iterations = iterations;
            history.emplace_back(omega, whittle_index(query));
        }
        cert.sweep_monotone = monitor_index_monotonicity(history, 1e-9);

        report.all_threshold_ok = report.all_threshold_ok && cert.threshold_ok;
        report.all_indexability_ok = report.all_indexability_ok && cert.indexability_ok;
        report.arms.push_back(cert);
    }
    return report;
}

std::string format_certify(const CertifyReport& report) {
    std::ostringstream out;
    out << "epsilon = " << fmt_double(report.epsilon) << '\n';
    out << "beta = " << fmt_double(report.beta) << '\n';
    out << "iterations = " << report.iterations << '\n';
    out << "grid_step = " << fmt_double(report.grid_step) << '\n';
    for (std::size_t i = 0; i < report.arms.size(); ++i) {
        const ArmCertificate& a = report.arms[i];
        char line[256];
        std::snprintf(line, sizeof(line),
                      "arm %zu: p11=%.4f p01=%.4f B=%.4f threshold_bound=%.6f threshold=%s "
                      "indexability=%s min_margin=%.6f margin_positive=%s monotone=%s",
                      i, a.P.p11, a.P.p01, a.reward, a.threshold_bound,
                      a.threshold_ok ? "yes" : "no", a.indexability_ok ? "yes" : "no",
                      a.min_margin, a.margin_positive ? "yes" : "no",
                      a.sweep_monotone ? "yes" : "no");
        out << line << '\n';
    }
    out << "overall: threshold=" << (report.all_threshold_ok ? "yes" : "no")
        << " indexability=" << (report.all_indexability_ok ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace whittle
