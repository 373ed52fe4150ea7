#include "whittle/model.hpp"

#include <stdexcept>

namespace whittle {

void ArmModel::validate() const {
    P.validate();
    if (!(reward > 0.0)) throw std::invalid_argument("arm reward must be positive");
}

void BanditConfig::validate() const {
    if (arms.size() < 2) throw std::invalid_argument("config needs at least two arms");
    for (const auto& arm : arms) arm.validate();
    const int n = static_cast<int>(arms.size());
    if (select_count < 1 || select_count >= n)
        throw std::invalid_argument("select_count must satisfy 1 <= M < N");
    ObservationModel{epsilon}.validate();
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
    if (horizon < 1) throw std::invalid_argument("horizon must be positive");
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
    if (initial_beliefs) {
        if (initial_beliefs->size() != arms.size())
            throw std::invalid_argument("initial_beliefs size must match the number of arms");
        for (double w : *initial_beliefs)
            if (!(w >= 0.0 && w <= 1.0))
                throw std::invalid_argument("initial beliefs must lie in [0, 1]");
    }
}

std::vector<double> BanditConfig::resolved_initial_beliefs() const {
    if (initial_beliefs) return *initial_beliefs;
    std::vector<double> out;
    out.reserve(arms.size());
    for (const auto& arm : arms) out.push_back(stationary_belief(arm.P));
    return out;
}

}  // namespace whittle
