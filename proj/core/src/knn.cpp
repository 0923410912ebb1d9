#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "hp_util.hpp"
#include "manazel/classifiers.hpp"

namespace manazel {

Knn::Knn(const HyperParams& hp) {
    validate_hyperparams(Family::Knn, hp);
    if (const auto k = detail::hp_get(hp, "n_neighbors")) {
        k_ = detail::parse_int_min(*k, "n_neighbors", 1);
    }
    if (const auto w = detail::hp_get(hp, "weights")) {
        weights_ = (*w == "distance") ? Weights::Distance : Weights::Uniform;
    }
}

HyperParams Knn::hyperparams() const {
    return {{"n_neighbors", std::to_string(k_)},
            {"weights", weights_ == Weights::Distance ? "distance" : "uniform"}};
}

void Knn::fit(const Dataset& d) {
    if (d.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    if (static_cast<std::size_t>(k_) > d.size()) {
        throw InputError("n_neighbors exceeds the number of training rows");
    }
    x_.clear();
    y_.clear();
    x_.reserve(d.size());
    y_.reserve(d.size());
    for (const Observation& o : d.rows) {
        x_.push_back({o.arcv, o.w});
        y_.push_back(o.output);
    }
}

int Knn::predict_one(double arcv, double w) const {
    if (x_.empty()) throw Error("knn model has no stored training data");

    std::vector<std::pair<double, std::size_t>> order(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
        const double da = x_[i][0] - arcv;
        const double dw = x_[i][1] - w;
        order[i] = {da * da + dw * dw, i};
    }
    // Ties on distance resolve to the lower training index.
    std::sort(order.begin(), order.end());

    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_), order.size());

    if (weights_ == Weights::Distance) {
        // An exact match decides outright: its inverse-distance weight is
        // unbounded, so only zero-distance neighbours get a vote.
        bool any_zero = false;
        double zero_votes[2] = {0.0, 0.0};
        for (std::size_t r = 0; r < k; ++r) {
            if (order[r].first == 0.0) {
                any_zero = true;
                zero_votes[y_[order[r].second]] += 1.0;
            }
        }
        if (any_zero) return zero_votes[1] > zero_votes[0] ? 1 : 0;
        double votes[2] = {0.0, 0.0};
        for (std::size_t r = 0; r < k; ++r) {
            votes[y_[order[r].second]] += 1.0 / std::sqrt(order[r].first);
        }
        return votes[1] > votes[0] ? 1 : 0;
    }

    int votes[2] = {0, 0};
    for (std::size_t r = 0; r < k; ++r) ++votes[y_[order[r].second]];
    return votes[1] > votes[0] ? 1 : 0;
}

void Knn::set_stored(std::vector<std::array<double, 2>> x, std::vector<int> y) {
    if (x.size() != y.size()) throw InputError("stored feature/label sizes differ");
    x_ = std::move(x);
    y_ = std::move(y);
}

}  // namespace manazel
