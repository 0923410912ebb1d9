#include <random>

#include "hp_util.hpp"
#include "manazel/classifiers.hpp"
#include "manazel/cv.hpp"

namespace manazel {

RandomForest::RandomForest(const HyperParams& hp, std::uint64_t seed) : seed_(seed) {
    validate_hyperparams(Family::Forest, hp);
    if (const auto n = detail::hp_get(hp, "n_estimators"))
        n_estimators_ = detail::parse_int_min(*n, "n_estimators", 1);
    if (const auto d = detail::hp_get(hp, "max_depth")) max_depth_ = detail::parse_depth(*d);
    if (const auto m = detail::hp_get(hp, "min_samples_split"))
        min_samples_split_ = detail::parse_int_min(*m, "min_samples_split", 2);
}

HyperParams RandomForest::hyperparams() const {
    return {{"max_depth", detail::depth_to_string(max_depth_)},
            {"min_samples_split", std::to_string(min_samples_split_)},
            {"n_estimators", std::to_string(n_estimators_)}};
}

void RandomForest::fit(const Dataset& d) {
    if (d.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    const std::size_t n = d.size();
    std::vector<std::array<double, 2>> x;
    std::vector<int> y;
    x.reserve(n);
    y.reserve(n);
    for (const Observation& o : d.rows) {
        x.push_back({o.arcv, o.w});
        y.push_back(o.output);
    }

    const HyperParams tree_hp = {
        {"max_depth", detail::depth_to_string(max_depth_)},
        {"min_samples_split", std::to_string(min_samples_split_)}};

    trees_.clear();
    trees_.reserve(static_cast<std::size_t>(n_estimators_));
    for (int t = 0; t < n_estimators_; ++t) {
        // One generator per tree drives both the bootstrap draw and the
        // per-split feature choice, in that order.
        std::mt19937_64 rng(derive_seed(seed_, static_cast<std::uint64_t>(t)));

        std::vector<std::array<double, 2>> bx;
        std::vector<int> by;
        bx.reserve(n);
        by.reserve(n);
        if (hook_disable_bootstrap) {
            bx = x;
            by = y;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t pick = static_cast<std::size_t>(rng() % n);
                bx.push_back(x[pick]);
                by.push_back(y[pick]);
            }
        }

        DecisionTree::FeatureSampler sampler;
        if (!hook_disable_feature_subsample) {
            // floor(sqrt(2)) = 1 candidate feature per split.
            sampler = [&rng]() { return std::vector<int>{static_cast<int>(rng() % 2)}; };
        }

        DecisionTree tree(tree_hp);
        tree.fit_sampled(bx, by, sampler);
        trees_.push_back(std::move(tree));
    }
}

int RandomForest::predict_one(double arcv, double w) const {
    if (trees_.empty()) throw Error("random forest is not fitted");
    int votes_one = 0;
    for (const DecisionTree& t : trees_) votes_one += t.predict_one(arcv, w);
    // Majority with ties to class 0.
    return 2 * votes_one > static_cast<int>(trees_.size()) ? 1 : 0;
}

void RandomForest::set_trees(std::vector<DecisionTree> trees) {
    trees_ = std::move(trees);
}

}  // namespace manazel
