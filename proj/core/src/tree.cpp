#include <algorithm>
#include <numeric>

#include "hp_util.hpp"
#include "manazel/classifiers.hpp"

namespace manazel {

namespace {

// Weighted Gini impurity of a candidate split, computed from integer class
// counts so that mathematically equal splits compare exactly equal (the
// tie-break rules depend on it).
double split_gini(const std::size_t left[2], const std::size_t right[2]) {
    const double nl = static_cast<double>(left[0] + left[1]);
    const double nr = static_cast<double>(right[0] + right[1]);
    const double n = nl + nr;
    const double gl =
        1.0 - (static_cast<double>(left[0]) / nl) * (static_cast<double>(left[0]) / nl) -
        (static_cast<double>(left[1]) / nl) * (static_cast<double>(left[1]) / nl);
    const double gr =
        1.0 -
        (static_cast<double>(right[0]) / nr) * (static_cast<double>(right[0]) / nr) -
        (static_cast<double>(right[1]) / nr) * (static_cast<double>(right[1]) / nr);
    return (nl * gl + nr * gr) / n;
}

}  // namespace

DecisionTree::DecisionTree(const HyperParams& hp) {
    validate_hyperparams(Family::Tree, hp);
    if (const auto d = detail::hp_get(hp, "max_depth")) max_depth_ = detail::parse_depth(*d);
    if (const auto m = detail::hp_get(hp, "min_samples_split"))
        min_samples_split_ = detail::parse_int_min(*m, "min_samples_split", 2);
}

HyperParams DecisionTree::hyperparams() const {
    return {{"max_depth", detail::depth_to_string(max_depth_)},
            {"min_samples_split", std::to_string(min_samples_split_)}};
}

void DecisionTree::fit(const Dataset& d) {
    if (d.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    std::vector<std::array<double, 2>> x;
    std::vector<int> y;
    x.reserve(d.size());
    y.reserve(d.size());
    for (const Observation& o : d.rows) {
        x.push_back({o.arcv, o.w});
        y.push_back(o.output);
    }
    fit_sampled(x, y, nullptr);
}

void DecisionTree::fit_sampled(const std::vector<std::array<double, 2>>& x,
                               const std::vector<int>& y, const FeatureSampler& sampler) {
    if (x.empty()) throw EmptyInputError("cannot fit on an empty dataset");
    nodes_.clear();
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    build(x, y, idx, 0, sampler);
}

// Grows the subtree over `idx` depth-first and returns its root node index.
// Node order is pre-order with the left child built before the right, which
// pins the sampler call sequence for the forest's per-split feature draws.
int DecisionTree::build(const std::vector<std::array<double, 2>>& x,
                        const std::vector<int>& y, std::vector<std::size_t>& idx,
                        int depth, const FeatureSampler& sampler) {
    const std::size_t n = idx.size();
    std::size_t counts[2] = {0, 0};
    for (std::size_t i : idx) ++counts[static_cast<std::size_t>(y[i])];
    const int majority = counts[1] > counts[0] ? 1 : 0;  // tie -> class 0

    const int node_id = static_cast<int>(nodes_.size());
    nodes_.push_back({true, majority, -1, 0.0, -1, -1});

    const bool pure = counts[0] == 0 || counts[1] == 0;
    const bool depth_capped = max_depth_ >= 0 && depth >= max_depth_;
    const bool too_small = n < static_cast<std::size_t>(min_samples_split_);
    if (pure || depth_capped || too_small) return node_id;

    const std::vector<int> features = sampler ? sampler() : std::vector<int>{0, 1};

    // Best split over midpoints between consecutive sorted unique values.
    // Score ties keep the earlier candidate: lower feature, lower threshold.
    bool found = false;
    double best_score = 0.0;
    int best_feature = -1;
    double best_threshold = 0.0;
    for (int f : features) {
        std::vector<std::size_t> order = idx;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return x[a][static_cast<std::size_t>(f)] < x[b][static_cast<std::size_t>(f)];
        });
        std::size_t left[2] = {0, 0};
        std::size_t right[2] = {counts[0], counts[1]};
        for (std::size_t pos = 0; pos + 1 < n; ++pos) {
            const std::size_t i = order[pos];
            --right[static_cast<std::size_t>(y[i])];
            ++left[static_cast<std::size_t>(y[i])];
            const double v = x[i][static_cast<std::size_t>(f)];
            const double v_next = x[order[pos + 1]][static_cast<std::size_t>(f)];
            if (v == v_next) continue;
            const double threshold = 0.5 * (v + v_next);
            const double score = split_gini(left, right);
            if (!found || score < best_score) {
                found = true;
                best_score = score;
                best_feature = f;
                best_threshold = threshold;
            }
        }
    }
    if (!found) return node_id;  // constant features: stay a leaf

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx) {
        (x[i][static_cast<std::size_t>(best_feature)] <= best_threshold ? left_idx
                                                                        : right_idx)
            .push_back(i);
    }

    const int left_node = build(x, y, left_idx, depth + 1, sampler);
    const int right_node = build(x, y, right_idx, depth + 1, sampler);
    nodes_[static_cast<std::size_t>(node_id)] = {false,        majority,  best_feature,
                                                 best_threshold, left_node, right_node};
    return node_id;
}

int DecisionTree::predict_one(double arcv, double w) const {
    if (nodes_.empty()) throw Error("decision tree is not fitted");
    const double x[2] = {arcv, w};
    std::size_t node = 0;
    while (!nodes_[node].leaf) {
        const TreeNode& cur = nodes_[node];
        node = static_cast<std::size_t>(
            x[static_cast<std::size_t>(cur.feature)] <= cur.threshold ? cur.left
                                                                      : cur.right);
    }
    return nodes_[node].cls;
}

void DecisionTree::set_nodes(std::vector<TreeNode> nodes) {
    nodes_ = std::move(nodes);
}

}  // namespace manazel
