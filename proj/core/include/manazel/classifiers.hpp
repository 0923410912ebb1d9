#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "manazel/dataset.hpp"

namespace manazel {

// The five model families under comparison, plus the constant stub the CLI
// offers for calendar runs without a trained model.
enum class Family { LogReg, Tree, Forest, Svm, Knn, Stub };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Family-specific keys with string values ("none" encodes an unlimited
// depth). std::map keeps printing and serialization order-stable.
using HyperParams = std::map<std::string, std::string>;

// Rejects keys foreign to the family and out-of-range values.
void validate_hyperparams(Family f, const HyperParams& hp);

class Classifier {
public:
    virtual ~Classifier() = default;

    virtual void fit(const Dataset& d) = 0;
    virtual int predict_one(double arcv, double w) const = 0;
    std::vector<int> predict(const Dataset& d) const;

    virtual Family family() const = 0;
    virtual HyperParams hyperparams() const = 0;
    virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

// Builds an unfitted classifier; `seed` only matters for the forest.
std::unique_ptr<Classifier> make_classifier(Family f, const HyperParams& hp,
                                            std::uint64_t seed = 42);

// ---------------------------------------------------------------------------

// L2-regularized logistic regression on raw (arcv, w):
//   minimize 1/2 |w|^2 + C * sum log(1 + exp(-y_i (w.x_i + b))), y in {-1,+1},
// intercept unpenalized. Solved by damped Newton iterations to gradient
// infinity-norm < 1e-6. The "solver" key is a label carried through from the
// tuning table; any optimizer meeting the tolerance satisfies the contract.
class LogisticRegression : public Classifier {
public:
    explicit LogisticRegression(const HyperParams& hp = {});

    void fit(const Dataset& d) override;
    int predict_one(double arcv, double w) const override;  // sigma >= 0.5 -> 1
    Family family() const override { return Family::LogReg; }
    HyperParams hyperparams() const override;

    double decision(double arcv, double w) const;     // w.x + b
    double probability(double arcv, double w) const;  // sigma(decision)

    // params = {w_arcv, w_w, b}. Exposed so the analytic gradient can be
    // checked against finite differences at arbitrary points.
    static double objective(const Dataset& d, double c, const std::array<double, 3>& params);
    static std::array<double, 3> gradient(const Dataset& d, double c,
                                          const std::array<double, 3>& params);

    std::array<double, 3> params() const { return {w_[0], w_[1], b_}; }
    void set_params(const std::array<double, 3>& p);

private:
    double c_ = 1.0;
    std::string c_str_ = "1";  // original spelling, kept for exact round-trips
    std::string solver_ = "lbfgs";
    double w_[2] = {0.0, 0.0};
    double b_ = 0.0;
};

// ---------------------------------------------------------------------------

struct TreeNode {
    bool leaf = true;
    int cls = 0;            // leaf prediction
    int feature = -1;       // 0 = arcv, 1 = w
    double threshold = 0.0; // x[feature] <= threshold goes left
    int left = -1;
    int right = -1;
};

// CART with Gini impurity. Thresholds are midpoints between consecutive
// sorted unique values; score ties resolve to the lower feature index, then
// the lower threshold; leaf majority ties resolve to class 0.
class DecisionTree : public Classifier {
public:
    // Returns candidate feature indices for one split attempt. Called once
    // per attempted split in depth-first build order (left before right);
    // the forest plugs its per-split feature draw in here.
    using FeatureSampler = std::function<std::vector<int>()>;

    explicit DecisionTree(const HyperParams& hp = {});

    void fit(const Dataset& d) override;
    void fit_sampled(const std::vector<std::array<double, 2>>& x,
                     const std::vector<int>& y, const FeatureSampler& sampler);
    int predict_one(double arcv, double w) const override;
    Family family() const override { return Family::Tree; }
    HyperParams hyperparams() const override;

    int max_depth() const { return max_depth_; }  // -1 = unlimited
    int min_samples_split() const { return min_samples_split_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    void set_nodes(std::vector<TreeNode> nodes);

private:
    int build(const std::vector<std::array<double, 2>>& x, const std::vector<int>& y,
              std::vector<std::size_t>& idx, int depth, const FeatureSampler& sampler);

    int max_depth_ = -1;
    int min_samples_split_ = 2;
    std::vector<TreeNode> nodes_;
};

// ---------------------------------------------------------------------------

// Bagged CART trees: bootstrap of the same size with replacement from a
// seeded deterministic generator, one random candidate feature per split
// (floor(sqrt(2)) = 1), majority vote with ties to class 0. Identical seed
// implies an identical model. The two hooks exist for oracle-equivalence
// tests; they are not serialized.
class RandomForest : public Classifier {
public:
    explicit RandomForest(const HyperParams& hp = {}, std::uint64_t seed = 42);

    void fit(const Dataset& d) override;
    int predict_one(double arcv, double w) const override;
    Family family() const override { return Family::Forest; }
    HyperParams hyperparams() const override;
    std::optional<std::uint64_t> seed() const override { return seed_; }

    const std::vector<DecisionTree>& trees() const { return trees_; }
    void set_trees(std::vector<DecisionTree> trees);

    bool hook_disable_bootstrap = false;
    bool hook_disable_feature_subsample = false;

private:
    int n_estimators_ = 100;
    int max_depth_ = -1;
    int min_samples_split_ = 2;
    std::uint64_t seed_ = 42;
    std::vector<DecisionTree> trees_;
};

// ---------------------------------------------------------------------------

// Linear soft-margin SVM:
//   minimize 1/2 |w|^2 + C * sum max(0, 1 - y_i (w.x_i + b)),
// trained by SMO on the dual with maximal-violating-pair selection. Only the
// linear kernel is supported; anything else raises UnsupportedOptionError.
// Decision sign(w.x + b); exactly 0 falls to class 0.
class LinearSvm : public Classifier {
public:
    explicit LinearSvm(const HyperParams& hp = {});

    void fit(const Dataset& d) override;
    int predict_one(double arcv, double w) const override;
    Family family() const override { return Family::Svm; }
    HyperParams hyperparams() const override;

    double decision(double arcv, double w) const;
    static double objective(const Dataset& d, double c, const std::array<double, 3>& params);

    std::array<double, 3> params() const { return {w_[0], w_[1], b_}; }
    void set_params(const std::array<double, 3>& p);

private:
    double c_ = 1.0;
    std::string c_str_ = "1";  // original spelling, kept for exact round-trips
    std::string kernel_ = "linear";
    double w_[2] = {0.0, 0.0};
    double b_ = 0.0;
};

// ---------------------------------------------------------------------------

// k-nearest-neighbours on raw (arcv, w) with Euclidean distance. Neighbours
// order by (distance, dataset index). Uniform weights take a majority vote;
// distance weights vote with 1/d, except that exact zero-distance neighbours
// alone decide when present. All vote ties fall to class 0.
class Knn : public Classifier {
public:
    explicit Knn(const HyperParams& hp = {});

    void fit(const Dataset& d) override;
    int predict_one(double arcv, double w) const override;
    Family family() const override { return Family::Knn; }
    HyperParams hyperparams() const override;

    enum class Weights { Uniform, Distance };
    int k() const { return k_; }
    Weights weights() const { return weights_; }
    const std::vector<std::array<double, 2>>& stored_x() const { return x_; }
    const std::vector<int>& stored_y() const { return y_; }
    void set_stored(std::vector<std::array<double, 2>> x, std::vector<int> y);

private:
    int k_ = 5;
    Weights weights_ = Weights::Uniform;
    std::vector<std::array<double, 2>> x_;
    std::vector<int> y_;
};

// ---------------------------------------------------------------------------

// Fixed-output stub ("--model-stub one"): lets calendar scans run without a
// trained model. Not tunable, not serializable.
class ConstantClassifier : public Classifier {
public:
    explicit ConstantClassifier(int value) : value_(value) {}

    void fit(const Dataset&) override {}
    int predict_one(double, double) const override { return value_; }
    Family family() const override { return Family::Stub; }
    HyperParams hyperparams() const override { return {}; }

private:
    int value_;
};

}  // namespace manazel
