#include "manazel/classifiers.hpp"

#include <set>

#include "hp_util.hpp"

namespace manazel {

std::string family_name(Family f) {
    switch (f) {
        case Family::LogReg: return "logreg";
        case Family::Tree: return "tree";
        case Family::Forest: return "forest";
        case Family::Svm: return "svm";
        case Family::Knn: return "knn";
        case Family::Stub: return "stub";
    }
    throw InputError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "logreg") return Family::LogReg;
    if (name == "tree") return Family::Tree;
    if (name == "forest") return Family::Forest;
    if (name == "svm") return Family::Svm;
    if (name == "knn") return Family::Knn;
    if (name == "stub") return Family::Stub;
    throw InputError("unknown model family '" + name + "'");
}

void validate_hyperparams(Family f, const HyperParams& hp) {
    using detail::parse_depth;
    using detail::parse_int_min;
    using detail::parse_positive_double;

    std::set<std::string> allowed;
    switch (f) {
        case Family::LogReg: allowed = {"C", "solver"}; break;
        case Family::Tree: allowed = {"max_depth", "min_samples_split"}; break;
        case Family::Forest:
            allowed = {"n_estimators", "max_depth", "min_samples_split"};
            break;
        case Family::Svm: allowed = {"C", "kernel"}; break;
        case Family::Knn: allowed = {"n_neighbors", "weights"}; break;
        case Family::Stub:
            if (!hp.empty()) throw InputError("stub model takes no hyperparameters");
            return;
    }
    for (const auto& [key, value] : hp) {
        if (!allowed.count(key)) {
            throw InputError("hyperparameter '" + key + "' is not valid for family '" +
                             family_name(f) + "'");
        }
        if (key == "C") parse_positive_double(value, key);
        else if (key == "max_depth") parse_depth(value);
        else if (key == "min_samples_split") parse_int_min(value, key, 2);
        else if (key == "n_estimators") parse_int_min(value, key, 1);
        else if (key == "n_neighbors") parse_int_min(value, key, 1);
        else if (key == "solver" && value != "lbfgs")
            throw UnsupportedOptionError("unsupported solver '" + value + "'");
        else if (key == "kernel" && value != "linear")
            throw UnsupportedOptionError("unsupported kernel '" + value +
                                         "' (only linear)");
        else if (key == "weights" && value != "uniform" && value != "distance")
            throw InputError("weights must be 'uniform' or 'distance', got '" + value +
                             "'");
    }
}

std::unique_ptr<Classifier> make_classifier(Family f, const HyperParams& hp,
                                            std::uint64_t seed) {
    switch (f) {
        case Family::LogReg: return std::make_unique<LogisticRegression>(hp);
        case Family::Tree: return std::make_unique<DecisionTree>(hp);
        case Family::Forest: return std::make_unique<RandomForest>(hp, seed);
        case Family::Svm: return std::make_unique<LinearSvm>(hp);
        case Family::Knn: return std::make_unique<Knn>(hp);
        case Family::Stub: break;
    }
    throw InputError("cannot construct a '" + family_name(f) + "' model");
}

std::vector<int> Classifier::predict(const Dataset& d) const {
    std::vector<int> out;
    out.reserve(d.size());
    for (const Observation& o : d.rows) {
        out.push_back(predict_one(o.arcv, o.w));
    }
    return out;
}

}  // namespace manazel
