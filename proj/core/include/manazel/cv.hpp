#pragma once

#include "manazel/classifiers.hpp"

namespace manazel {

struct FoldSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Stratified k folds assembled deterministically from dataset order (no
// shuffling): each class's members are chunked contiguously, the first
// (n_c mod k) folds taking the extra row. Raises InfeasibleSplitError when
// a class has fewer than k members.
std::vector<FoldSplit> kfold_split(const Dataset& d, int k);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

struct ClassificationReport {
    ClassMetrics per_class[2];  // index = class label
    double accuracy = 0.0;
};

double accuracy_score(const std::vector<int>& y_true, const std::vector<int>& y_pred);
ClassificationReport classification_report(const std::vector<int>& y_true,
                                           const std::vector<int>& y_pred);

// Deterministic seed derivation (splitmix-style) so grid candidates and CV
// folds can run in any order without changing results.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// One out-of-fold prediction per row: row i is predicted by the model
// trained on every fold except the one containing i.
std::vector<int> cross_val_predict(const Dataset& d, Family f, const HyperParams& hp,
                                   int k = 4, std::uint64_t seed = 42);

struct Candidate {
    HyperParams hp;
    double mean_cv_accuracy = 0.0;
    std::string error;  // non-empty when training failed; excluded from selection
};

struct CvReport {
    Family family = Family::LogReg;
    std::vector<Candidate> candidates;  // in grid order
    std::size_t best_index = 0;
    double best_cv_score = 0.0;
    double overall_cv_accuracy = 0.0;   // from cross-validated predictions
    ClassificationReport report;
    std::uint64_t seed = 42;
};

// Mean test-fold accuracy per candidate; ties break to the earlier grid
// entry. The winning candidate is then re-run through cross_val_predict to
// fill the overall accuracy and per-class report.
CvReport grid_search(const Dataset& d, Family f, const std::vector<HyperParams>& grid,
                     int k = 4, std::uint64_t seed = 42);

// The tuning grids (each contains its family's winning configuration) and
// the per-family default fit configuration (the winners themselves).
std::vector<HyperParams> default_grid(Family f);
HyperParams default_hyperparams(Family f);

}  // namespace manazel
