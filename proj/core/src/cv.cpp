#include <algorithm>
#include <cmath>
#include <numeric>

#include "manazel/cv.hpp"
#include "manazel/errors.hpp"

namespace manazel {

namespace {

Dataset subset(const Dataset& d, const std::vector<std::size_t>& idx) {
    Dataset out;
    out.has_date = d.has_date;
    out.rows.reserve(idx.size());
    for (std::size_t i : idx) out.rows.push_back(d.rows[i]);
    return out;
}

std::vector<int> labels_of(const Dataset& d) {
    std::vector<int> y;
    y.reserve(d.size());
    for (const Observation& o : d.rows) y.push_back(o.output);
    return y;
}

}  // namespace

std::vector<FoldSplit> kfold_split(const Dataset& d, int k) {
    if (d.empty()) throw EmptyInputError("cannot split an empty dataset");
    if (k < 2) throw InputError("k must be at least 2");

    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < d.size(); ++i) by_class[d.rows[i].output].push_back(i);
    for (int c = 0; c < 2; ++c) {
        if (by_class[c].size() < static_cast<std::size_t>(k)) {
            throw InfeasibleSplitError("class " + std::to_string(c) + " has " +
                                       std::to_string(by_class[c].size()) +
                                       " rows, fewer than k=" + std::to_string(k));
        }
    }

    // Each class is carved into k contiguous chunks (dataset order, no
    // shuffling); the first n_c mod k chunks carry the extra row.
    std::vector<FoldSplit> folds(static_cast<std::size_t>(k));
    for (int c = 0; c < 2; ++c) {
        const std::size_t n_c = by_class[c].size();
        const std::size_t base = n_c / static_cast<std::size_t>(k);
        const std::size_t extra = n_c % static_cast<std::size_t>(k);
        std::size_t pos = 0;
        for (std::size_t f = 0; f < static_cast<std::size_t>(k); ++f) {
            const std::size_t len = base + (f < extra ? 1 : 0);
            for (std::size_t r = 0; r < len; ++r) {
                folds[f].test.push_back(by_class[c][pos + r]);
            }
            pos += len;
        }
    }
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::sort(folds[f].test.begin(), folds[f].test.end());
        for (std::size_t g = 0; g < folds.size(); ++g) {
            if (g == f) continue;
            folds[f].train.insert(folds[f].train.end(), folds[g].test.begin(),
                                  folds[g].test.end());
        }
        std::sort(folds[f].train.begin(), folds[f].train.end());
    }
    return folds;
}

double accuracy_score(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size()) throw InputError("label/prediction sizes differ");
    if (y_true.empty()) throw EmptyInputError("cannot score empty label vectors");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] == y_pred[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

ClassificationReport classification_report(const std::vector<int>& y_true,
                                           const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size()) throw InputError("label/prediction sizes differ");
    if (y_true.empty()) throw EmptyInputError("cannot report on empty label vectors");

    std::size_t tp[2] = {0, 0};
    std::size_t predicted[2] = {0, 0};
    std::size_t support[2] = {0, 0};
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        ++support[y_true[i]];
        ++predicted[y_pred[i]];
        if (y_true[i] == y_pred[i]) ++tp[y_true[i]];
    }

    ClassificationReport rep;
    for (int c = 0; c < 2; ++c) {
        ClassMetrics& m = rep.per_class[c];
        m.support = support[c];
        m.precision = predicted[c] == 0
                          ? 0.0
                          : static_cast<double>(tp[c]) / static_cast<double>(predicted[c]);
        m.recall = support[c] == 0
                       ? 0.0
                       : static_cast<double>(tp[c]) / static_cast<double>(support[c]);
        m.f1 = (m.precision + m.recall) == 0.0
                   ? 0.0
                   : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    rep.accuracy = accuracy_score(y_true, y_pred);
    return rep;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over a golden-ratio stream offset: statistically
    // independent child seeds, stable across platforms.
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<int> cross_val_predict(const Dataset& d, Family f, const HyperParams& hp,
                                   int k, std::uint64_t seed) {
    const std::vector<FoldSplit> folds = kfold_split(d, k);
    std::vector<int> preds(d.size(), -1);
    for (std::size_t fi = 0; fi < folds.size(); ++fi) {
        auto clf = make_classifier(f, hp, derive_seed(seed, fi));
        clf->fit(subset(d, folds[fi].train));
        for (std::size_t idx : folds[fi].test) {
            preds[idx] = clf->predict_one(d.rows[idx].arcv, d.rows[idx].w);
        }
    }
    return preds;
}

CvReport grid_search(const Dataset& d, Family f, const std::vector<HyperParams>& grid,
                     int k, std::uint64_t seed) {
    if (grid.empty()) throw InputError("hyperparameter grid is empty");
    const std::vector<FoldSplit> folds = kfold_split(d, k);

    CvReport rep;
    rep.family = f;
    rep.candidates.reserve(grid.size());

    bool have_best = false;
    for (std::size_t ci = 0; ci < grid.size(); ++ci) {
        Candidate cand;
        cand.hp = grid[ci];
        const std::uint64_t cand_seed = derive_seed(seed, ci);
        try {
            double sum = 0.0;
            for (std::size_t fi = 0; fi < folds.size(); ++fi) {
                auto clf = make_classifier(f, grid[ci], derive_seed(cand_seed, fi));
                const Dataset train = subset(d, folds[fi].train);
                clf->fit(train);
                std::vector<int> y_true, y_pred;
                y_true.reserve(folds[fi].test.size());
                y_pred.reserve(folds[fi].test.size());
                for (std::size_t idx : folds[fi].test) {
                    y_true.push_back(d.rows[idx].output);
                    y_pred.push_back(clf->predict_one(d.rows[idx].arcv, d.rows[idx].w));
                }
                sum += accuracy_score(y_true, y_pred);
            }
            cand.mean_cv_accuracy = sum / static_cast<double>(folds.size());
        } catch (const Error& e) {
            cand.error = e.what();
            cand.mean_cv_accuracy = 0.0;
        }
        // Strict > keeps the earliest candidate on ties (grid order).
        if (cand.error.empty() &&
            (!have_best || cand.mean_cv_accuracy > rep.best_cv_score)) {
            have_best = true;
            rep.best_index = ci;
            rep.best_cv_score = cand.mean_cv_accuracy;
        }
        rep.candidates.push_back(std::move(cand));
    }
    if (!have_best) throw Error("every candidate in the grid failed to train");

    // Re-run the winner with its own candidate seed so the out-of-fold
    // report is reproducible from (family, hyperparams, stored seed) alone.
    rep.seed = derive_seed(seed, rep.best_index);
    const std::vector<int> oof =
        cross_val_predict(d, f, rep.candidates[rep.best_index].hp, k, rep.seed);
    rep.overall_cv_accuracy = accuracy_score(labels_of(d), oof);
    rep.report = classification_report(labels_of(d), oof);
    return rep;
}

std::vector<HyperParams> default_grid(Family f) {
    std::vector<HyperParams> grid;
    switch (f) {
        case Family::LogReg:
            for (const char* c : {"0.01", "0.1", "1", "10", "100"}) {
                grid.push_back({{"C", c}, {"solver", "lbfgs"}});
            }
            break;
        case Family::Tree:
            for (const char* depth : {"3", "5", "7", "none"}) {
                for (const char* mss : {"2", "5", "10"}) {
                    grid.push_back({{"max_depth", depth}, {"min_samples_split", mss}});
                }
            }
            break;
        case Family::Forest:
            for (const char* n : {"50", "100"}) {
                for (const char* depth : {"3", "5", "none"}) {
                    for (const char* mss : {"2", "5", "10"}) {
                        grid.push_back({{"max_depth", depth},
                                        {"min_samples_split", mss},
                                        {"n_estimators", n}});
                    }
                }
            }
            break;
        case Family::Svm:
            for (const char* c : {"0.1", "1", "10", "100"}) {
                grid.push_back({{"C", c}, {"kernel", "linear"}});
            }
            break;
        case Family::Knn:
            for (const char* k : {"3", "5", "7"}) {
                for (const char* w : {"uniform", "distance"}) {
                    grid.push_back({{"n_neighbors", k}, {"weights", w}});
                }
            }
            break;
        case Family::Stub:
            throw InputError("the stub family has no tuning grid");
    }
    return grid;
}

HyperParams default_hyperparams(Family f) {
    switch (f) {
        case Family::LogReg:
            return {{"C", "100"}, {"solver", "lbfgs"}};
        case Family::Tree:
            return {{"max_depth", "5"}, {"min_samples_split", "2"}};
        case Family::Forest:
            return {{"max_depth", "3"}, {"min_samples_split", "10"}, {"n_estimators", "50"}};
        case Family::Svm:
            return {{"C", "100"}, {"kernel", "linear"}};
        case Family::Knn:
            return {{"n_neighbors", "3"}, {"weights", "distance"}};
        case Family::Stub:
            return {};
    }
    throw InputError("unknown family");
}

}  // namespace manazel
