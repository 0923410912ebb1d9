#include <algorithm>
#include <set>

#include "common/util.hpp"
#include "doctest.h"
#include "manazel/cv.hpp"

using namespace manazel;

TEST_SUITE("cv") {

TEST_CASE("four folds of the 257-row record shape up as expected") {
    Dataset d = testutil::fixture_257_153();
    auto folds = kfold_split(d, 4);
    REQUIRE(folds.size() == 4);

    std::multiset<std::size_t> sizes;
    for (const auto& f : folds) sizes.insert(f.test.size());
    CHECK(sizes == std::multiset<std::size_t>{65, 64, 64, 64});

    // Disjoint and exhaustive.
    std::set<std::size_t> seen;
    for (const auto& f : folds)
        for (std::size_t i : f.test) CHECK(seen.insert(i).second);
    CHECK(seen.size() == 257);

    // Stratification: per-class sizes differ by at most one across folds,
    // and each fold's train set is exactly the complement of its test set.
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::size_t> per_fold;
        for (const auto& f : folds) {
            std::size_t c = 0;
            for (std::size_t i : f.test) c += d.rows[i].output == cls ? 1 : 0;
            per_fold.push_back(c);
        }
        auto [lo, hi] = std::minmax_element(per_fold.begin(), per_fold.end());
        CHECK(*hi - *lo <= 1);
    }
    for (const auto& f : folds) {
        CHECK(f.train.size() + f.test.size() == 257);
        CHECK(std::is_sorted(f.test.begin(), f.test.end()));
        CHECK(std::is_sorted(f.train.begin(), f.train.end()));
        std::set<std::size_t> tr(f.train.begin(), f.train.end());
        for (std::size_t i : f.test) CHECK_FALSE(tr.count(i));
    }
}

TEST_CASE("class counts split 153 and 104 as 39 38 38 38 and 26 26 26 26") {
    Dataset d = testutil::fixture_257_153();
    auto folds = kfold_split(d, 4);
    std::vector<std::size_t> ones, zeros;
    for (const auto& f : folds) {
        std::size_t c1 = 0;
        for (std::size_t i : f.test) c1 += static_cast<std::size_t>(d.rows[i].output);
        ones.push_back(c1);
        zeros.push_back(f.test.size() - c1);
    }
    CHECK(std::multiset<std::size_t>(ones.begin(), ones.end()) ==
          std::multiset<std::size_t>{39, 38, 38, 38});
    CHECK(std::multiset<std::size_t>(zeros.begin(), zeros.end()) ==
          std::multiset<std::size_t>{26, 26, 26, 26});
}

TEST_CASE("fold construction is deterministic and unshuffled") {
    Dataset d = testutil::fixture_257_153();
    auto a = kfold_split(d, 4);
    auto b = kfold_split(d, 4);
    for (std::size_t f = 0; f < a.size(); ++f) {
        CHECK(a[f].test == b[f].test);
        CHECK(a[f].train == b[f].train);
    }
    // First fold's test set takes the earliest rows of each class.
    std::size_t first_pos = 0;
    while (d.rows[first_pos].output != 1) ++first_pos;
    CHECK(std::find(a[0].test.begin(), a[0].test.end(), first_pos) != a[0].test.end());
}

TEST_CASE("infeasible splits are rejected") {
    Dataset d = testutil::fixture_257_153();
    CHECK_THROWS_AS((void)kfold_split(d, 1), InputError);
    CHECK_THROWS_AS((void)kfold_split(Dataset{}, 4), EmptyInputError);

    Dataset tiny = testutil::make_dataset(
        {{1.0, 0.1}, {2.0, 0.2}, {3.0, 0.3}, {4.0, 0.4}, {5.0, 0.5}}, {1, 1, 1, 1, 0});
    CHECK_THROWS_AS((void)kfold_split(tiny, 2), InfeasibleSplitError);  // one zero only
    Dataset pair = testutil::make_dataset(
        {{1.0, 0.1}, {2.0, 0.2}, {3.0, 0.3}, {4.0, 0.4}}, {0, 1, 0, 1});
    CHECK_NOTHROW((void)kfold_split(pair, 2));
    CHECK_THROWS_AS((void)kfold_split(pair, 3), InfeasibleSplitError);
}

TEST_CASE("accuracy and report arithmetic") {
    std::vector<int> truth = {1, 1, 1, 0, 0, 0};
    std::vector<int> pred = {1, 1, 0, 0, 0, 1};
    CHECK(accuracy_score(truth, pred) == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
    ClassificationReport r = classification_report(truth, pred);
    CHECK(r.accuracy == doctest::Approx(4.0 / 6.0).epsilon(1e-15));
    // Class 1: predicted {0,1,5}, correct {0,1}: precision 2/3, recall 2/3.
    CHECK(r.per_class[1].precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.per_class[1].recall == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.per_class[1].f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.per_class[1].support == 3);
    CHECK(r.per_class[0].support == 3);

    CHECK_THROWS_AS((void)accuracy_score({1}, {1, 0}), InputError);
    CHECK_THROWS_AS((void)accuracy_score({}, {}), EmptyInputError);

    // A class never predicted has precision 0 by convention.
    ClassificationReport none = classification_report({0, 1}, {0, 0});
    CHECK(none.per_class[1].precision == 0.0);
    CHECK(none.per_class[1].recall == 0.0);
    CHECK(none.per_class[1].f1 == 0.0);
}

TEST_CASE("seed derivation is deterministic with pinned values") {
    CHECK(derive_seed(42, 0) == 13679457532755275413ULL);
    CHECK(derive_seed(42, 1) == 2949826092126892291ULL);
    CHECK(derive_seed(42, 5) == 16015981125662989062ULL);
    CHECK(derive_seed(0, 0) == 16294208416658607535ULL);
    CHECK(derive_seed(7, 3) == 10753165928301472203ULL);
    std::set<std::uint64_t> distinct;
    for (std::uint64_t i = 0; i < 100; ++i) distinct.insert(derive_seed(42, i));
    CHECK(distinct.size() == 100);
}

TEST_CASE("cross-validated predictions cover every row exactly once") {
    Dataset d = testutil::fixture_257_153();
    auto pred = cross_val_predict(d, Family::Knn, {{"n_neighbors", "3"}}, 4, 42);
    REQUIRE(pred.size() == 257);
    for (int p : pred) CHECK((p == 0 || p == 1));
    auto again = cross_val_predict(d, Family::Knn, {{"n_neighbors", "3"}}, 4, 42);
    CHECK(pred == again);
}

TEST_CASE("a perfect classifier earns a perfect report") {
    Dataset d = testutil::separable_toy(16);  // 16 per class, 4-fold splittable
    auto pred = cross_val_predict(d, Family::LogReg, {{"C", "100"}}, 4, 42);
    std::vector<int> truth;
    for (const auto& r : d.rows) truth.push_back(r.output);
    ClassificationReport rep = classification_report(truth, pred);
    CHECK(rep.accuracy == 1.0);
    for (int cls = 0; cls < 2; ++cls) {
        CHECK(rep.per_class[cls].precision == 1.0);
        CHECK(rep.per_class[cls].recall == 1.0);
        CHECK(rep.per_class[cls].f1 == 1.0);
    }
}

TEST_CASE("grid search selects by mean fold accuracy with ties to order") {
    Dataset d = testutil::separable_toy(16);
    std::vector<HyperParams> grid = {{{"C", "1"}}};
    CvReport one = grid_search(d, Family::LogReg, grid, 4, 42);
    CHECK(one.best_index == 0);
    CHECK(one.candidates.size() == 1);
    CHECK(one.best_cv_score == doctest::Approx(1.0));

    // A duplicate of the winner later in the grid must not displace it.
    std::vector<HyperParams> dup = {{{"C", "1"}}, {{"C", "1"}}, {{"C", "1"}}};
    CvReport tie = grid_search(d, Family::LogReg, dup, 4, 42);
    CHECK(tie.best_index == 0);
    CHECK(tie.candidates.size() == 3);
    CHECK(tie.candidates[0].mean_cv_accuracy ==
          doctest::Approx(tie.candidates[2].mean_cv_accuracy).epsilon(1e-15));
}

TEST_CASE("grid search records failing candidates instead of dying") {
    Dataset d = testutil::separable_toy(3);  // 6 rows total
    std::vector<HyperParams> grid = {
        {{"n_neighbors", "50"}},  // k exceeds every training fold: fails
        {{"n_neighbors", "1"}},
    };
    CvReport rep = grid_search(d, Family::Knn, grid, 2, 42);
    CHECK_FALSE(rep.candidates[0].error.empty());
    CHECK(rep.candidates[1].error.empty());
    CHECK(rep.best_index == 1);

    std::vector<HyperParams> all_bad = {{{"n_neighbors", "50"}}};
    CHECK_THROWS_AS((void)grid_search(d, Family::Knn, all_bad, 2, 42), Error);
    CHECK_THROWS_AS((void)grid_search(d, Family::Knn, {}, 2, 42), InputError);
}

TEST_CASE("default grids contain the published winners") {
    auto contains = [](const std::vector<HyperParams>& grid, const HyperParams& hp) {
        return std::find(grid.begin(), grid.end(), hp) != grid.end();
    };
    CHECK(contains(default_grid(Family::LogReg), {{"C", "100"}, {"solver", "lbfgs"}}));
    CHECK(contains(default_grid(Family::Tree),
                   {{"max_depth", "5"}, {"min_samples_split", "2"}}));
    CHECK(contains(default_grid(Family::Forest), {{"max_depth", "3"},
                                                  {"min_samples_split", "10"},
                                                  {"n_estimators", "50"}}));
    CHECK(contains(default_grid(Family::Svm), {{"C", "100"}, {"kernel", "linear"}}));
    CHECK(contains(default_grid(Family::Knn),
                   {{"n_neighbors", "3"}, {"weights", "distance"}}));

    CHECK(default_hyperparams(Family::LogReg).at("C") == "100");
    CHECK(default_hyperparams(Family::Tree).at("max_depth") == "5");
    CHECK(default_hyperparams(Family::Forest).at("n_estimators") == "50");
    CHECK(default_hyperparams(Family::Svm).at("C") == "100");
    CHECK(default_hyperparams(Family::Knn).at("n_neighbors") == "3");
    CHECK_THROWS_AS((void)default_grid(Family::Stub), InputError);
}

TEST_CASE("per-fold models see derived seeds, and the report keeps its own") {
    // Two forests cross-validated with different base seeds should disagree
    // somewhere; the same base seed must reproduce exactly.
    Dataset d = testutil::random_dataset_two_class(71, 60);
    HyperParams hp = {{"n_estimators", "5"}, {"max_depth", "3"}};
    auto a = cross_val_predict(d, Family::Forest, hp, 4, 1);
    auto b = cross_val_predict(d, Family::Forest, hp, 4, 1);
    CHECK(a == b);

    CvReport rep = grid_search(d, Family::Forest, {hp}, 4, 42);
    CHECK(rep.seed == derive_seed(42, 0));
}

}  // TEST_SUITE
