#include <random>

#include "common/oracles.hpp"
#include "common/util.hpp"
#include "doctest.h"
#include "manazel/classifiers.hpp"

using namespace manazel;

namespace {

bool same_structure(const std::vector<TreeNode>& a, const std::vector<TreeNode>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].leaf != b[i].leaf) return false;
        if (a[i].leaf) {
            if (a[i].cls != b[i].cls) return false;
        } else {
            if (a[i].feature != b[i].feature) return false;
            if (a[i].threshold != b[i].threshold) return false;
            if (a[i].left != b[i].left || a[i].right != b[i].right) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("tree") {

TEST_CASE("reproduces the brute-force construction on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        Dataset d = testutil::random_dataset(rng(), 12);
        int depth_cases[] = {-1, 3, 2};
        int depth = depth_cases[trial % 3];
        int mss = trial % 2 ? 2 : 4;
        HyperParams hp = {{"max_depth", depth < 0 ? "none" : std::to_string(depth)},
                          {"min_samples_split", std::to_string(mss)}};
        DecisionTree m(hp);
        m.fit(d);
        auto want = oracle::tree_fit(d, depth, mss);
        INFO("trial ", trial);
        REQUIRE(same_structure(m.nodes(), want));
        std::uniform_real_distribution<double> qa(0.0, 25.0), qw(0.0, 3.5);
        for (int q = 0; q < 20; ++q) {
            double a = qa(rng), w = qw(rng);
            CHECK(m.predict_one(a, w) == oracle::tree_predict(want, a, w));
        }
    }
}

TEST_CASE("a hand-checked stump") {
    // Classes split cleanly on arcv at the midpoint 6: one internal node,
    // two leaves, in preorder.
    Dataset d = testutil::make_dataset({{2.0, 0.1}, {4.0, 0.3}, {8.0, 0.2}, {10.0, 0.4}},
                                       {0, 0, 1, 1});
    DecisionTree m;
    m.fit(d);
    REQUIRE(m.nodes().size() == 3);
    CHECK_FALSE(m.nodes()[0].leaf);
    CHECK(m.nodes()[0].feature == 0);
    CHECK(m.nodes()[0].threshold == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(m.nodes()[0].left == 1);
    CHECK(m.nodes()[0].right == 2);
    CHECK(m.nodes()[1].leaf);
    CHECK(m.nodes()[1].cls == 0);
    CHECK(m.nodes()[2].leaf);
    CHECK(m.nodes()[2].cls == 1);
    CHECK(m.predict_one(5.9, 9.9) == 0);
    CHECK(m.predict_one(6.1, 0.0) == 1);
}

TEST_CASE("pure data yields a single leaf") {
    Dataset d = testutil::make_dataset({{1.0, 0.1}, {2.0, 0.2}, {3.0, 0.3}}, {1, 1, 1});
    DecisionTree m;
    m.fit(d);
    REQUIRE(m.nodes().size() == 1);
    CHECK(m.nodes()[0].leaf);
    CHECK(m.nodes()[0].cls == 1);
}

TEST_CASE("depth zero is rejected but depth one caps growth") {
    CHECK_THROWS_AS(DecisionTree(HyperParams{{"max_depth", "0"}}), InputError);
    Dataset d = testutil::random_dataset_two_class(7, 30);
    DecisionTree m(HyperParams{{"max_depth", "1"}});
    m.fit(d);
    CHECK(m.nodes().size() <= 3);
    for (const auto& n : m.nodes())
        if (!n.leaf) {
            CHECK(m.nodes()[static_cast<std::size_t>(n.left)].leaf);
            CHECK(m.nodes()[static_cast<std::size_t>(n.right)].leaf);
        }
}

TEST_CASE("min samples split stops small nodes") {
    Dataset d = testutil::random_dataset_two_class(9, 11);
    DecisionTree m(HyperParams{{"min_samples_split", "12"}});
    m.fit(d);
    REQUIRE(m.nodes().size() == 1);
    CHECK(m.nodes()[0].leaf);
}

TEST_CASE("leaf majority ties fall to class zero") {
    Dataset d = testutil::make_dataset({{1.0, 0.1}, {2.0, 0.2}}, {0, 1});
    DecisionTree m(HyperParams{{"min_samples_split", "5"}});  // cannot split
    m.fit(d);
    REQUIRE(m.nodes().size() == 1);
    CHECK(m.nodes()[0].cls == 0);
}

TEST_CASE("equal-score splits keep the first feature in order") {
    // Both features order the labels identically, so every left/right count
    // tuple is attainable on either feature; the winner must use feature 0.
    Dataset d = testutil::make_dataset(
        {{1.0, 0.1}, {2.0, 0.2}, {3.0, 0.3}, {4.0, 0.4}}, {0, 0, 1, 1});
    DecisionTree m;
    m.fit(d);
    REQUIRE_FALSE(m.nodes()[0].leaf);
    CHECK(m.nodes()[0].feature == 0);
    CHECK(m.nodes()[0].threshold == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("constant features produce a leaf even when impure") {
    Dataset d = testutil::make_dataset({{5.0, 0.5}, {5.0, 0.5}, {5.0, 0.5}}, {0, 1, 1});
    DecisionTree m;
    m.fit(d);
    REQUIRE(m.nodes().size() == 1);
    CHECK(m.nodes()[0].leaf);
    CHECK(m.nodes()[0].cls == 1);
}

TEST_CASE("hyperparameter validation and round trip") {
    CHECK_THROWS_AS(DecisionTree(HyperParams{{"max_depth", "-2"}}), InputError);
    CHECK_THROWS_AS(DecisionTree(HyperParams{{"min_samples_split", "1"}}), InputError);
    CHECK_THROWS_AS(DecisionTree(HyperParams{{"nonsense", "1"}}), InputError);
    DecisionTree unlimited(HyperParams{{"max_depth", "none"}, {"min_samples_split", "5"}});
    CHECK(unlimited.max_depth() == -1);
    CHECK(unlimited.hyperparams().at("max_depth") == "none");
    CHECK(unlimited.hyperparams().at("min_samples_split") == "5");
    DecisionTree capped(HyperParams{{"max_depth", "7"}});
    CHECK(capped.hyperparams().at("max_depth") == "7");
}

TEST_CASE("unfitted prediction and empty fits are errors") {
    DecisionTree m;
    CHECK_THROWS_AS((void)m.predict_one(1.0, 1.0), Error);
    CHECK_THROWS_AS(m.fit(Dataset{}), EmptyInputError);
}

}  // TEST_SUITE
