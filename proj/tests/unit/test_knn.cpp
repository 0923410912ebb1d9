#include <random>

#include "common/oracles.hpp"
#include "common/util.hpp"
#include "doctest.h"
#include "manazel/classifiers.hpp"

using namespace manazel;

TEST_SUITE("knn") {

TEST_CASE("matches the exhaustive-scan oracle on random queries") {
    Dataset d = testutil::random_dataset(401, 40);
    std::mt19937_64 rng(402);
    std::uniform_real_distribution<double> qa(-2.0, 27.0), qw(-0.5, 4.0);
    for (int k : {1, 3, 5}) {
        for (const char* weights : {"uniform", "distance"}) {
            Knn m(HyperParams{{"n_neighbors", std::to_string(k)}, {"weights", weights}});
            m.fit(d);
            bool dist = std::string(weights) == "distance";
            for (int q = 0; q < 50; ++q) {
                double a = qa(rng), w = qw(rng);
                INFO("k=", k, " weights=", weights, " query ", q);
                CHECK(m.predict_one(a, w) == oracle::knn_predict(d, k, dist, a, w));
            }
        }
    }
}

TEST_CASE("one neighbour reproduces training labels") {
    Dataset d = testutil::random_dataset(403, 25);  // distinct points w.h.p.
    Knn m(HyperParams{{"n_neighbors", "1"}});
    m.fit(d);
    for (const auto& r : d.rows) CHECK(m.predict_one(r.arcv, r.w) == r.output);
}

TEST_CASE("a zero-distance neighbour decides under distance weights") {
    // Query sits exactly on a training point; two other points are close
    // enough to outvote it under uniform weights.
    Dataset d = testutil::make_dataset(
        {{5.0, 0.5}, {5.01, 0.5}, {5.02, 0.5}, {20.0, 2.0}}, {1, 0, 0, 0});
    Knn dist(HyperParams{{"n_neighbors", "3"}, {"weights", "distance"}});
    dist.fit(d);
    CHECK(dist.predict_one(5.0, 0.5) == 1);  // the coincident point wins alone
    Knn uni(HyperParams{{"n_neighbors", "3"}, {"weights", "uniform"}});
    uni.fit(d);
    CHECK(uni.predict_one(5.0, 0.5) == 0);  // plain majority of the three
}

TEST_CASE("coincident zero-distance points vote among themselves") {
    Dataset d = testutil::make_dataset(
        {{5.0, 0.5}, {5.0, 0.5}, {5.0, 0.5}, {5.1, 0.5}, {5.1, 0.5}},
        {1, 1, 0, 0, 0});
    Knn m(HyperParams{{"n_neighbors", "5"}, {"weights", "distance"}});
    m.fit(d);
    // Zero-distance majority is 2:1 for class 1; the near points do not count.
    CHECK(m.predict_one(5.0, 0.5) == 1);
}

TEST_CASE("distance ties break by dataset order") {
    // Two points equidistant from the query; k=1 must take the earlier row.
    Dataset d = testutil::make_dataset({{4.0, 0.5}, {6.0, 0.5}}, {1, 0});
    Knn m(HyperParams{{"n_neighbors", "1"}});
    m.fit(d);
    CHECK(m.predict_one(5.0, 0.5) == 1);

    Dataset r = testutil::make_dataset({{4.0, 0.5}, {6.0, 0.5}}, {0, 1});
    Knn m2(HyperParams{{"n_neighbors", "1"}});
    m2.fit(r);
    CHECK(m2.predict_one(5.0, 0.5) == 0);
}

TEST_CASE("vote ties fall to class zero") {
    Dataset d = testutil::make_dataset({{4.0, 0.5}, {6.0, 0.5}}, {1, 0});
    Knn m(HyperParams{{"n_neighbors", "2"}, {"weights", "uniform"}});
    m.fit(d);
    CHECK(m.predict_one(5.0, 0.5) == 0);  // one vote each
    // Distance weights tie as well at the exact midpoint.
    Knn w(HyperParams{{"n_neighbors", "2"}, {"weights", "distance"}});
    w.fit(d);
    CHECK(w.predict_one(5.0, 0.5) == 0);
}

TEST_CASE("closer points dominate distance-weighted votes") {
    Dataset d = testutil::make_dataset({{5.0, 0.5}, {7.0, 0.5}, {7.2, 0.5}}, {1, 0, 0});
    Knn m(HyperParams{{"n_neighbors", "3"}, {"weights", "distance"}});
    m.fit(d);
    CHECK(m.predict_one(5.2, 0.5) == 1);  // 1/0.2 outweighs 1/1.8 + 1/2.0
    Knn u(HyperParams{{"n_neighbors", "3"}, {"weights", "uniform"}});
    u.fit(d);
    CHECK(u.predict_one(5.2, 0.5) == 0);
}

TEST_CASE("hyperparameter validation") {
    CHECK_THROWS_AS(Knn(HyperParams{{"n_neighbors", "0"}}), InputError);
    CHECK_THROWS_AS(Knn(HyperParams{{"n_neighbors", "2.5"}}), InputError);
    CHECK_THROWS_AS(Knn(HyperParams{{"weights", "gaussian"}}), InputError);
    CHECK_THROWS_AS(Knn(HyperParams{{"C", "1"}}), InputError);
    Knn m(HyperParams{{"n_neighbors", "3"}, {"weights", "distance"}});
    CHECK(m.hyperparams().at("n_neighbors") == "3");
    CHECK(m.hyperparams().at("weights") == "distance");
}

TEST_CASE("k larger than the dataset is rejected at fit time") {
    Dataset d = testutil::random_dataset(405, 4);
    Knn m(HyperParams{{"n_neighbors", "5"}});
    CHECK_THROWS_AS(m.fit(d), InputError);
    CHECK_THROWS_AS(m.fit(Dataset{}), EmptyInputError);
}

TEST_CASE("unfitted prediction is an error") {
    Knn m;
    CHECK_THROWS_AS((void)m.predict_one(1.0, 1.0), Error);
}

}  // TEST_SUITE
