#include <benchmark/benchmark.h>

#include <random>

#include "manazel/calendar.hpp"
#include "manazel/classifiers.hpp"
#include "manazel/crescent.hpp"
#include "manazel/cv.hpp"
#include "manazel/events.hpp"
#include "manazel/ephemeris.hpp"
#include "manazel/model_io.hpp"

using namespace manazel;

namespace {

// Synthetic stand-in for the observation table: labels follow the
// visibility criterion with a sliver of boundary noise, which gives every
// learner a realistic amount of work.
Dataset training_set(std::size_t n) {
    Dataset d;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> arcv(0.0, 25.0);
    std::uniform_real_distribution<double> w(0.0, 3.5);
    std::uniform_real_distribution<double> noise(-1.5, 1.5);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = arcv(rng), ww = w(rng);
        const int y = odeh_value(a, ww) + noise(rng) >= 2.0 ? 1 : 0;
        d.rows.push_back({"", a, ww, y});
    }
    return d;
}

const Dataset& shared_training_set() {
    static const Dataset d = training_set(257);
    return d;
}

}  // namespace

static void BM_SunPosition(benchmark::State& state) {
    double jd = 2460000.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sun_ecliptic(jd));
        jd += 0.25;
    }
}
BENCHMARK(BM_SunPosition);

static void BM_MoonPosition(benchmark::State& state) {
    double jd = 2460000.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(moon_ecliptic(jd));
        jd += 0.25;
    }
}
BENCHMARK(BM_MoonPosition);

static void BM_TopocentricMoon(benchmark::State& state) {
    Instant t = instant_from_jd(2460380.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(moon_position(t, rabat()));
        t.jd_ut += 0.25;
    }
}
BENCHMARK(BM_TopocentricMoon);

static void BM_EveningEvents(benchmark::State& state) {
    CivilDate date{2024, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evening_events(date, rabat()));
        date = add_days(date, 1);
        if (date.year == 2026) date = {2024, 1, 1};
    }
}
BENCHMARK(BM_EveningEvents);

static void BM_CrescentGeometry(benchmark::State& state) {
    CivilDate date{2024, 1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_geometry(date, rabat()));
        date = add_days(date, 1);
        if (date.year == 2026) date = {2024, 1, 1};
    }
}
BENCHMARK(BM_CrescentGeometry);

static void BM_FitLogReg(benchmark::State& state) {
    const Dataset& d = shared_training_set();
    for (auto _ : state) {
        LogisticRegression m(HyperParams{{"C", "100"}});
        m.fit(d);
        benchmark::DoNotOptimize(m.params());
    }
}
BENCHMARK(BM_FitLogReg);

static void BM_FitTree(benchmark::State& state) {
    const Dataset& d = shared_training_set();
    for (auto _ : state) {
        DecisionTree m(HyperParams{{"max_depth", "5"}});
        m.fit(d);
        benchmark::DoNotOptimize(m.nodes().size());
    }
}
BENCHMARK(BM_FitTree);

static void BM_FitForest(benchmark::State& state) {
    const Dataset& d = shared_training_set();
    for (auto _ : state) {
        RandomForest m(HyperParams{{"n_estimators", "50"}, {"max_depth", "3"}}, 42);
        m.fit(d);
        benchmark::DoNotOptimize(m.trees().size());
    }
}
BENCHMARK(BM_FitForest);

static void BM_FitSvm(benchmark::State& state) {
    const Dataset& d = shared_training_set();
    for (auto _ : state) {
        LinearSvm m(HyperParams{{"C", "100"}});
        m.fit(d);
        benchmark::DoNotOptimize(m.params());
    }
}
BENCHMARK(BM_FitSvm);

static void BM_GridSearchLogReg(benchmark::State& state) {
    const Dataset& d = shared_training_set();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            grid_search(d, Family::LogReg, default_grid(Family::LogReg)));
    }
}
BENCHMARK(BM_GridSearchLogReg);

static void BM_SerializeRoundTrip(benchmark::State& state) {
    RandomForest m(HyperParams{{"n_estimators", "50"}, {"max_depth", "3"}}, 42);
    m.fit(shared_training_set());
    for (auto _ : state) {
        benchmark::DoNotOptimize(deserialize_model(serialize_model(m)));
    }
}
BENCHMARK(BM_SerializeRoundTrip);

static void BM_MonthStart(benchmark::State& state) {
    LogisticRegression model(HyperParams{{"C", "100"}});
    model.fit(shared_training_set());
    int month = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(determine_month_start(1446, month, rabat(), model));
        month = month % 12 + 1;
    }
}
BENCHMARK(BM_MonthStart);

BENCHMARK_MAIN();
