#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "manazel/crescent.hpp"
#include "manazel/errors.hpp"
#include "manazel/hijri.hpp"

// Builds the bundled observation fixture: a month-by-month chain of sighting
// evenings at Rabat. The 29th evening of every month contributes a row — the
// crescent geometry plus the sighting outcome. When the crescent goes unseen
// the month runs to 30 days and the 30th evening's attempt is recorded too,
// so unseen months leave two rows, exactly like a civil announcement record.
// The outcome follows a naked-eye visibility rule (arcv >= A - B*w, moon up
// past sunset) with a small seeded chance that weather hides a real
// crescent. The chain self-corrects: a missed month shifts every later doubt
// evening, as in the practice it imitates.

namespace {

using namespace manazel;

struct ChainParams {
    std::uint64_t seed = 20120603;
    int rows = 257;
    int start_hijri_year = 1425;
    double p_cloud = 0.018;
    double vis_a = 9.2;   // visibility threshold at w = 0
    double vis_b = 1.5;   // threshold slope in w
};

bool ruled_visible(const CrescentGeometry& g, const ChainParams& p) {
    return !g.below_horizon && g.arcv >= p.vis_a - p.vis_b * g.w;
}

}  // namespace

int main(int argc, char** argv) {
    ChainParams p;
    std::string out_path = "data/observations.csv";

    CLI::App app{"Generate the bundled crescent observation fixture"};
    app.add_option("--out", out_path, "Output CSV path");
    app.add_option("--seed", p.seed, "Weather RNG seed");
    app.add_option("--rows", p.rows, "Number of recorded sighting attempts")
        ->check(CLI::Range(1, 6000));
    app.add_option("--start-hijri-year", p.start_hijri_year,
                   "Hijri year whose Muharram anchors the chain");
    app.add_option("--p-cloud", p.p_cloud, "Chance a real crescent goes unseen")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--vis-a", p.vis_a, "Visibility threshold intercept, degrees");
    app.add_option("--vis-b", p.vis_b, "Visibility threshold slope, degrees/arcmin");
    CLI11_PARSE(app, argc, argv);

    try {
        const GeoLocation site = rabat();

        // Anchor: scan forward from the tabular Muharram baseline until the
        // rule first fires; the month begins the next civil day.
        CivilDate start =
            hijri_to_gregorian_tabular({p.start_hijri_year, 1, 1});
        {
            CivilDate evening = add_days(start, -1);
            for (int i = 0; i < 6; ++i) {
                if (ruled_visible(compute_geometry(evening, site), p)) break;
                evening = add_days(evening, 1);
            }
            start = add_days(evening, 1);
        }

        std::mt19937_64 rng(p.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
            return 2;
        }
        out << "date,arcv,w,output\n";

        int written = 0, positives = 0, months = 0, noise = 0;
        CivilDate first_row{}, last_row{};
        const auto record = [&](const CivilDate& evening, const CrescentGeometry& g,
                                int output, bool hidden) {
            char row[96];
            std::snprintf(row, sizeof row, "%04d-%02d-%02d,%.6f,%.6f,%d\n", evening.year,
                          evening.month, evening.day, g.arcv, g.w, output);
            out << row;
            positives += output;
            noise += hidden ? 1 : 0;
            if (written == 0) first_row = evening;
            last_row = evening;
            ++written;
        };

        while (written < p.rows) {
            ++months;
            const CivilDate doubt = add_days(start, 28);  // the 29th evening
            const CrescentGeometry g29 = compute_geometry(doubt, site);
            const bool vis29 = ruled_visible(g29, p);
            const bool cloud29 = unit(rng) < p.p_cloud;
            record(doubt, g29, vis29 && !cloud29 ? 1 : 0, vis29 && cloud29);
            if (vis29 && !cloud29) {
                start = add_days(doubt, 1);  // 29-day month
                continue;
            }
            // Unseen: the month is 30 days and the next evening's attempt
            // (successful or not) goes on record as well.
            if (written < p.rows) {
                const CivilDate conf = add_days(doubt, 1);
                const CrescentGeometry g30 = compute_geometry(conf, site);
                const bool vis30 = ruled_visible(g30, p);
                const bool cloud30 = unit(rng) < p.p_cloud;
                record(conf, g30, vis30 && !cloud30 ? 1 : 0, vis30 && cloud30);
            }
            start = add_days(doubt, 2);
        }

        std::printf("rows: %d\n", written);
        std::printf("months: %d\n", months);
        std::printf("positives: %d\n", positives);
        std::printf("negatives: %d\n", written - positives);
        std::printf("hidden_by_weather: %d\n", noise);
        std::printf("first_row: %04d-%02d-%02d\n", first_row.year, first_row.month,
                    first_row.day);
        std::printf("last_row: %04d-%02d-%02d\n", last_row.year, last_row.month,
                    last_row.day);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
