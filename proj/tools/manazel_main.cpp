#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "manazel/calendar.hpp"
#include "manazel/crescent.hpp"
#include "manazel/cv.hpp"
#include "manazel/dataset.hpp"
#include "manazel/errors.hpp"
#include "manazel/model_io.hpp"

namespace {

using namespace manazel;

// ---------------------------------------------------------------------------
// formatting

std::string fnum(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string fmt_civil(const CivilDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

// ISO instant in UTC, rounded to the nearest whole second.
std::string fmt_instant(const Instant& t) {
    const DateTime dt = datetime_from_jd(t.jd_ut + 0.5 / 86400.0);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", dt.year, dt.month,
                  dt.day, dt.hour, dt.minute, static_cast<int>(dt.second));
    return buf;
}

std::string hp_pretty(const HyperParams& hp) {
    std::string out;
    for (const auto& [k, v] : hp) {
        if (!out.empty()) out += ", ";
        out += k + "=" + v;
    }
    return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------
// configuration

struct AppConfig {
    std::map<std::string, GeoLocation> sites;
    std::string default_model;
    std::string default_dataset;
    std::uint64_t default_seed = 42;
};

AppConfig builtin_config() {
    AppConfig cfg;
    cfg.sites["rabat"] = rabat();
    return cfg;
}

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// `key = value` lines; '#' starts a comment. Site presets arrive as
// site.<name>.latitude / .longitude / .elevation triples.
AppConfig load_config(const std::string& path) {
    AppConfig cfg = builtin_config();
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value' in config, got '" + line + "'", lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "default.model") {
            cfg.default_model = value;
        } else if (key == "default.dataset") {
            cfg.default_dataset = value;
        } else if (key == "default.seed") {
            try {
                cfg.default_seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ParseError("default.seed must be an unsigned integer", lineno);
            }
        } else if (key.rfind("site.", 0) == 0) {
            const std::size_t dot = key.rfind('.');
            const std::string name = key.substr(5, dot - 5);
            const std::string field = key.substr(dot + 1);
            if (name.empty()) throw ParseError("empty site name in '" + key + "'", lineno);
            double num = 0.0;
            try {
                num = std::stod(value);
            } catch (const std::exception&) {
                throw ParseError("site field '" + key + "' must be numeric", lineno);
            }
            GeoLocation& site = cfg.sites[name];
            if (field == "latitude") site.latitude = num;
            else if (field == "longitude") site.longitude = num;
            else if (field == "elevation") site.elevation = num;
            else throw ParseError("unknown site field '" + field + "'", lineno);
        } else {
            throw ParseError("unknown config key '" + key + "'", lineno);
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// shared option plumbing

struct GlobalOpts {
    std::string config_path;
    int precision = 4;
    AppConfig cfg = builtin_config();
};

struct SiteOpts {
    std::string name = "rabat";
    double lat = 0.0, lon = 0.0, elev = 0.0;
    bool lat_set = false, lon_set = false;
};

void add_site_opts(CLI::App* cmd, SiteOpts& s) {
    cmd->add_option("--site", s.name, "Named site preset (default rabat)");
    auto* lat = cmd->add_option("--lat", s.lat, "Site latitude, degrees north");
    auto* lon = cmd->add_option("--lon", s.lon, "Site longitude, degrees east");
    cmd->add_option("--elev", s.elev, "Site elevation, metres (default 0)");
    lat->needs(lon);
    lon->needs(lat);
    cmd->callback([&s, lat, lon] {
        s.lat_set = lat->count() > 0;
        s.lon_set = lon->count() > 0;
    });
}

GeoLocation resolve_site(const SiteOpts& s, const AppConfig& cfg) {
    if (s.lat_set || s.lon_set) {
        GeoLocation loc{s.lat, s.lon, s.elev};
        validate_location(loc);
        return loc;
    }
    const auto it = cfg.sites.find(s.name);
    if (it == cfg.sites.end()) throw InputError("unknown site '" + s.name + "'");
    return it->second;
}

CivilDate parse_civil_arg(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3) {
        throw InputError("expected date as YYYY-MM-DD, got '" + text + "'");
    }
    if (!is_valid_civil(y, m, d)) throw InputError("invalid date '" + text + "'");
    return CivilDate{y, m, d};
}

void parse_hijri_arg(const std::string& text, int& year, int& month) {
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &year, &month, &tail) != 2) {
        throw InputError("expected Hijri month as YYYY-MM, got '" + text + "'");
    }
    validate_hijri({year, month, 1});
}

Dataset resolve_dataset(const std::string& flag, const AppConfig& cfg) {
    const std::string path = !flag.empty() ? flag : cfg.default_dataset;
    if (path.empty()) {
        throw InputError("no dataset given (pass --data or set default.dataset)");
    }
    return load_dataset(path);
}

std::unique_ptr<Classifier> resolve_model(const std::string& model_flag,
                                          const std::string& stub_flag,
                                          const AppConfig& cfg) {
    if (!stub_flag.empty()) {
        if (stub_flag == "one") return std::make_unique<ConstantClassifier>(1);
        if (stub_flag == "zero") return std::make_unique<ConstantClassifier>(0);
        throw InputError("unknown stub '" + stub_flag + "' (use one or zero)");
    }
    const std::string path = !model_flag.empty() ? model_flag : cfg.default_model;
    if (path.empty()) {
        throw InputError("no model given (pass --model, --model-stub, or set default.model)");
    }
    return load_model(path);
}

// ---------------------------------------------------------------------------
// geometry

int cmd_geometry(const GlobalOpts& g, const std::string& date_str, const SiteOpts& site_opts,
                 const std::string& model_flag, const std::string& format) {
    const CivilDate date = parse_civil_arg(date_str);
    const GeoLocation site = resolve_site(site_opts, g.cfg);
    std::unique_ptr<Classifier> model;
    if (!model_flag.empty()) model = load_model(model_flag);

    const EveningEvents ev = evening_events(date, site);
    const CrescentGeometry geo = compute_geometry(date, site);
    const OdehAssessment odeh = assess_visibility(geo.arcv, geo.w);
    std::optional<int> prediction;
    if (model) {
        prediction = geo.below_horizon ? 0 : model->predict_one(geo.arcv, geo.w);
    }

    const int p = g.precision;
    if (format == "csv") {
        std::string header =
            "date,sunset,moonset,lag_minutes,best_time,arcv,daz,arcl,w,odeh_v,zone,below_horizon";
        std::string row = fmt_civil(date) + "," + fmt_instant(ev.sunset) + "," +
                          (ev.moonset_found() ? fmt_instant(*ev.moonset) : std::string()) +
                          "," + fnum(ev.lag_minutes, p) + "," + fmt_instant(ev.best_time) +
                          "," + fnum(geo.arcv, p) + "," + fnum(geo.daz, p) + "," +
                          fnum(geo.arcl, p) + "," + fnum(geo.w, p) + "," + fnum(odeh.v, p) +
                          "," + zone_letter(odeh.zone) + "," + (geo.below_horizon ? "1" : "0");
        if (prediction) {
            header += ",prediction";
            row += "," + std::to_string(*prediction);
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << "date: " << fmt_civil(date) << "\n";
        std::cout << "sunset: " << fmt_instant(ev.sunset) << "\n";
        std::cout << "moonset: "
                  << (ev.moonset_found() ? fmt_instant(*ev.moonset) : std::string("none"))
                  << "\n";
        std::cout << "lag_minutes: " << fnum(ev.lag_minutes, p) << "\n";
        std::cout << "best_time: " << fmt_instant(ev.best_time) << "\n";
        std::cout << "arcv: " << fnum(geo.arcv, p) << "\n";
        std::cout << "daz: " << fnum(geo.daz, p) << "\n";
        std::cout << "arcl: " << fnum(geo.arcl, p) << "\n";
        std::cout << "w: " << fnum(geo.w, p) << "\n";
        std::cout << "odeh_v: " << fnum(odeh.v, p) << "\n";
        std::cout << "zone: " << zone_letter(odeh.zone) << "\n";
        std::cout << "below_horizon: " << (geo.below_horizon ? "yes" : "no") << "\n";
        if (prediction) std::cout << "prediction: " << *prediction << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stats

void print_stat_row(const std::string& name, const VariableStats& s, int p) {
    std::printf("%-8s %7zu %*s %*s %*s %*s %*s %*s %*s\n", name.c_str(), s.count, p + 8,
                fnum(s.mean, p).c_str(), p + 8, fnum(s.std_dev, p).c_str(), p + 8,
                fnum(s.min, p).c_str(), p + 8, fnum(s.p25, p).c_str(), p + 8,
                fnum(s.p50, p).c_str(), p + 8, fnum(s.p75, p).c_str(), p + 8,
                fnum(s.max, p).c_str());
}

int cmd_stats(const GlobalOpts& g, const std::string& data_flag,
              const std::string& emit_zones) {
    const Dataset d = resolve_dataset(data_flag, g.cfg);
    const SummaryStats s = summary_stats(d);
    const ZoneDistribution zones = zone_distribution(d);
    const int p = g.precision;

    std::cout << "rows: " << d.size() << "\n";
    std::printf("%-8s %7s %*s %*s %*s %*s %*s %*s %*s\n", "variable", "count", p + 8, "mean",
                p + 8, "std", p + 8, "min", p + 8, "p25", p + 8, "p50", p + 8, "p75", p + 8,
                "max");
    print_stat_row("arcv", s.arcv, p);
    print_stat_row("w", s.w, p);
    print_stat_row("output", s.output, p);

    std::cout << "\nzone  total  visible\n";
    for (const Zone z : {Zone::A, Zone::B, Zone::C, Zone::D}) {
        std::printf("%-4c %6zu %8zu\n", zone_letter(z), zones.zone_total(z),
                    zones.count(z, 1));
    }

    if (!emit_zones.empty()) {
        std::ofstream out(emit_zones, std::ios::binary);
        if (!out) throw InputError("cannot open '" + emit_zones + "' for writing");
        // One `zone,output,count` row per zone that has any data: `output`
        // counts the visible announcements, `count` the zone's total.
        for (const Zone z : {Zone::A, Zone::B, Zone::C, Zone::D}) {
            if (zones.zone_total(z) == 0) continue;
            out << zone_letter(z) << "," << zones.count(z, 1) << "," << zones.zone_total(z)
                << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// train / evaluate

const std::vector<Family> kAllFamilies = {Family::LogReg, Family::Tree, Family::Forest,
                                          Family::Svm, Family::Knn};

void print_report(const ClassificationReport& rep, int p) {
    for (int c = 0; c < 2; ++c) {
        const ClassMetrics& m = rep.per_class[c];
        std::cout << "class " << c << ": precision " << fnum(m.precision, p) << " recall "
                  << fnum(m.recall, p) << " f1 " << fnum(m.f1, p) << " support " << m.support
                  << "\n";
    }
}

struct FamilyRun {
    Family family = Family::LogReg;
    HyperParams hp;
    double best_cv_score = 0.0;
    double overall = 0.0;
    ClassificationReport report;
    std::uint64_t model_seed = 42;
    std::string error;
};

FamilyRun run_family(const Dataset& d, Family fam, bool grid, int k, std::uint64_t seed) {
    FamilyRun run;
    run.family = fam;
    if (grid) {
        const CvReport rep = grid_search(d, fam, default_grid(fam), k, seed);
        run.hp = rep.candidates[rep.best_index].hp;
        run.best_cv_score = rep.best_cv_score;
        run.overall = rep.overall_cv_accuracy;
        run.report = rep.report;
        run.model_seed = rep.seed;
    } else {
        run.hp = default_hyperparams(fam);
        run.model_seed = seed;
        const std::vector<int> oof = cross_val_predict(d, fam, run.hp, k, seed);
        std::vector<int> y;
        for (const Observation& o : d.rows) y.push_back(o.output);
        run.report = classification_report(y, oof);
        run.overall = run.report.accuracy;
        run.best_cv_score = run.overall;
    }
    return run;
}

int cmd_train(const GlobalOpts& g, const std::string& family_arg, const std::string& data_flag,
              bool grid, int k, std::uint64_t seed, const std::string& out_path) {
    const Dataset d = resolve_dataset(data_flag, g.cfg);
    const int p = g.precision;

    std::vector<Family> families;
    if (family_arg == "all") {
        families = kAllFamilies;
    } else {
        families = {family_from_name(family_arg)};
    }

    std::vector<FamilyRun> runs;
    for (const Family fam : families) {
        FamilyRun run;
        run.family = fam;
        try {
            run = run_family(d, fam, grid, k, seed);
        } catch (const Error& e) {
            run.error = e.what();
        }
        runs.push_back(std::move(run));
    }

    if (families.size() == 1) {
        const FamilyRun& run = runs.front();
        if (!run.error.empty()) {
            std::cerr << "error: " << run.error << "\n";
            return 1;
        }
        std::cout << "family: " << family_name(run.family) << "\n";
        std::cout << "hyperparams: " << hp_pretty(run.hp) << "\n";
        if (grid) std::cout << "best_cv_score: " << fnum(run.best_cv_score, p) << "\n";
        std::cout << "overall_cv_accuracy: " << fnum(run.overall, p) << "\n";
        print_report(run.report, p);
    } else {
        std::printf("%-8s %-44s %14s %20s\n", "family", "best_hyperparams", "best_cv_score",
                    "overall_cv_accuracy");
        for (const FamilyRun& run : runs) {
            if (!run.error.empty()) {
                std::printf("%-8s error: %s\n", family_name(run.family).c_str(),
                            run.error.c_str());
                continue;
            }
            std::printf("%-8s %-44s %14s %20s\n", family_name(run.family).c_str(),
                        hp_pretty(run.hp).c_str(), fnum(run.best_cv_score, p).c_str(),
                        fnum(run.overall, p).c_str());
        }
    }

    const bool any_ok = std::any_of(runs.begin(), runs.end(),
                                    [](const FamilyRun& r) { return r.error.empty(); });
    if (!any_ok) {
        std::cerr << "error: every family failed to train\n";
        return 1;
    }

    if (!out_path.empty()) {
        // Single family: save it. `all`: save the family with the highest
        // best CV score; ties keep the earlier family in the fixed order.
        const FamilyRun* chosen = nullptr;
        for (const FamilyRun& run : runs) {
            if (!run.error.empty()) continue;
            if (!chosen || run.best_cv_score > chosen->best_cv_score) chosen = &run;
        }
        auto model = make_classifier(chosen->family, chosen->hp, chosen->model_seed);
        model->fit(d);
        save_model(*model, out_path);
        std::cout << "saved: " << out_path << " (" << family_name(chosen->family) << ")\n";
    }
    return 0;
}

int cmd_evaluate(const GlobalOpts& g, const std::string& model_path,
                 const std::string& data_flag, int k) {
    const std::string path = !model_path.empty() ? model_path : g.cfg.default_model;
    if (path.empty()) throw InputError("no model given (pass a model file or set default.model)");
    const auto model = load_model(path);
    const Dataset d = resolve_dataset(data_flag, g.cfg);
    const int p = g.precision;

    std::vector<int> y;
    for (const Observation& o : d.rows) y.push_back(o.output);
    const double direct = accuracy_score(y, model->predict(d));

    const std::uint64_t seed = model->seed().value_or(42);
    const std::vector<int> oof = cross_val_predict(d, model->family(), model->hyperparams(), k, seed);
    const ClassificationReport rep = classification_report(y, oof);

    std::cout << "family: " << family_name(model->family()) << "\n";
    std::cout << "hyperparams: " << hp_pretty(model->hyperparams()) << "\n";
    std::cout << "dataset_accuracy: " << fnum(direct, p) << "\n";
    std::cout << "overall_cv_accuracy: " << fnum(rep.accuracy, p) << "\n";
    print_report(rep, p);
    return 0;
}

// ---------------------------------------------------------------------------
// month-start / calendar

void print_probe_table(const std::vector<EveningProbe>& probes, int p) {
    std::printf("%-12s %*s %*s %*s %*s %*s %-6s %s\n", "evening", p + 7, "arcv", p + 7,
                "daz", p + 7, "arcl", p + 7, "w", p + 8, "lag_min", "moon", "predicted");
    for (const EveningProbe& probe : probes) {
        std::printf("%-12s %*s %*s %*s %*s %*s %-6s %d\n",
                    fmt_civil(probe.evening).c_str(), p + 7,
                    fnum(probe.geometry.arcv, p).c_str(), p + 7,
                    fnum(probe.geometry.daz, p).c_str(), p + 7,
                    fnum(probe.geometry.arcl, p).c_str(), p + 7,
                    fnum(probe.geometry.w, p).c_str(), p + 8,
                    fnum(probe.geometry.lag_minutes, p).c_str(),
                    probe.geometry.below_horizon ? "down" : "up", probe.predicted);
    }
}

int cmd_month_start(const GlobalOpts& g, const std::string& hijri_arg, const SiteOpts& site_opts,
                    const std::string& model_flag, const std::string& stub_flag, int n_max) {
    int h_year = 0, h_month = 0;
    parse_hijri_arg(hijri_arg, h_year, h_month);
    const GeoLocation site = resolve_site(site_opts, g.cfg);
    const auto model = resolve_model(model_flag, stub_flag, g.cfg);
    const int p = g.precision;

    try {
        const MonthStartResult r = determine_month_start(h_year, h_month, site, *model, n_max);
        std::cout << "hijri: " << r.hijri.year << "-" << (r.hijri.month < 10 ? "0" : "")
                  << r.hijri.month << "\n";
        std::cout << "g_base: " << fmt_civil(r.g_base) << "\n";
        std::cout << "g_doubt: " << fmt_civil(r.g_doubt) << "\n";
        std::cout << "g_first: " << fmt_civil(r.g_first) << "\n";
        std::cout << "offset_used: " << r.offset_used << "\n";
        print_probe_table(r.probes, p);
        return 0;
    } catch (const ExhaustionError& e) {
        print_probe_table(e.probes(), p);
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

int cmd_calendar(const GlobalOpts& g, int h_year, const SiteOpts& site_opts,
                 const std::string& model_flag, const std::string& stub_flag, int n_max,
                 const std::string& format) {
    if (h_year < 1 || h_year > 9999) throw InputError("Hijri year outside 1-9999");
    const GeoLocation site = resolve_site(site_opts, g.cfg);
    const auto model = resolve_model(model_flag, stub_flag, g.cfg);

    const YearCalendar cal = generate_year(h_year, site, *model, n_max);

    if (format == "csv") {
        std::cout << "month,first_day,length,valid\n";
        for (const MonthEntry& m : cal.months) {
            std::cout << m.month << ","
                      << (m.start ? fmt_civil(m.start->g_first) : std::string()) << ","
                      << (m.length_days ? std::to_string(*m.length_days) : std::string())
                      << "," << (m.gap_valid ? "1" : "0") << "\n";
        }
    } else {
        std::printf("%-6s %-12s %-7s %s\n", "month", "first_day", "length", "status");
        for (const MonthEntry& m : cal.months) {
            const std::string first = m.start ? fmt_civil(m.start->g_first) : "-";
            const std::string length = m.length_days ? std::to_string(*m.length_days) : "-";
            std::string status = m.error.empty() ? (m.gap_valid ? "ok" : "bad-gap") : m.error;
            std::printf("%-6d %-12s %-7s %s\n", m.month, first.c_str(), length.c_str(),
                        status.c_str());
        }
        std::cout << "valid: " << (cal.all_valid ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    GlobalOpts g;

    CLI::App app{"Manazel: lunar crescent visibility and Hijri month-start toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* config_opt =
        app.add_option("--config", g.config_path, "Key-value config file path");
    app.add_option("--precision", g.precision, "Decimal places for printed numbers")
        ->check(CLI::Range(0, 17));

    // geometry
    std::string geo_date, geo_model, geo_format = "table";
    SiteOpts geo_site;
    auto* geometry = app.add_subcommand("geometry", "Crescent geometry for one evening");
    geometry->add_option("--date", geo_date, "Evening civil date, YYYY-MM-DD")->required();
    add_site_opts(geometry, geo_site);
    geometry->add_option("--model", geo_model, "Model file for a visibility prediction");
    geometry->add_option("--format", geo_format, "Output format: table or csv")
        ->check(CLI::IsMember({"table", "csv"}));

    // stats
    std::string stats_data, stats_emit;
    auto* stats = app.add_subcommand("stats", "Dataset summary statistics");
    stats->add_option("dataset", stats_data, "Observation CSV path");
    stats->add_option("--emit-zones", stats_emit, "Write zone,output,count CSV here");

    // train
    std::string train_family, train_data, train_out;
    bool train_grid = false;
    int train_k = 4;
    std::uint64_t train_seed = 0;
    auto* train = app.add_subcommand("train", "Train and cross-validate classifiers");
    train->add_option("family", train_family, "logreg, tree, forest, svm, knn, or all")
        ->required();
    train->add_option("--data", train_data, "Observation CSV path");
    train->add_flag("--grid", train_grid, "Tune over the family's hyperparameter grid");
    train->add_option("--k", train_k, "Cross-validation folds")->check(CLI::Range(2, 100));
    auto* train_seed_opt = train->add_option("--seed", train_seed, "Base RNG seed");
    train->add_option("--out", train_out, "Save the winning model here");

    // evaluate
    std::string eval_model, eval_data;
    int eval_k = 4;
    auto* evaluate = app.add_subcommand("evaluate", "Re-score a saved model on a dataset");
    evaluate->add_option("model", eval_model, "Model file path");
    evaluate->add_option("--data", eval_data, "Observation CSV path");
    evaluate->add_option("--k", eval_k, "Cross-validation folds")->check(CLI::Range(2, 100));

    // month-start
    std::string ms_hijri, ms_model, ms_stub;
    SiteOpts ms_site;
    int ms_nmax = 3;
    auto* month_start =
        app.add_subcommand("month-start", "First civil day of a Hijri month");
    month_start->add_option("--hijri", ms_hijri, "Hijri month as YYYY-MM")->required();
    add_site_opts(month_start, ms_site);
    month_start->add_option("--model", ms_model, "Trained model file");
    month_start->add_option("--model-stub", ms_stub,
                            "Constant stand-in model: one or zero");
    month_start->add_option("--n-max", ms_nmax, "Largest forward offset scanned")
        ->check(CLI::Range(0, 30));

    // calendar
    int cal_year = 0, cal_nmax = 3;
    std::string cal_model, cal_stub, cal_format = "table";
    SiteOpts cal_site;
    auto* calendar = app.add_subcommand("calendar", "Twelve-month Hijri year calendar");
    calendar->add_option("--hijri-year", cal_year, "Hijri year")->required();
    add_site_opts(calendar, cal_site);
    calendar->add_option("--model", cal_model, "Trained model file");
    calendar->add_option("--model-stub", cal_stub, "Constant stand-in model: one or zero");
    calendar->add_option("--n-max", cal_nmax, "Largest forward offset scanned")
        ->check(CLI::Range(0, 30));
    calendar->add_option("--format", cal_format, "Output format: table or csv")
        ->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (config_opt->count() > 0) {
            g.cfg = load_config(g.config_path);
        } else {
            // A config sitting next to the executable is picked up silently.
            std::error_code ec;
            const auto self = std::filesystem::path(argv[0]);
            const auto candidate = self.parent_path() / "manazel.conf";
            if (std::filesystem::exists(candidate, ec) && !ec) {
                g.cfg = load_config(candidate.string());
            }
        }
        if (train_seed_opt->count() == 0) train_seed = g.cfg.default_seed;

        if (geometry->parsed()) {
            return cmd_geometry(g, geo_date, geo_site, geo_model, geo_format);
        }
        if (stats->parsed()) return cmd_stats(g, stats_data, stats_emit);
        if (train->parsed()) {
            return cmd_train(g, train_family, train_data, train_grid, train_k, train_seed,
                             train_out);
        }
        if (evaluate->parsed()) return cmd_evaluate(g, eval_model, eval_data, eval_k);
        if (month_start->parsed()) {
            return cmd_month_start(g, ms_hijri, ms_site, ms_model, ms_stub, ms_nmax);
        }
        if (calendar->parsed()) {
            return cmd_calendar(g, cal_year, cal_site, cal_model, cal_stub, cal_nmax,
                                cal_format);
        }
        return 2;
    } catch (const NoEventError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ExhaustionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
