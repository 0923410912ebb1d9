#include <cmath>
#include <functional>

#include "manazel/events.hpp"

namespace manazel {

namespace {

constexpr double kSunSetAltitude = -0.8333;  // refraction + semidiameter folded in
constexpr double kMoonSetBase = -0.5667;     // horizontal refraction; SD added per epoch

// Airless altitude of the Sun's center minus the event altitude.
double sun_event_fn(double jd_ut, const GeoLocation& site) {
    return body_state(Body::Sun, instant_from_jd(jd_ut), site).altitude_geometric -
           kSunSetAltitude;
}

// Topocentric altitude of the Moon's center relative to the upper-limb
// set threshold -(0.5667 + semidiameter) deg.
double moon_event_fn(double jd_ut, const GeoLocation& site) {
    const BodyState s = body_state(Body::Moon, instant_from_jd(jd_ut), site);
    return s.altitude_geometric - (kMoonSetBase - s.semidiameter_arcmin / 60.0);
}

// First descending zero crossing of fn in [jd_lo, jd_hi]: bracket on a
// fixed grid, then bisect to one second.
std::optional<double> descending_crossing(const std::function<double(double)>& fn,
                                          double jd_lo, double jd_hi,
                                          double step_minutes) {
    const double step = step_minutes / 1440.0;
    double t_prev = jd_lo;
    double f_prev = fn(t_prev);
    while (t_prev < jd_hi) {
        const double t_next = std::min(t_prev + step, jd_hi);
        const double f_next = fn(t_next);
        if (f_prev > 0.0 && f_next <= 0.0) {
            double a = t_prev;
            double b = t_next;
            while ((b - a) * 86400.0 > 1.0) {
                const double mid = 0.5 * (a + b);
                (fn(mid) > 0.0 ? a : b) = mid;
            }
            return 0.5 * (a + b);
        }
        t_prev = t_next;
        f_prev = f_next;
    }
    return std::nullopt;
}

}  // namespace

Instant sunset_instant(const CivilDate& date, const GeoLocation& site) {
    validate_location(site);
    if (!is_valid_civil(date.year, date.month, date.day))
        throw InputError("invalid calendar date");
    // Search one full day from local solar noon.
    const double noon_local =
        jd_from_datetime({date.year, date.month, date.day, 12, 0, 0.0}) -
        site.longitude / 360.0;
    const auto hit = descending_crossing(
        [&](double jd) { return sun_event_fn(jd, site); }, noon_local,
        noon_local + 1.0, 1.0);
    if (!hit) {
        throw NoEventError("no sunset at the site on the given date");
    }
    return instant_from_jd(*hit);
}

std::optional<Instant> moonset_instant(const Instant& sunset, const GeoLocation& site) {
    const auto hit = descending_crossing(
        [&](double jd) { return moon_event_fn(jd, site); }, sunset.jd_ut - 0.25,
        sunset.jd_ut + 0.75, 2.0);
    if (!hit) return std::nullopt;
    return instant_from_jd(*hit);
}

EveningEvents evening_events(const CivilDate& date, const GeoLocation& site) {
    EveningEvents ev;
    ev.sunset = sunset_instant(date, site);
    ev.moonset = moonset_instant(ev.sunset, site);
    if (ev.moonset) {
        ev.lag_minutes = (ev.moonset->jd_ut - ev.sunset.jd_ut) * 1440.0;
    } else {
        ev.lag_minutes = 0.0;
    }
    if (ev.moonset && ev.lag_minutes > 0.0) {
        ev.best_time = instant_from_jd(ev.sunset.jd_ut +
                                       (4.0 / 9.0) * ev.lag_minutes / 1440.0);
    } else {
        ev.best_time = ev.sunset;
    }
    return ev;
}

}  // namespace manazel
