#include <algorithm>
#include <cmath>

#include "manazel/crescent.hpp"

namespace manazel {

namespace {

constexpr double kDegToRad = 0.017453292519943295;
constexpr double kRadToDeg = 57.29577951308232;

}  // namespace

char zone_letter(Zone z) {
    switch (z) {
        case Zone::A: return 'A';
        case Zone::B: return 'B';
        case Zone::C: return 'C';
        default: return 'D';
    }
}

Zone zone_from_letter(char c) {
    switch (c) {
        case 'A': return Zone::A;
        case 'B': return Zone::B;
        case 'C': return Zone::C;
        case 'D': return Zone::D;
        default: throw InputError(std::string("unknown zone letter: ") + c);
    }
}

double odeh_value(double arcv_deg, double w_arcmin, const OdehCriterion& crit) {
    const double w = w_arcmin;
    return arcv_deg - (crit.c3 * w * w * w + crit.c2 * w * w + crit.c1 * w + crit.c0);
}

Zone classify_zone(double v, const OdehCriterion& crit) {
    if (v >= crit.min_a) return Zone::A;
    if (v >= crit.min_b) return Zone::B;
    if (v >= crit.min_c) return Zone::C;
    return Zone::D;
}

OdehAssessment assess_visibility(double arcv_deg, double w_arcmin,
                                 const OdehCriterion& crit) {
    const double v = odeh_value(arcv_deg, w_arcmin, crit);
    return {v, classify_zone(v, crit)};
}

double crescent_width(double semidiameter_arcmin, double arcl_deg) {
    return semidiameter_arcmin * (1.0 - std::cos(arcl_deg * kDegToRad));
}

CrescentGeometry geometry_at(const Instant& t, const GeoLocation& site) {
    const BodyState sun = sun_position(t, site);
    const BodyState moon = moon_position(t, site);

    CrescentGeometry g;
    g.arcv = moon.horizontal.altitude - sun.horizontal.altitude;
    double daz = std::fabs(moon.horizontal.azimuth - sun.horizontal.azimuth);
    daz = std::fmod(daz, 360.0);
    if (daz > 180.0) daz = 360.0 - daz;
    g.daz = daz;
    // Spherical relation for the elongation in the (altitude, azimuth) frame.
    const double c = std::cos(g.arcv * kDegToRad) * std::cos(g.daz * kDegToRad);
    g.arcl = std::acos(std::clamp(c, -1.0, 1.0)) * kRadToDeg;
    g.w = crescent_width(moon.semidiameter_arcmin, g.arcl);
    g.evaluated_at = t;
    return g;
}

CrescentGeometry compute_geometry(const CivilDate& date, const GeoLocation& site) {
    const EveningEvents ev = evening_events(date, site);
    const bool visible_window = ev.moonset_found() && ev.lag_minutes > 0.0;
    CrescentGeometry g = geometry_at(visible_window ? ev.best_time : ev.sunset, site);
    g.lag_minutes = ev.moonset_found() ? ev.lag_minutes : 0.0;
    g.below_horizon = !visible_window;
    return g;
}

}  // namespace manazel
