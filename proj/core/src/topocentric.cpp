#include <algorithm>
#include <cmath>

#include "manazel/ephemeris.hpp"

namespace manazel {

namespace {

constexpr double kDegToRad = 0.017453292519943295;
constexpr double kRadToDeg = 57.29577951308232;
constexpr double kEarthEquatorialKm = 6378.137;
constexpr double kMoonRadiusKm = 1737.4;
constexpr double kSunRadiusKm = 696000.0;

double wrap360(double deg) {
    double x = std::fmod(deg, 360.0);
    return x < 0.0 ? x + 360.0 : x;
}

struct Vec3 {
    double x, y, z;
};

// Geocentric equatorial vector (km) from RA/dec/distance.
Vec3 equatorial_vector(double ra_deg, double dec_deg, double dist_km) {
    const double ra = ra_deg * kDegToRad;
    const double dec = dec_deg * kDegToRad;
    return {dist_km * std::cos(dec) * std::cos(ra),
            dist_km * std::cos(dec) * std::sin(ra), dist_km * std::sin(dec)};
}

}  // namespace

void validate_location(const GeoLocation& site) {
    if (site.latitude < -90.0 || site.latitude > 90.0)
        throw InputError("latitude outside [-90, 90]");
    if (site.longitude < -180.0 || site.longitude > 180.0)
        throw InputError("longitude outside [-180, 180]");
    if (site.elevation < -430.0) throw InputError("elevation below -430 m");
}

double refraction_deg(double altitude_geometric) {
    // Bennett-type fit from the airless altitude, standard conditions.
    // Input floored well above the formula's pole at -5.11 deg; output
    // capped so the horizon correction never exceeds 0.6 deg.
    const double h = std::max(altitude_geometric, -2.0);
    const double arg = h + 10.3 / (h + 5.11);
    const double r_arcmin = 1.02 / std::tan(arg * kDegToRad);
    return std::clamp(r_arcmin / 60.0, 0.0, 0.6);
}

BodyState body_state(Body body, const Instant& t, const GeoLocation& site) {
    validate_location(site);
    const double jd_tt = t.jd_tt();

    const EclipticPos ecl = body == Body::Sun ? sun_ecliptic(jd_tt) : moon_ecliptic(jd_tt);
    const double eps = true_obliquity_deg(jd_tt) * kDegToRad;

    // Ecliptic -> equatorial of date.
    const double lam = ecl.longitude * kDegToRad;
    const double beta = ecl.latitude * kDegToRad;
    const double xe = std::cos(beta) * std::cos(lam);
    const double ye = std::cos(beta) * std::sin(lam) * std::cos(eps) -
                      std::sin(beta) * std::sin(eps);
    const double ze = std::cos(beta) * std::sin(lam) * std::sin(eps) +
                      std::sin(beta) * std::cos(eps);
    const double ra = wrap360(std::atan2(ye, xe) * kRadToDeg);
    const double dec = std::asin(ze) * kRadToDeg;

    // Observer's geocentric position in the same rotating equatorial frame.
    // Apparent sidereal time = mean + equation of the equinoxes.
    const double lst = wrap360(gmst_deg(t.jd_ut) +
                               nutation(jd_tt).dpsi_deg * std::cos(eps) + site.longitude);
    const double phi = site.latitude * kDegToRad;
    const double u = std::atan(0.99664719 * std::tan(phi));
    const double rho_sin = 0.99664719 * std::sin(u) +
                           site.elevation / 6378140.0 * std::sin(phi);
    const double rho_cos = std::cos(u) + site.elevation / 6378140.0 * std::cos(phi);
    const Vec3 obs = {kEarthEquatorialKm * rho_cos * std::cos(lst * kDegToRad),
                      kEarthEquatorialKm * rho_cos * std::sin(lst * kDegToRad),
                      kEarthEquatorialKm * rho_sin};

    // Topocentric place by vector subtraction.
    const Vec3 geo = equatorial_vector(ra, dec, ecl.distance_km);
    const Vec3 topo = {geo.x - obs.x, geo.y - obs.y, geo.z - obs.z};
    const double topo_dist =
        std::sqrt(topo.x * topo.x + topo.y * topo.y + topo.z * topo.z);
    const double ra_topo = wrap360(std::atan2(topo.y, topo.x) * kRadToDeg);
    const double dec_topo = std::asin(topo.z / topo_dist) * kRadToDeg;

    // Horizontal coordinates from the local hour angle.
    const double ha = (lst - ra_topo) * kDegToRad;
    const double dec_r = dec_topo * kDegToRad;
    const double sin_alt = std::sin(phi) * std::sin(dec_r) +
                           std::cos(phi) * std::cos(dec_r) * std::cos(ha);
    const double alt_geom = std::asin(sin_alt) * kRadToDeg;
    // atan2 form measures from south, westward; shift to north-clockwise.
    const double az_south = std::atan2(
        std::sin(ha), std::cos(ha) * std::sin(phi) - std::tan(dec_r) * std::cos(phi));
    const double az = wrap360(az_south * kRadToDeg + 180.0);

    const double body_radius = body == Body::Sun ? kSunRadiusKm : kMoonRadiusKm;
    const double sd_arcmin = std::asin(body_radius / topo_dist) * kRadToDeg * 60.0;

    BodyState s;
    s.horizontal = {alt_geom + refraction_deg(alt_geom), az};
    s.altitude_geometric = alt_geom;
    s.distance_km = ecl.distance_km;
    s.semidiameter_arcmin = sd_arcmin;
    s.ra_deg = ra_topo;
    s.dec_deg = dec_topo;
    return s;
}

BodyState sun_position(const Instant& t, const GeoLocation& site) {
    return body_state(Body::Sun, t, site);
}

BodyState moon_position(const Instant& t, const GeoLocation& site) {
    return body_state(Body::Moon, t, site);
}

}  // namespace manazel
