#pragma once

#include "manazel/geo.hpp"
#include "manazel/time.hpp"

namespace manazel {

enum class Body { Sun, Moon };

// Apparent geocentric ecliptic position, equinox of date.
struct EclipticPos {
    double longitude = 0.0;    // degrees, [0, 360)
    double latitude = 0.0;     // degrees
    double distance_km = 0.0;
};

// Altitude carries refraction; azimuth is clockwise from true north.
struct HorizontalCoord {
    double altitude = 0.0;  // degrees, apparent (refraction-corrected)
    double azimuth = 0.0;   // degrees, [0, 360)
};

// Topocentric state of a body as seen from a site. `distance_km` stays
// geocentric (the range invariants are phrased for the geocenter); the
// semidiameter uses the topocentric distance, which is what an observer's
// crescent width depends on.
struct BodyState {
    HorizontalCoord horizontal;
    double altitude_geometric = 0.0;  // airless altitude of the body's center
    double distance_km = 0.0;         // geocentric
    double semidiameter_arcmin = 0.0; // topocentric for the Moon
    double ra_deg = 0.0;              // topocentric right ascension, of date
    double dec_deg = 0.0;             // topocentric declination, of date
};

struct Nutation {
    double dpsi_deg = 0.0;  // nutation in longitude
    double deps_deg = 0.0;  // nutation in obliquity
};

Nutation nutation(double jd_tt);
double mean_obliquity_deg(double jd_tt);
double true_obliquity_deg(double jd_tt);

// Truncated analytic series, equinox of date, nutation and (for the Sun)
// annual aberration applied. Accuracy ~0.003 deg Sun, ~0.01 deg Moon.
EclipticPos sun_ecliptic(double jd_tt);
EclipticPos moon_ecliptic(double jd_tt);

// Bennett-type refraction from the airless altitude at standard conditions.
// Non-negative, capped at 0.6 deg; defined for all altitudes.
double refraction_deg(double altitude_geometric);

BodyState body_state(Body body, const Instant& t, const GeoLocation& site);
BodyState sun_position(const Instant& t, const GeoLocation& site);
BodyState moon_position(const Instant& t, const GeoLocation& site);

}  // namespace manazel
