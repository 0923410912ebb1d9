#include <cmath>

#include "manazel/ephemeris.hpp"

namespace manazel {

namespace {

constexpr double kDegToRad = 0.017453292519943295;
constexpr double kAuKm = 149597870.7;

double wrap360(double deg) {
    double x = std::fmod(deg, 360.0);
    return x < 0.0 ? x + 360.0 : x;
}

double sind(double deg) { return std::sin(deg * kDegToRad); }
double cosd(double deg) { return std::cos(deg * kDegToRad); }

}  // namespace

// Abridged nutation series: the four dominant terms (~0.5 arcsec accuracy),
// plenty under the position accuracy budget.
Nutation nutation(double jd_tt) {
    const double t = (jd_tt - 2451545.0) / 36525.0;
    const double omega = 125.04452 - 1934.136261 * t + 0.0020708 * t * t;
    const double lsun = 280.4665 + 36000.7698 * t;
    const double lmoon = 218.3165 + 481267.8813 * t;
    const double dpsi = -17.20 * sind(omega) - 1.32 * sind(2.0 * lsun) -
                        0.23 * sind(2.0 * lmoon) + 0.21 * sind(2.0 * omega);
    const double deps = 9.20 * cosd(omega) + 0.57 * cosd(2.0 * lsun) +
                        0.10 * cosd(2.0 * lmoon) - 0.09 * cosd(2.0 * omega);
    return {dpsi / 3600.0, deps / 3600.0};
}

double mean_obliquity_deg(double jd_tt) {
    const double t = (jd_tt - 2451545.0) / 36525.0;
    return 23.0 + 26.0 / 60.0 + 21.448 / 3600.0 -
           (46.8150 * t + 0.00059 * t * t - 0.001813 * t * t * t) / 3600.0;
}

double true_obliquity_deg(double jd_tt) {
    return mean_obliquity_deg(jd_tt) + nutation(jd_tt).deps_deg;
}

// Low-accuracy solar theory (two-body series with the leading perturbation
// terms): apparent longitude good to ~0.01 deg, radius vector to ~1e-5 AU.
EclipticPos sun_ecliptic(double jd_tt) {
    const double t = (jd_tt - 2451545.0) / 36525.0;

    const double l0 = 280.46646 + 36000.76983 * t + 0.0003032 * t * t;
    const double m = 357.52911 + 35999.05029 * t - 0.0001537 * t * t;
    const double e = 0.016708634 - 0.000042037 * t - 0.0000001267 * t * t;

    const double c = (1.914602 - 0.004817 * t - 0.000014 * t * t) * sind(m) +
                     (0.019993 - 0.000101 * t) * sind(2.0 * m) +
                     0.000289 * sind(3.0 * m);

    const double true_lon = l0 + c;
    const double nu = m + c;
    const double r = 1.000001018 * (1.0 - e * e) / (1.0 + e * cosd(nu));

    // Apparent longitude: nutation plus annual aberration.
    const double lam = true_lon + nutation(jd_tt).dpsi_deg - (20.4898 / 3600.0) / r;

    return {wrap360(lam), 0.0, r * kAuKm};
}

}  // namespace manazel
