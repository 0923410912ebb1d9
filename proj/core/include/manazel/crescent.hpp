#pragma once

#include "manazel/events.hpp"

namespace manazel {

enum class Zone { A, B, C, D };

char zone_letter(Zone z);
Zone zone_from_letter(char c);

// Empirical visibility criterion: V = arcv - cubic(w), partitioned into
// zones by the cut points below. Kept as data so alternative fits can be
// evaluated without recompiling call sites.
struct OdehCriterion {
    double c3 = -0.1018;
    double c2 = 0.7319;
    double c1 = -6.3226;
    double c0 = 7.1651;
    double min_a = 5.65;   // V >= min_a           -> A
    double min_b = 2.0;    // min_b <= V < min_a   -> B
    double min_c = -0.96;  // min_c <= V < min_b   -> C, below -> D
};

double odeh_value(double arcv_deg, double w_arcmin, const OdehCriterion& crit = {});
Zone classify_zone(double v, const OdehCriterion& crit = {});

struct OdehAssessment {
    double v = 0.0;
    Zone zone = Zone::D;
};

OdehAssessment assess_visibility(double arcv_deg, double w_arcmin,
                                 const OdehCriterion& crit = {});

// w = semidiameter * (1 - cos arcl): the lit sliver measured along the
// lunar diameter, in the semidiameter's unit (arcminutes here).
double crescent_width(double semidiameter_arcmin, double arcl_deg);

// Feature vector for one evening. arcv/daz are apparent topocentric
// differences; arcl comes from the spherical relation
// cos(arcl) = cos(arcv) * cos(daz). When lag <= 0 or the Moon never sets,
// fields are evaluated at sunset and `below_horizon` marks the evening
// not visible by construction (no model call needed).
struct CrescentGeometry {
    double arcv = 0.0;  // degrees
    double daz = 0.0;   // degrees, [0, 180]
    double arcl = 0.0;  // degrees, [0, 180]
    double w = 0.0;     // arcminutes
    double lag_minutes = 0.0;
    Instant evaluated_at;
    bool below_horizon = false;
};

CrescentGeometry compute_geometry(const CivilDate& date, const GeoLocation& site);

// Geometry at an explicit epoch (the best-time choice already made).
CrescentGeometry geometry_at(const Instant& t, const GeoLocation& site);

}  // namespace manazel
