#pragma once

#include "manazel/errors.hpp"

namespace manazel {

// Observer site. Longitude is degrees east (Rabat is west of Greenwich,
// hence negative). Elevation bound admits the Dead Sea shore.
struct GeoLocation {
    double latitude = 0.0;  // degrees north, [-90, +90]
    double longitude = 0.0; // degrees east, [-180, +180]
    double elevation = 0.0; // meters, >= -430
};

void validate_location(const GeoLocation& site);

// The site Moroccan announcements are anchored to.
inline GeoLocation rabat() { return {34.02, -6.84, 75.0}; }

}  // namespace manazel
