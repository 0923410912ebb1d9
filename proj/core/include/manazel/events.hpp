#pragma once

#include <optional>

#include "manazel/ephemeris.hpp"

namespace manazel {

// Horizon events for one evening. Lag is moonset minus sunset in minutes and
// may be negative (old moon setting first). When the Moon never sets inside
// the search window, `moonset` is absent and `lag_minutes` is meaningless.
// Best observation time follows the 4/9-lag rule and degenerates to sunset
// whenever lag <= 0.
struct EveningEvents {
    Instant sunset;
    std::optional<Instant> moonset;
    double lag_minutes = 0.0;
    Instant best_time;

    bool moonset_found() const { return moonset.has_value(); }
};

// Instant the Sun's airless altitude of center crosses -0.8333 deg going down
// (standard refraction + semidiameter allowance baked into the constant),
// searched from local noon of `date`. Throws NoEventError if the Sun never
// crosses (polar day/night).
Instant sunset_instant(const CivilDate& date, const GeoLocation& site);

// Moonset: topocentric altitude of center crosses -(0.5667 + semidiameter)
// deg descending, searched in [sunset - 6 h, sunset + 18 h].
std::optional<Instant> moonset_instant(const Instant& sunset, const GeoLocation& site);

EveningEvents evening_events(const CivilDate& date, const GeoLocation& site);

}  // namespace manazel
