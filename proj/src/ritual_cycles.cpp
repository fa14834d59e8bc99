#include "mayan/ritual_cycles.hpp"

#include "json.hpp"
#include "mayan/calendar_round.hpp"
#include "mayan/cycles.hpp"
#include "mayan/errors.hpp"

namespace mayan {

std::string_view to_string(DirectionColor c) {
  switch (c) {
    case DirectionColor::kEastRed: return "East-Red";
    case DirectionColor::kSouthYellow: return "South-Yellow";
    case DirectionColor::kWestBlack: return "West-Black";
    case DirectionColor::kNorthWhite: return "North-White";
  }
  return "unknown";
}

DirectionColor direction_color_from_label(std::string_view label) {
  for (int code = 0; code < 4; ++code) {
    const auto c = static_cast<DirectionColor>(code);
    if (to_string(c) == label) return c;
  }
  throw ValidationError("unknown direction-color '" + std::string(label) + "'");
}

DirectionColor color_of_station(std::int64_t station) {
  return static_cast<DirectionColor>(floor_mod(floor_mod(station, 4) * kKawilLength + 3, 4));
}

KawilStation kawil_station(DayNumber d, RitualAnchor anchor) {
  const std::int64_t t = d.value() - anchor.offset_days;
  const std::int64_t station = floor_div(t, kKawilLength);
  return {station, static_cast<int>(floor_mod(t, kKawilLength)), color_of_station(station),
          static_cast<int>(floor_mod(t, kKawilColorCycle))};
}

LordsPosition lords_position(DayNumber d, RitualAnchor anchor) {
  const std::int64_t t = d.value() - anchor.offset_days;
  return {static_cast<int>(floor_mod(t, 13)), static_cast<int>(floor_mod(t, 9)),
          static_cast<int>(floor_mod(t, kLordsCycle))};
}

KawilTunCoincidence kawil_tun_coincidence() {
  const auto days = static_cast<std::int64_t>(lcm(360, kKawilLength));
  const auto wheel = static_cast<std::int64_t>(lcm(kTzolkinLength, 360));
  return {days, days / wheel, days / kKawilColorCycle};
}

std::string ritual_row_json(DayNumber d, RitualAnchor anchor) {
  const auto k = kawil_station(d, anchor);
  const auto l = lords_position(d, anchor);
  nlohmann::ordered_json row{{"day", d.value()},
                             {"station", k.station},
                             {"day_in_kawil", k.day_in_kawil},
                             {"color", to_string(k.color)},
                             {"pos_3276", k.pos_3276},
                             {"day_lord", l.day_lord},
                             {"night_lord", l.night_lord},
                             {"pos_117", l.pos_117}};
  return row.dump();
}

}  // namespace mayan
