#pragma once

// Kawil (819-day) stations with their direction-colors, the combined
// 3276-day cycle, and the 13/9/117-day Lords of the Day and Night.

#include <cstdint>
#include <string>
#include <string_view>

#include "mayan/long_count.hpp"

namespace mayan {

inline constexpr std::int64_t kKawilLength = 819;
inline constexpr std::int64_t kKawilColorCycle = 3276;
inline constexpr std::int64_t kLordsCycle = 117;

enum class DirectionColor : int { kNorthWhite = 0, kWestBlack = 1, kSouthYellow = 2, kEastRed = 3 };

std::string_view to_string(DirectionColor c);
/// Inverse of to_string; throws ValidationError for an unknown label.
DirectionColor direction_color_from_label(std::string_view label);

/// Shifts the origin of every ritual count; zero anchors them at the era base.
struct RitualAnchor {
  std::int64_t offset_days = 0;
};

struct KawilStation {
  std::int64_t station;     // floor((d - offset) / 819)
  int day_in_kawil;         // [0, 818]
  DirectionColor color;     // mod(station * 819 + 3, 4)
  int pos_3276;             // [0, 3275]

  friend bool operator==(const KawilStation&, const KawilStation&) = default;
};

struct LordsPosition {
  int day_lord;    // [0, 12]
  int night_lord;  // [0, 8]
  int pos_117;     // [0, 116]

  friend bool operator==(const LordsPosition&, const LordsPosition&) = default;
};

DirectionColor color_of_station(std::int64_t station);
KawilStation kawil_station(DayNumber d, RitualAnchor anchor = {});
LordsPosition lords_position(DayNumber d, RitualAnchor anchor = {});

struct KawilTunCoincidence {
  std::int64_t days;                 // lcm(360, 819)
  std::int64_t tun_wheel_multiple;   // days / lcm(260, 360)
  std::int64_t color_cycle_multiple; // days / 3276
};

KawilTunCoincidence kawil_tun_coincidence();

/// {day, station, day_in_kawil, color, pos_3276, day_lord, night_lord, pos_117}
std::string ritual_row_json(DayNumber d, RitualAnchor anchor = {});

}  // namespace mayan
