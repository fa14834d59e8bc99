#pragma once

// Tzolk'in, Haab' and Calendar Round arithmetic. Day d maps to the residues
// mod(d + 160, 260) and mod(d + 349, 365); day 0 is 4 Ahau 8 Cumku.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "mayan/long_count.hpp"

namespace mayan {

inline constexpr std::int64_t kTzolkinLength = 260;
inline constexpr std::int64_t kHaabLength = 365;
inline constexpr std::int64_t kCalendarRoundLength = 18980;
inline constexpr std::int64_t kTzolkinEraOffset = 160;  // 4 Ahau
inline constexpr std::int64_t kHaabEraOffset = 349;     // 8 Cumku
inline constexpr std::int64_t kThirteenTunWheel = 4680;

inline constexpr std::array<std::string_view, 20> kTzolkinNames{
    "Imix", "Ik",   "Akbal", "Kan", "Chicchan", "Cimi",  "Manik",  "Lamat", "Muluc", "Oc",
    "Chuen", "Eb", "Ben",   "Ix",  "Men",      "Cib",   "Caban",  "Etznab", "Cauac", "Ahau"};

inline constexpr std::array<std::string_view, 19> kHaabMonths{
    "Pop", "Uo",  "Zip", "Zotz", "Tzec",  "Xul", "Yaxkin", "Mol",  "Chen", "Yax",
    "Zac", "Ceh", "Mac", "Kankin", "Muan", "Pax", "Kayab", "Cumku", "Uayeb"};

inline constexpr int kUayeb = 18;

/// A position in the 260-entry ordered list 1 Imix, 2 Ik, ..., 13 Ahau.
class TzolkinDate {
 public:
  /// 1 Imix.
  TzolkinDate() : TzolkinDate(1, 0, 1) {}
  /// list_index in [1, 260]; throws ValidationError otherwise.
  static TzolkinDate from_list_index(int list_index);
  /// number in [1, 13], name_index in [0, 19]; every combination exists.
  static TzolkinDate from_parts(int number, int name_index);

  int number() const { return number_; }
  int name_index() const { return name_index_; }
  int list_index() const { return list_index_; }
  std::string_view name() const { return kTzolkinNames[static_cast<std::size_t>(name_index_)]; }
  /// Residue mod 260 (list index 260 maps to 0).
  int residue() const { return list_index_ % 260; }

  friend bool operator==(const TzolkinDate&, const TzolkinDate&) = default;

 private:
  TzolkinDate(int number, int name_index, int list_index)
      : number_(number), name_index_(name_index), list_index_(list_index) {}
  int number_;
  int name_index_;
  int list_index_;
};

/// A position in the 365-entry ordered list 0 Pop, 1 Pop, ..., 4 Uayeb.
class HaabDate {
 public:
  /// 0 Pop.
  HaabDate() : HaabDate(0, 0, 1) {}
  static HaabDate from_list_index(int list_index);
  /// day in [0, 19] ([0, 4] for Uayeb), month_index in [0, 18].
  static HaabDate from_parts(int day, int month_index);

  int day() const { return day_; }
  int month_index() const { return month_index_; }
  int list_index() const { return list_index_; }
  std::string_view month() const { return kHaabMonths[static_cast<std::size_t>(month_index_)]; }
  int residue() const { return list_index_ % 365; }

  friend bool operator==(const HaabDate&, const HaabDate&) = default;

 private:
  HaabDate(int day, int month_index, int list_index)
      : day_(day), month_index_(month_index), list_index_(list_index) {}
  int day_;
  int month_index_;
  int list_index_;
};

struct CalendarRoundDate {
  TzolkinDate tzolkin;
  HaabDate haab;

  friend bool operator==(const CalendarRoundDate&, const CalendarRoundDate&) = default;
};

TzolkinDate tzolkin_of_day(DayNumber d);
HaabDate haab_of_day(DayNumber d);
CalendarRoundDate cr_of_day(DayNumber d);

/// True iff some day realizes the pair, i.e. the Tzolk'in and Haab'
/// residues differ by 1 mod 5.
bool is_valid_cr(const CalendarRoundDate& cr);

/// The unique d in [0, 18980) with cr_of_day(d) == cr. Throws InvalidDateError.
DayNumber day_of_cr(const CalendarRoundDate& cr);

/// "<1-13> <TzolkinName> <0-19> <HaabMonth>"; names match case-insensitively.
CalendarRoundDate parse_cr(std::string_view text);
std::string format_cr(const CalendarRoundDate& cr);
std::string format_tzolkin(const TzolkinDate& t);
std::string format_haab(const HaabDate& h);

/// Case-insensitive lookups; -1 when unknown.
int tzolkin_name_index(std::string_view name);
int haab_month_index(std::string_view name);

bool thirteen_tun_wheel_check(DayNumber d);

}  // namespace mayan
