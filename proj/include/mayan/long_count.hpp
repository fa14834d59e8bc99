#pragma once

// Long Count positional codec. Radices are 20 (Kin->Winal), 18 (Winal->Tun)
// and 20 for every higher place.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mayan {

/// Signed count of days since the era base 0.0.0.0.0 (4 Ahau 8 Cumku).
class DayNumber {
 public:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  constexpr DayNumber() = default;
  /// Throws DomainError unless |value| < 2^62.
  explicit DayNumber(std::int64_t value);

  constexpr std::int64_t value() const { return value_; }

  friend constexpr auto operator<=>(const DayNumber&, const DayNumber&) = default;

 private:
  std::int64_t value_ = 0;
};

enum class LongCountPeriod { kKin, kWinal, kTun, kKatun, kBaktun, kPictun, kCalabtun, kKinchiltun };

struct LongCountPeriodInfo {
  LongCountPeriod period;
  std::string_view name;
  std::int64_t length_days;
};

inline constexpr std::array<LongCountPeriodInfo, 8> kLongCountPeriods{{
    {LongCountPeriod::kKin, "Kin", 1},
    {LongCountPeriod::kWinal, "Winal", 20},
    {LongCountPeriod::kTun, "Tun", 360},
    {LongCountPeriod::kKatun, "Katun", 7200},
    {LongCountPeriod::kBaktun, "Baktun", 144000},
    {LongCountPeriod::kPictun, "Pictun", 2880000},
    {LongCountPeriod::kCalabtun, "Calabtun", 57600000},
    {LongCountPeriod::kKinchiltun, "Kinchiltun", 1152000000},
}};

inline constexpr std::int64_t kThirteenBaktunDays = 13 * 144000;  // 1,872,000
inline constexpr int kDefaultPlaces = 5;

/// Radix of place i (C0 counts Kin in base 20, C1 Winal in base 18, ...).
constexpr int place_radix(std::size_t i) { return i == 1 ? 18 : 20; }

/// Length in days of one unit at place i: 1, 20, 360, 18*20^(i-1).
/// Throws ArithmeticOverflow past the 62-bit day range.
std::int64_t place_value(std::size_t i);

/// Long Count coefficients in storage order: coefficients()[0] is C0 (Kin).
/// Always holds at least five places.
class LongCount {
 public:
  /// 0.0.0.0.0
  LongCount() : LongCount(kDefaultPlaces) {}
  /// All-zero date with `places` positions.
  explicit LongCount(int places);
  /// Coefficients in storage order (C0 first). Throws ValidationError on a
  /// non-canonical coefficient; pads to five places.
  explicit LongCount(std::vector<int> coefficients, std::optional<int> era_marker = std::nullopt);

  /// Coefficients most-significant first, as written: {9, 9, 16, 0, 0}.
  static LongCount from_written(const std::vector<int>& written,
                                std::optional<int> era_marker = std::nullopt);

  const std::vector<int>& coefficients() const { return coeffs_; }
  std::size_t places() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Presentation-only "(13)" style annotation on the leading place.
  const std::optional<int>& era_marker() const { return era_marker_; }

  /// Equality ignores the era marker and leading zero places.
  friend bool operator==(const LongCount& a, const LongCount& b);

 private:
  std::vector<int> coeffs_;
  std::optional<int> era_marker_;
};

/// Encodes d (>= 0) with at least `places` positions; widens as needed so
/// the encoding is never lossy. Throws DomainError for negative d or places < 5.
LongCount lc_from_day(DayNumber d, int places = kDefaultPlaces);

/// Exact inverse of lc_from_day.
DayNumber day_from_lc(const LongCount& lc);

/// d mod 1,872,000 (13 Baktun). Requires d >= 0.
DayNumber normalize_13_baktun(DayNumber d);

/// Parses `coeff ("." coeff)+` with coeff := digits | digits "(" digits ")".
/// The parenthesized marker is only accepted on the leading coefficient.
LongCount parse_lc(std::string_view text);

enum class EraStyle {
  kAsParsed,  ///< "0(13).0.0.0.0" when parsed that way, otherwise plain
  kPlain,     ///< drop the marker: "0.0.0.0.0"
  kThirteen,  ///< leading 0 with a (13) marker shows as "13.0.0.0.0"
};

std::string format_lc(const LongCount& lc, EraStyle style = EraStyle::kAsParsed);

}  // namespace mayan
