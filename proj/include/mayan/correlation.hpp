#pragma once

// Day number <-> Julian Day Number <-> proleptic Gregorian date.

#include <cstdint>
#include <string>
#include <string_view>

#include "mayan/long_count.hpp"

namespace mayan {

/// Astronomical year numbering: 1 BC is year 0, 3114 BC is year -3113.
struct GregorianDate {
  std::int64_t year = 1970;
  int month = 1;
  int day = 1;

  friend auto operator<=>(const GregorianDate&, const GregorianDate&) = default;
};

/// Julian Day Number of the era base. 584283 is the GMT value.
struct CorrelationConstant {
  std::int64_t jdn_at_era = 584283;
};

inline constexpr std::int64_t kGmtCorrelation = 584283;

bool is_valid(const GregorianDate& g);

std::int64_t jdn_of_day(DayNumber d, CorrelationConstant c = {});
DayNumber day_of_jdn(std::int64_t jdn, CorrelationConstant c = {});

/// jdn >= 0; throws DomainError otherwise or when the year leaves [-32767, 32767].
GregorianDate gregorian_of_jdn(std::int64_t jdn);
/// Throws ValidationError for an invalid civil date.
std::int64_t jdn_of_gregorian(const GregorianDate& g);

GregorianDate gregorian_of_day(DayNumber d, CorrelationConstant c = {});
DayNumber day_of_gregorian(const GregorianDate& g, CorrelationConstant c = {});

/// ISO-8601 with extended years: "-3113-08-11", "0219-02-05", "2012-12-21".
std::string format_iso(const GregorianDate& g);
/// "11 August 3114 BC", "21 December 2012 CE".
std::string format_human(const GregorianDate& g);

/// Accepts either format_iso or format_human output; the era suffix
/// (BC, BCE, CE, AD) is optional and defaults to CE. Throws ParseError or
/// ValidationError.
GregorianDate parse_gregorian(std::string_view text);

}  // namespace mayan
