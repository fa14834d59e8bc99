#pragma once

// Data-parallel kernels over ranges of day numbers. Every kernel has a
// serial reference with identical results; tests compare the two and
// bench/ times them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mayan/calendar_round.hpp"
#include "mayan/cycles.hpp"
#include "mayan/ritual_cycles.hpp"

namespace mayan {

struct DayRecord {
  std::int64_t day = 0;
  CalendarRoundDate cr;
  KawilStation kawil{};
  LordsPosition lords{};

  friend bool operator==(const DayRecord&, const DayRecord&) = default;
};

DayRecord day_record(std::int64_t day);

namespace serial {

std::vector<DayRecord> day_records(std::int64_t first, std::size_t count);
/// Number of distinct (Tzolk'in, Haab') pairs over [first, first + count).
std::size_t count_distinct_cr_pairs(std::int64_t first, std::size_t count);
/// Days in [first, first + count) whose Calendar Round does not invert to
/// floor_mod(day, 18980).
std::size_t cr_inverse_failures(std::int64_t first, std::size_t count);
/// Days d with day_from_lc(lc_from_day(d)) != d.
std::size_t lc_round_trip_failures(std::span<const std::int64_t> days);
/// n in [lo, hi] whose factorization is non-canonical, contains a composite,
/// or does not multiply back to n.
std::size_t factorization_failures(u64 lo, u64 hi);

}  // namespace serial

namespace parallel {

std::vector<DayRecord> day_records(std::int64_t first, std::size_t count);
std::size_t count_distinct_cr_pairs(std::int64_t first, std::size_t count);
std::size_t cr_inverse_failures(std::int64_t first, std::size_t count);
std::size_t lc_round_trip_failures(std::span<const std::int64_t> days);
std::size_t factorization_failures(u64 lo, u64 hi);

}  // namespace parallel

/// One full Calendar Round starting at the era base, as a JSON array of
/// {day, tzolkin, haab}.
std::string cr_table_json();

}  // namespace mayan
