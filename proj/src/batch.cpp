#include "mayan/batch.hpp"

#include <omp.h>

#include "json.hpp"
#include "mayan/long_count.hpp"

namespace mayan {

namespace {

std::size_t pair_slot(const CalendarRoundDate& cr) {
  return static_cast<std::size_t>(cr.tzolkin.list_index() - 1) * 365 +
         static_cast<std::size_t>(cr.haab.list_index() - 1);
}

constexpr std::size_t kPairSlots = 260 * 365;

bool is_prime_by_trial(u64 p) {
  if (p < 2) return false;
  for (u64 q = 2; q <= p / q; ++q)
    if (p % q == 0) return false;
  return true;
}

bool factorization_ok(u64 n) {
  const Factorization f = factorize(n);
  u64 prev = 0;
  for (const auto& pp : f.factors) {
    if (pp.prime <= prev || pp.exponent < 1 || !is_prime_by_trial(pp.prime)) return false;
    prev = pp.prime;
  }
  return f.product() == n;
}

bool lc_round_trips(std::int64_t d) {
  return day_from_lc(lc_from_day(DayNumber(d))).value() == d;
}

bool cr_inverts(std::int64_t d) {
  return day_of_cr(cr_of_day(DayNumber(d))).value() == floor_mod(d, kCalendarRoundLength);
}

}  // namespace

DayRecord day_record(std::int64_t day) {
  const DayNumber d(day);
  return {day, cr_of_day(d), kawil_station(d), lords_position(d)};
}

namespace serial {

std::vector<DayRecord> day_records(std::int64_t first, std::size_t count) {
  std::vector<DayRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(day_record(first + static_cast<std::int64_t>(i)));
  return out;
}

std::size_t count_distinct_cr_pairs(std::int64_t first, std::size_t count) {
  std::vector<unsigned char> seen(kPairSlots, 0);
  for (std::size_t i = 0; i < count; ++i)
    seen[pair_slot(cr_of_day(DayNumber(first + static_cast<std::int64_t>(i))))] = 1;
  std::size_t n = 0;
  for (auto s : seen) n += s;
  return n;
}

std::size_t cr_inverse_failures(std::int64_t first, std::size_t count) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) failures += !cr_inverts(first + static_cast<std::int64_t>(i));
  return failures;
}

std::size_t lc_round_trip_failures(std::span<const std::int64_t> days) {
  std::size_t failures = 0;
  for (auto d : days) failures += !lc_round_trips(d);
  return failures;
}

std::size_t factorization_failures(u64 lo, u64 hi) {
  std::size_t failures = 0;
  for (u64 n = lo; n <= hi; ++n) failures += !factorization_ok(n);
  return failures;
}

}  // namespace serial

namespace parallel {

std::vector<DayRecord> day_records(std::int64_t first, std::size_t count) {
  std::vector<DayRecord> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = day_record(first + i);
  return out;
}

std::size_t count_distinct_cr_pairs(std::int64_t first, std::size_t count) {
  std::vector<unsigned char> seen(kPairSlots, 0);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t slot = pair_slot(cr_of_day(DayNumber(first + i)));
#pragma omp atomic write
    seen[slot] = 1;
  }
  std::size_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(kPairSlots); ++s) total += seen[static_cast<std::size_t>(s)];
  return total;
}

std::size_t cr_inverse_failures(std::int64_t first, std::size_t count) {
  std::size_t failures = 0;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for reduction(+ : failures) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) failures += !cr_inverts(first + i);
  return failures;
}

std::size_t lc_round_trip_failures(std::span<const std::int64_t> days) {
  std::size_t failures = 0;
  const auto n = static_cast<std::int64_t>(days.size());
#pragma omp parallel for reduction(+ : failures) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) failures += !lc_round_trips(days[static_cast<std::size_t>(i)]);
  return failures;
}

std::size_t factorization_failures(u64 lo, u64 hi) {
  if (hi < lo) return 0;
  std::size_t failures = 0;
  const auto n = static_cast<std::int64_t>(hi - lo + 1);
  // Trial division cost grows with n, so hand out chunks dynamically.
#pragma omp parallel for reduction(+ : failures) schedule(dynamic, 4096)
  for (std::int64_t i = 0; i < n; ++i) failures += !factorization_ok(lo + static_cast<u64>(i));
  return failures;
}

}  // namespace parallel

std::string cr_table_json() {
  const auto records = parallel::day_records(0, static_cast<std::size_t>(kCalendarRoundLength));
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    arr.push_back({{"day", r.day}, {"tzolkin", format_tzolkin(r.cr.tzolkin)}, {"haab", format_haab(r.cr.haab)}});
  }
  return arr.dump() + "\n";
}

}  // namespace mayan
