#include "mayan/calendar_round.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "mayan/cycles.hpp"
#include "mayan/errors.hpp"

namespace mayan {

TzolkinDate TzolkinDate::from_list_index(int list_index) {
  if (list_index < 1 || list_index > 260) {
    throw ValidationError("Tzolk'in list index " + std::to_string(list_index) + " outside [1, 260]");
  }
  return TzolkinDate((list_index - 1) % 13 + 1, (list_index - 1) % 20, list_index);
}

TzolkinDate TzolkinDate::from_parts(int number, int name_index) {
  if (number < 1 || number > 13) throw ValidationError("Tzolk'in number outside [1, 13]");
  if (name_index < 0 || name_index > 19) throw ValidationError("Tzolk'in name index outside [0, 19]");
  const auto k = crt_pair(static_cast<u64>(number - 1), 13, static_cast<u64>(name_index), 20);
  return from_list_index(static_cast<int>(*k) + 1);
}

HaabDate HaabDate::from_list_index(int list_index) {
  if (list_index < 1 || list_index > 365) {
    throw ValidationError("Haab' list index " + std::to_string(list_index) + " outside [1, 365]");
  }
  return HaabDate((list_index - 1) % 20, (list_index - 1) / 20, list_index);
}

HaabDate HaabDate::from_parts(int day, int month_index) {
  if (month_index < 0 || month_index > kUayeb) throw ValidationError("Haab' month index outside [0, 18]");
  const int last = month_index == kUayeb ? 4 : 19;
  if (day < 0 || day > last) {
    throw ValidationError("Haab' day " + std::to_string(day) + " outside [0, " +
                          std::to_string(last) + "] for " +
                          std::string(kHaabMonths[static_cast<std::size_t>(month_index)]));
  }
  return from_list_index(month_index * 20 + day + 1);
}

namespace {

int to_list_index(std::int64_t residue, std::int64_t length) {
  return static_cast<int>(residue == 0 ? length : residue);
}

}  // namespace

TzolkinDate tzolkin_of_day(DayNumber d) {
  return TzolkinDate::from_list_index(
      to_list_index(floor_mod(d.value() + kTzolkinEraOffset, kTzolkinLength), kTzolkinLength));
}

HaabDate haab_of_day(DayNumber d) {
  return HaabDate::from_list_index(
      to_list_index(floor_mod(d.value() + kHaabEraOffset, kHaabLength), kHaabLength));
}

CalendarRoundDate cr_of_day(DayNumber d) { return {tzolkin_of_day(d), haab_of_day(d)}; }

bool is_valid_cr(const CalendarRoundDate& cr) {
  return floor_mod(cr.tzolkin.residue() - cr.haab.residue(), 5) == 1;
}

DayNumber day_of_cr(const CalendarRoundDate& cr) {
  // d ≡ residue - offset in each cycle
  const auto d = crt_pair(static_cast<u64>(floor_mod(cr.tzolkin.residue() - kTzolkinEraOffset, kTzolkinLength)),
                          kTzolkinLength,
                          static_cast<u64>(floor_mod(cr.haab.residue() - kHaabEraOffset, kHaabLength)),
                          kHaabLength);
  if (!d) throw InvalidDateError("Calendar Round date " + format_cr(cr) + " never occurs");
  return DayNumber(static_cast<std::int64_t>(*d));
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

template <std::size_t N>
int find_name(const std::array<std::string_view, N>& names, std::string_view name) {
  for (std::size_t i = 0; i < N; ++i)
    if (iequals(names[i], name)) return static_cast<int>(i);
  return -1;
}

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> split_ws(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

int parse_int(const Token& t) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected a number, got '" + std::string(t.text) + "'", t.pos);
  }
  return v;
}

}  // namespace

int tzolkin_name_index(std::string_view name) { return find_name(kTzolkinNames, name); }
int haab_month_index(std::string_view name) { return find_name(kHaabMonths, name); }

CalendarRoundDate parse_cr(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.size() != 4) {
    throw ParseError("expected '<number> <day name> <day> <month>'", tokens.empty() ? 0 : tokens.back().pos);
  }
  const int number = parse_int(tokens[0]);
  if (number < 1 || number > 13) throw ParseError("Tzolk'in number outside [1, 13]", tokens[0].pos);
  const int name = tzolkin_name_index(tokens[1].text);
  if (name < 0) throw ParseError("unknown Tzolk'in day name '" + std::string(tokens[1].text) + "'", tokens[1].pos);
  const int day = parse_int(tokens[2]);
  const int month = haab_month_index(tokens[3].text);
  if (month < 0) throw ParseError("unknown Haab' month '" + std::string(tokens[3].text) + "'", tokens[3].pos);
  const int last = month == kUayeb ? 4 : 19;
  if (day < 0 || day > last) throw ParseError("Haab' day outside [0, " + std::to_string(last) + "]", tokens[2].pos);
  return {TzolkinDate::from_parts(number, name), HaabDate::from_parts(day, month)};
}

std::string format_tzolkin(const TzolkinDate& t) {
  return std::to_string(t.number()) + ' ' + std::string(t.name());
}

std::string format_haab(const HaabDate& h) {
  return std::to_string(h.day()) + ' ' + std::string(h.month());
}

std::string format_cr(const CalendarRoundDate& cr) {
  return format_tzolkin(cr.tzolkin) + ' ' + format_haab(cr.haab);
}

bool thirteen_tun_wheel_check(DayNumber d) { return floor_mod(d.value(), kThirteenTunWheel) == 0; }

}  // namespace mayan
