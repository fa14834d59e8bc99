#include "mayan/correlation.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <regex>

#include "mayan/errors.hpp"

namespace mayan {

namespace {

namespace chr = std::chrono;

// JDN of 1970-01-01, the std::chrono::sys_days epoch.
constexpr std::int64_t kUnixEpochJdn = 2440588;
constexpr std::int64_t kMaxYear = 32767;

constexpr std::array<std::string_view, 12> kMonthNames{
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

chr::year_month_day to_ymd(const GregorianDate& g) {
  return chr::year_month_day{chr::year{static_cast<int>(g.year)},
                             chr::month{static_cast<unsigned>(g.month)},
                             chr::day{static_cast<unsigned>(g.day)}};
}

}  // namespace

bool is_valid(const GregorianDate& g) {
  if (g.year < -kMaxYear || g.year > kMaxYear) return false;
  if (g.month < 1 || g.month > 12 || g.day < 1 || g.day > 31) return false;
  return to_ymd(g).ok();
}

std::int64_t jdn_of_day(DayNumber d, CorrelationConstant c) { return d.value() + c.jdn_at_era; }

DayNumber day_of_jdn(std::int64_t jdn, CorrelationConstant c) { return DayNumber(jdn - c.jdn_at_era); }

GregorianDate gregorian_of_jdn(std::int64_t jdn) {
  if (jdn < 0) throw DomainError("Julian Day Number must be non-negative");
  const chr::year_month_day ymd{chr::sys_days{chr::days{jdn - kUnixEpochJdn}}};
  const int year = static_cast<int>(ymd.year());
  if (!ymd.ok() || year > kMaxYear) throw DomainError("JDN " + std::to_string(jdn) + " outside the supported year range");
  return {year, static_cast<int>(static_cast<unsigned>(ymd.month())),
          static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

std::int64_t jdn_of_gregorian(const GregorianDate& g) {
  if (!is_valid(g)) throw ValidationError("invalid Gregorian date " + format_iso(g));
  return chr::sys_days{to_ymd(g)}.time_since_epoch().count() + kUnixEpochJdn;
}

GregorianDate gregorian_of_day(DayNumber d, CorrelationConstant c) {
  return gregorian_of_jdn(jdn_of_day(d, c));
}

DayNumber day_of_gregorian(const GregorianDate& g, CorrelationConstant c) {
  return day_of_jdn(jdn_of_gregorian(g), c);
}

std::string format_iso(const GregorianDate& g) {
  char buf[40];
  const char* sign = g.year < 0 ? "-" : (g.year > 9999 ? "+" : "");
  const long long abs_year = g.year < 0 ? -g.year : g.year;
  std::snprintf(buf, sizeof buf, "%s%04lld-%02d-%02d", sign, abs_year, g.month, g.day);
  return buf;
}

std::string format_human(const GregorianDate& g) {
  const std::string month =
      g.month >= 1 && g.month <= 12 ? std::string(kMonthNames[static_cast<std::size_t>(g.month - 1)]) : "?";
  const std::string era = g.year <= 0 ? std::to_string(1 - g.year) + " BC" : std::to_string(g.year) + " CE";
  return std::to_string(g.day) + ' ' + month + ' ' + era;
}

GregorianDate parse_gregorian(std::string_view text) {
  static const std::regex iso(R"(^\s*([+-]?)(\d{4,6})-(\d{2})-(\d{2})\s*$)");
  static const std::regex human(R"(^\s*(\d{1,2})\s+([A-Za-z]+)\s+(\d{1,6})(?:\s+([A-Za-z]+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  GregorianDate g;
  if (std::regex_match(s, m, iso)) {
    g.year = std::stoll(m[2].str());
    if (m[1] == "-") g.year = -g.year;
    g.month = std::stoi(m[3].str());
    g.day = std::stoi(m[4].str());
  } else if (std::regex_match(s, m, human)) {
    g.day = std::stoi(m[1].str());
    std::string name = m[2].str();
    for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    g.month = 0;
    for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
      std::string candidate(kMonthNames[i]);
      for (auto& ch : candidate) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (candidate == name) g.month = static_cast<int>(i) + 1;
    }
    if (g.month == 0) throw ParseError("unknown month name '" + m[2].str() + "'", static_cast<std::size_t>(m.position(2)));
    const std::int64_t year = std::stoll(m[3].str());
    std::string era = m[4].matched ? m[4].str() : "CE";
    for (auto& ch : era) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (era == "BC" || era == "BCE") {
      if (year < 1) throw ParseError("BC years start at 1", static_cast<std::size_t>(m.position(3)));
      g.year = 1 - year;
    } else if (era == "CE" || era == "AD") {
      g.year = year;
    } else {
      throw ParseError("unknown era '" + m[4].str() + "'", static_cast<std::size_t>(m.position(4)));
    }
  } else {
    throw ParseError("expected YYYY-MM-DD or 'D Month YYYY [BC|CE]'", 0);
  }
  if (!is_valid(g)) throw ValidationError("invalid Gregorian date " + format_iso(g));
  return g;
}

}  // namespace mayan
