#include "mayan/long_count.hpp"

#include <algorithm>
#include <charconv>

#include "mayan/errors.hpp"

namespace mayan {

DayNumber::DayNumber(std::int64_t value) : value_(value) {
  if (value >= kLimit || value <= -kLimit) {
    throw DomainError("day number " + std::to_string(value) + " outside the supported range");
  }
}

std::int64_t place_value(std::size_t i) {
  if (i == 0) return 1;
  std::int64_t v = 20;
  for (std::size_t k = 1; k < i; ++k) {
    const int radix = place_radix(k);
    if (v > DayNumber::kLimit / radix) throw ArithmeticOverflow("Long Count place out of range");
    v *= radix;
  }
  return v;
}

namespace {

void validate(const std::vector<int>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int radix = place_radix(i);
    if (coeffs[i] < 0 || coeffs[i] >= radix) {
      throw ValidationError("Long Count coefficient C" + std::to_string(i) + " = " +
                            std::to_string(coeffs[i]) + " outside [0, " +
                            std::to_string(radix - 1) + "]");
    }
  }
}

}  // namespace

LongCount::LongCount(int places) {
  if (places < kDefaultPlaces) throw DomainError("a Long Count needs at least five places");
  coeffs_.assign(static_cast<std::size_t>(places), 0);
}

LongCount::LongCount(std::vector<int> coefficients, std::optional<int> era_marker)
    : coeffs_(std::move(coefficients)), era_marker_(era_marker) {
  validate(coeffs_);
  if (coeffs_.size() < kDefaultPlaces) coeffs_.resize(kDefaultPlaces, 0);
}

LongCount LongCount::from_written(const std::vector<int>& written, std::optional<int> era_marker) {
  return LongCount(std::vector<int>(written.rbegin(), written.rend()), era_marker);
}

bool operator==(const LongCount& a, const LongCount& b) {
  const std::size_t n = std::max(a.places(), b.places());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.places() ? a.coeffs_[i] : 0;
    const int y = i < b.places() ? b.coeffs_[i] : 0;
    if (x != y) return false;
  }
  return true;
}

LongCount lc_from_day(DayNumber d, int places) {
  if (d.value() < 0) throw DomainError("the Long Count is undefined for negative day numbers");
  if (places < kDefaultPlaces) throw DomainError("a Long Count needs at least five places");
  std::vector<int> coeffs;
  std::int64_t rest = d.value();
  for (std::size_t i = 0; rest > 0 || coeffs.size() < static_cast<std::size_t>(places); ++i) {
    const int radix = place_radix(i);
    coeffs.push_back(static_cast<int>(rest % radix));
    rest /= radix;
  }
  return LongCount(std::move(coeffs));
}

DayNumber day_from_lc(const LongCount& lc) {
  const auto& c = lc.coefficients();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t unit = place_value(i);
    if (unit > (DayNumber::kLimit - 1 - total) / c[i]) {
      throw ArithmeticOverflow("Long Count value exceeds the supported day range");
    }
    total += c[i] * unit;
  }
  return DayNumber(total);
}

DayNumber normalize_13_baktun(DayNumber d) {
  if (d.value() < 0) throw DomainError("13-Baktun normalization requires d >= 0");
  return DayNumber(d.value() % kThirteenBaktunDays);
}

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

int read_number(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw ParseError("expected a decimal coefficient", start);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc{}) throw ParseError("coefficient too large", start);
  return value;
}

}  // namespace

LongCount parse_lc(std::string_view text) {
  std::vector<int> written;
  std::vector<std::size_t> starts;
  std::optional<int> marker;
  std::size_t pos = 0;
  while (true) {
    starts.push_back(pos);
    written.push_back(read_number(text, pos));
    if (pos < text.size() && text[pos] == '(') {
      if (written.size() != 1) throw ParseError("era marker only allowed on the leading place", pos);
      ++pos;
      marker = read_number(text, pos);
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
    }
    if (pos == text.size()) break;
    if (text[pos] != '.') throw ParseError("expected '.'", pos);
    ++pos;
  }
  if (written.size() < 2) throw ParseError("a Long Count needs at least two coefficients", 0);

  const std::size_t n = written.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t place = n - 1 - k;
    if (written[k] >= place_radix(place)) {
      throw ParseError("coefficient " + std::to_string(written[k]) + " out of range for place C" +
                           std::to_string(place),
                       starts[k]);
    }
  }
  return LongCount::from_written(written, marker);
}

std::string format_lc(const LongCount& lc, EraStyle style) {
  const auto& c = lc.coefficients();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const bool leading = k + 1 == c.size();
    if (leading && lc.era_marker() && style == EraStyle::kThirteen && c[k] == 0 &&
        *lc.era_marker() == 13) {
      out += "13";
    } else {
      out += std::to_string(c[k]);
      if (leading && lc.era_marker() && style == EraStyle::kAsParsed) {
        out += '(' + std::to_string(*lc.era_marker()) + ')';
      }
    }
    if (k != 0) out += '.';
  }
  return out;
}

}  // namespace mayan
